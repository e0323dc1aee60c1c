#include "kerov/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "kerov/combinatorics.hpp"

namespace kerov {

namespace {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

}  // namespace

Int CharacterOracle::character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || (!mu.empty() && !is_partition(mu)))
    throw std::invalid_argument("arguments must be partitions");
  if (weight(lambda) != weight(mu))
    throw std::invalid_argument("|mu| must equal |lambda|");
  return character_locked(lambda, mu);
}

Int CharacterOracle::character_locked(const Partition& lambda,
                                      const Partition& mu) {
  if (mu.empty()) return 1;
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // Remove a border strip of length mu[0] through beta numbers
  // beta_i = lambda_i + m - 1 - i; strip removal replaces beta_i by
  // beta_i - r, sign (-1)^(number of beta values passed over).
  const int r = mu[0];
  const int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + m - 1 - i;
  Partition rest(mu.begin() + 1, mu.end());
  Int total = 0;
  for (int i = 0; i < m; ++i) {
    const int nb = beta[i] - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (nb < x && x < beta[i]) ++height;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Partition nlam;
    for (int j = 0; j < m; ++j) {
      int row = nbeta[j] - (m - 1 - j);
      if (row > 0) nlam.push_back(row);
    }
    Int sub = character_locked(nlam, rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  {
    std::unique_lock lock(mutex_);
    memo_.emplace(key, total);
  }
  return total;
}

Int CharacterOracle::dimension(const Partition& lambda) {
  return character(lambda, Partition(weight(lambda), 1));
}

Rat CharacterOracle::normalized_character(const Partition& lambda,
                                          const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
  const int n = weight(lambda);
  const int k = std::accumulate(parts.begin(), parts.end(), 0);
  if (k > n) return Rat(0);
  std::vector<int> mu = parts;
  mu.insert(mu.end(), n - k, 1);
  Rat value(falling_factorial(n, k));
  value *= Rat(character(lambda, sorted_desc(std::move(mu))));
  value /= Rat(dimension(lambda));
  return value;
}

Rat CharacterOracle::cycle_cumulant(const Partition& lambda,
                                    const std::vector<int>& ks) {
  const int l = static_cast<int>(ks.size());
  if (l == 0) throw std::invalid_argument("need at least one cycle length");
  Rat total = 0;
  for_each_set_partition(l, [&](const std::vector<std::vector<int>>& blocks) {
    const int nb = static_cast<int>(blocks.size());
    Rat term(factorial(nb - 1));
    if (nb % 2 == 0) term = -term;
    for (const auto& b : blocks) {
      std::vector<int> sub;
      for (int i : b) sub.push_back(ks[i]);
      term *= normalized_character(lambda, sub);
    }
    total += term;
  });
  return total;
}

}  // namespace kerov
