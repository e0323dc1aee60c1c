#include "kerov/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kerov {

namespace {

void set_partition_rec(
    int n, int next, std::vector<std::vector<int>>& blocks,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (next == n) {
    visit(blocks);
    return;
  }
  const std::size_t existing = blocks.size();
  for (std::size_t i = 0; i < existing; ++i) {
    blocks[i].push_back(next);
    set_partition_rec(n, next + 1, blocks, visit);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  set_partition_rec(n, next + 1, blocks, visit);
  blocks.pop_back();
}

void composition_rec(int remaining, int parts, int min_part,
                     std::vector<int>& acc,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (remaining == 0) visit(acc);
    return;
  }
  for (int v = min_part; v <= remaining - min_part * (parts - 1); ++v) {
    acc.push_back(v);
    composition_rec(remaining - v, parts - 1, min_part, acc, visit);
    acc.pop_back();
  }
}

void partition_rec(int remaining, int maxpart, std::vector<int>& acc,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(acc);
    return;
  }
  for (int v = std::min(remaining, maxpart); v >= 1; --v) {
    acc.push_back(v);
    partition_rec(remaining - v, v, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

void for_each_set_partition(
    int n,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::vector<int>> blocks;
  set_partition_rec(n, 0, blocks, visit);
}

void for_each_composition(
    int total, int parts, int min_part,
    const std::function<void(const std::vector<int>&)>& visit) {
  if (parts < 0) throw std::invalid_argument("parts must be nonnegative");
  std::vector<int> acc;
  composition_rec(total, parts, min_part, acc, visit);
}

void for_each_partition(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<int> acc;
  partition_rec(n, n, acc, visit);
}

Int chain_euler_characteristic(const std::vector<std::uint64_t>& family) {
  std::vector<std::uint64_t> fam = family;
  std::sort(fam.begin(), fam.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  // g(s) = signed count of chains ending at s: g(s) = 1 - sum_{t < s} g(t).
  std::vector<Int> g(fam.size());
  Int chi = 0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Int v = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (fam[j] != fam[i] && (fam[j] & fam[i]) == fam[j]) v -= g[j];
    g[i] = v;
    chi += v;
  }
  return chi;
}

Int chain_alternating_sum(const std::vector<std::uint64_t>& family) {
  return 1 - chain_euler_characteristic(family);
}

Int stirling_alternating_sum(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  // stir[k] = S(n, k) built row by row.
  std::vector<Int> stir(n + 1, 0), next(n + 1, 0);
  stir[0] = 1;
  for (int row = 1; row <= n; ++row) {
    for (int k = 1; k <= row; ++k) next[k] = Int(k) * stir[k] + stir[k - 1];
    next[0] = 0;
    std::swap(stir, next);
  }
  Int total = 0, kfact = 1;
  for (int k = 1; k <= n; ++k) {
    kfact *= k;
    Int term = stir[k] * kfact;
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace kerov
