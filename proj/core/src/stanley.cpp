#include "kerov/stanley.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "kerov/combinatorics.hpp"
#include "kerov/kerov.hpp"
#include "kerov/permutation.hpp"

namespace kerov {

StanleyPolynomial::StanleyPolynomial(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("need at least one rectangle");
}

void StanleyPolynomial::add(const Key& key, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(key.first.size()) != m_ ||
      static_cast<int>(key.second.size()) != m_)
    throw std::invalid_argument("exponent vector length mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat StanleyPolynomial::coefficient(std::vector<int> p_exps,
                                   std::vector<int> q_exps) const {
  if (static_cast<int>(p_exps.size()) > m_ ||
      static_cast<int>(q_exps.size()) > m_)
    throw std::invalid_argument("more exponents than rectangles");
  p_exps.resize(m_, 0);
  q_exps.resize(m_, 0);
  auto it = terms_.find({p_exps, q_exps});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat StanleyPolynomial::evaluate(const std::vector<Rat>& p,
                                const std::vector<Rat>& q) const {
  if (static_cast<int>(p.size()) != m_ || static_cast<int>(q.size()) != m_)
    throw std::invalid_argument("value vector length mismatch");
  Rat total = 0;
  for (const auto& [key, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < m_; ++i) {
      if (key.first[i]) t *= rat_pow(p[i], key.first[i]);
      if (key.second[i]) t *= rat_pow(q[i], key.second[i]);
    }
    total += t;
  }
  return total;
}

StanleyPolynomial stanley_character(const std::vector<int>& parts, int m,
                                    bool transitive_only) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  StanleyPolynomial out(m);
  const Permutation target = Permutation::multi_cycle(parts);
  enumerate_factorizations(target, [&](const Permutation& s1,
                                       const Permutation& s2) {
    if (transitive_only && !is_transitive({s1, s2}, n)) return;
    const auto whites = cycles(s1);
    const auto blacks = cycles(s2);
    const int nw = static_cast<int>(whites.size());
    const int nb = static_cast<int>(blacks.size());
    const Rat sgn((n - nw) % 2 == 0 ? 1 : -1);
    // white w meets black b
    std::vector<std::uint64_t> white_support(nw, 0);
    for (int w = 0; w < nw; ++w)
      for (int x : whites[w]) white_support[w] |= std::uint64_t(1) << x;
    std::vector<std::vector<int>> meets(nw);
    for (int b = 0; b < nb; ++b) {
      std::uint64_t support = 0;
      for (int x : blacks[b]) support |= std::uint64_t(1) << x;
      for (int w = 0; w < nw; ++w)
        if (white_support[w] & support) meets[w].push_back(b);
    }
    std::vector<int> phi2(nb, 0);  // colors 0-based internally
    std::vector<int> p_exp(m), q_exp(m);
    auto emit = [&] {
      std::fill(p_exp.begin(), p_exp.end(), 0);
      std::fill(q_exp.begin(), q_exp.end(), 0);
      for (int b = 0; b < nb; ++b) ++p_exp[phi2[b]];
      for (int w = 0; w < nw; ++w) {
        int mx = 0;
        for (int b : meets[w]) mx = std::max(mx, phi2[b]);
        ++q_exp[mx];
      }
      out.add({p_exp, q_exp}, sgn);
    };
    // odometer over phi2 in {0..m-1}^nb
    for (;;) {
      emit();
      int pos = nb - 1;
      while (pos >= 0 && phi2[pos] == m - 1) phi2[pos--] = 0;
      if (pos < 0) break;
      ++phi2[pos];
    }
  });
  return out;
}

Rat nn_quantity(const StanleyPolynomial& spoly,
                const std::vector<std::pair<int, int>>& pairs) {
  if (static_cast<int>(pairs.size()) > spoly.rectangle_count())
    throw std::invalid_argument("more pairs than rectangles");
  Rat weight = 1;
  std::vector<int> p_exps, q_exps;
  for (auto [a, b] : pairs) {
    if (a < 2 || b < 1) throw std::invalid_argument("need a >= 2, b >= 1");
    Rat w(falling_factorial(a - 1, b - 1));
    if (b % 2 == 0) w = -w;
    weight *= w;
    p_exps.push_back(1);
    q_exps.push_back(a - 1);
  }
  return weight * spoly.coefficient(std::move(p_exps), std::move(q_exps));
}

namespace {

void multisets_min2(int budget, int minv, std::vector<int>& acc,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (!acc.empty()) visit(acc);
  for (int v = minv; v <= budget; ++v) {
    acc.push_back(v);
    multisets_min2(budget - v, v, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

CumulantPolynomial kerov_via_derivatives(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::map<int, StanleyPolynomial> sweeps;  // by rectangle count
  auto sweep = [&](int m) -> const StanleyPolynomial& {
    auto it = sweeps.find(m);
    if (it == sweeps.end())
      it = sweeps.emplace(m, stanley_character({k}, m)).first;
    return it->second;
  };
  CumulantPolynomial out;
  std::vector<int> acc;
  multisets_min2(k + 1, 2, acc, [&](const std::vector<int>& ns) {
    const int r = static_cast<int>(ns.size());
    Rat derivative = 0;
    for_each_set_partition(r, [&](const std::vector<std::vector<int>>& blocks) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& block : blocks) {
        int total = 0;
        for (int i : block) total += ns[i];
        pairs.emplace_back(total, static_cast<int>(block.size()));
      }
      Rat value = nn_quantity(sweep(static_cast<int>(blocks.size())), pairs);
      if ((r - static_cast<int>(blocks.size())) % 2 != 0) value = -value;
      derivative += value;
    });
    if (derivative == 0) return;
    // monomial coefficient = derivative / prod of multiplicity factorials
    Monomial mono = monomial_from_indices(ns);
    Rat mult = 1;
    for (auto [idx, e] : mono) mult *= Rat(factorial(e));
    out.add_term(mono, derivative / mult);
  });
  return out;
}

bool quadratic_identity_check(int k, int l1, int l2) {
  if (k < 1 || l1 < 2 || l2 < 2)
    throw std::invalid_argument("need k >= 1, l1, l2 >= 2");
  StanleyPolynomial sp = stanley_character({k}, 2);
  Rat rhs = sp.coefficient({1, 1}, {l1 - 1, l2 - 1}) -
            sp.coefficient({1, 1}, {0, l1 + l2 - 2});
  Rat lhs =
      kerov_polynomial(k).polynomial.derivative_at_zero(std::vector<int>{l1, l2});
  return lhs == rhs;
}

}  // namespace kerov
