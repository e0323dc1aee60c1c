#include "kerov/kerov.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kerov/combinatorics.hpp"
#include "kerov/marriage.hpp"
#include "kerov/permutation.hpp"

namespace kerov {

namespace {

struct ShardAccumulator {
  CumulantPolynomial polynomial;
  EnumerationStats stats;
};

void accumulate_pair(const Permutation& s1, const Permutation& s2,
                     bool require_transitive, ShardAccumulator& acc) {
  ++acc.stats.factorizations;
  if (require_transitive && !is_transitive({s1, s2}, s1.degree())) return;
  const auto whites = cycles(s1);
  const auto blacks = cycles(s2);
  const int total = static_cast<int>(whites.size() + blacks.size());
  const int m = static_cast<int>(blacks.size());
  if (total < 2 * m) return;  // no coloring with all colors >= 2 fits
  IntersectionGraph graph = build_intersection_graph(whites, blacks, s1.degree());
  if (has_disconnecting_edge(graph)) {
    ++acc.stats.pruned;
    return;
  }
  for_each_composition(total, m, 2, [&](const std::vector<int>& coloring) {
    if (!marriage_condition(graph, coloring)) return;
    ++acc.stats.triples;
    acc.polynomial.add_term(monomial_from_indices(coloring), 1);
  });
}

KerovResult enumerate(const Permutation& target, bool require_transitive,
                      std::vector<int> cycle_lengths, int threads) {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const int shard_count = std::min(threads, target.degree());
  std::vector<ShardAccumulator> shards(shard_count);
  if (shard_count == 1) {
    enumerate_factorizations(target, [&](const Permutation& s1,
                                         const Permutation& s2) {
      accumulate_pair(s1, s2, require_transitive, shards[0]);
    });
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shard_count);
    for (int s = 0; s < shard_count; ++s) {
      workers.emplace_back([&, s] {
        enumerate_factorizations_shard(
            target, s, shard_count,
            [&, s](const Permutation& s1, const Permutation& s2) {
              accumulate_pair(s1, s2, require_transitive, shards[s]);
            });
      });
    }
    for (auto& w : workers) w.join();
  }
  KerovResult result;
  result.cycle_lengths = std::move(cycle_lengths);
  for (auto& shard : shards) {
    result.polynomial += shard.polynomial;
    result.stats.factorizations += shard.stats.factorizations;
    result.stats.pruned += shard.stats.pruned;
    result.stats.triples += shard.stats.triples;
  }
  return result;
}

}  // namespace

KerovResult kerov_polynomial(int k, int threads) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return enumerate(Permutation::long_cycle(k), false, {k}, threads);
}

KerovResult generalized_kerov(const std::vector<int>& parts, int threads) {
  if (parts.empty()) throw std::invalid_argument("parts must be nonempty");
  return enumerate(Permutation::multi_cycle(parts), true, parts, threads);
}

std::uint64_t linear_coefficient(int k, int l) {
  if (k < 1 || l < 2) throw std::invalid_argument("need k >= 1, l >= 2");
  std::uint64_t count = 0;
  enumerate_factorizations(
      Permutation::long_cycle(k),
      [&](const Permutation& s1, const Permutation& s2) {
        if (cycle_count(s2) == 1 && cycle_count(s1) == l - 1) ++count;
      });
  return count;
}

std::uint64_t quadratic_coefficient(int k, int l1, int l2) {
  if (k < 1 || l1 < 2 || l2 < 2)
    throw std::invalid_argument("need k >= 1, l1, l2 >= 2");
  std::uint64_t count = 0;
  enumerate_factorizations(
      Permutation::long_cycle(k),
      [&](const Permutation& s1, const Permutation& s2) {
        const auto blacks = cycles(s2);
        if (blacks.size() != 2) return;
        if (cycle_count(s1) != l1 + l2 - 2) return;
        IntersectionGraph g =
            build_intersection_graph(cycles(s1), blacks, s1.degree());
        auto fits = [&](int qa, int qb) {
          return std::popcount(g.black_whites[0]) >= qa &&
                 std::popcount(g.black_whites[1]) >= qb;
        };
        if (fits(l1, l2)) ++count;
        if (l1 != l2 && fits(l2, l1)) ++count;
      });
  return count;
}

PrimeDivisibilityReport prime_divisibility_report(int p, int threads) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
  PrimeDivisibilityReport report;
  report.p = p;
  CumulantPolynomial top = kerov_polynomial(p, threads).polynomial;
  top.add_term(Monomial{{p + 1, 1}}, Rat(-1));
  top.add_term(Monomial{{2, 1}}, Rat(2));
  top /= Rat(p);
  CumulantPolynomial lower = kerov_polynomial(p - 1, threads).polynomial;
  lower.add_term(Monomial{{p, 1}}, Rat(-1));
  lower /= Rat(p);
  for (const auto* poly : {&top, &lower}) {
    if (!poly->coefficients_integral() || !poly->coefficients_nonnegative())
      throw std::logic_error("prime divisibility violated: enumeration bug");
  }
  report.sigma_quotient = std::move(top);
  report.lower_quotient = std::move(lower);
  return report;
}

}  // namespace kerov
