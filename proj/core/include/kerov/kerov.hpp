#pragma once

#include <cstdint>
#include <vector>

#include "kerov/polynomial.hpp"

namespace kerov {

struct EnumerationStats {
  std::uint64_t factorizations = 0;
  std::uint64_t pruned = 0;
  std::uint64_t triples = 0;
};

struct KerovResult {
  std::vector<int> cycle_lengths;
  CumulantPolynomial polynomial;
  EnumerationStats stats;
};

// K_k by direct triple counting: for every factorization s1 * s2 of the
// k-cycle and every coloring q of the cycles of s2 with colors >= 2 summing
// to |C(s1)| + |C(s2)|, the coefficient of prod R_{q(b)} counts the triples
// passing the marriage condition. Shards over s2 when threads > 1; the
// result is independent of the thread count.
KerovResult kerov_polynomial(int k, int threads = 1);

// Same enumeration for a product of disjoint cycles, restricted to pairs
// generating a transitive group. Equals (-1)^(l-1) kappa^id(Sigma_{k_1}, ...)
// rewritten in free cumulants.
KerovResult generalized_kerov(const std::vector<int>& parts, int threads = 1);

// Factorizations of the k-cycle with s2 a single cycle and l-1 cycles in s1;
// equals the coefficient of R_l in K_k.
std::uint64_t linear_coefficient(int k, int l);

// Triples with s2 two cycles, |C(s1)| = l1 + l2 - 2, a surjective coloring
// onto {l1, l2} and the per-cycle neighborhood bound; equals the coefficient
// of R_{l1} R_{l2} in K_k.
std::uint64_t quadratic_coefficient(int k, int l1, int l2);

struct PrimeDivisibilityReport {
  int p;
  CumulantPolynomial sigma_quotient;  // (K_p - R_{p+1} + 2 R_2) / p
  CumulantPolynomial lower_quotient;  // (K_{p-1} - R_p) / p
};

// Throws if either quotient fails to have nonnegative integer coefficients
// (it cannot, short of an implementation bug).
PrimeDivisibilityReport prime_divisibility_report(int p, int threads = 1);

}  // namespace kerov
