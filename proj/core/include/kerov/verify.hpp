#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kerov {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // failures carry minimal counterexamples
  bool seeded = false;
  std::uint64_t seed = 0;
  double seconds = 0;
};

struct RunReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::string format_report(const RunReport& report);

// Master identity: MN oracle Sigma_k equals K_k at the diagram's free
// cumulants (and the Frobenius route agrees) for |lambda| <= max_boxes,
// k <= max_k.
CheckResult verify_oracle_identity(int max_boxes, int max_k);

// Generalized polynomials against (-1)^(l-1) kappa^id for all cycle-length
// multisets with sum <= max_sum, evaluated on |lambda| <= max_boxes.
CheckResult verify_generalized(int max_sum, int max_boxes);

// kerov_via_derivatives == kerov_polynomial for k <= max_k.
CheckResult verify_dual_route(int max_k);

// Linear and quadratic special-case counters against the enumerator, plus
// the mixed-derivative identity.
CheckResult verify_linear_quadratic(int max_k);

// Marriage == double-marriage == q-admissibility over every factorization
// and admissible coloring for k <= max_k; disconnecting-edge pruning is
// sound.
CheckResult verify_condition_equivalence(int max_k);

// Euler characteristic of closure families, the Stirling alternating sum,
// and the three chain-sum identities, brute-forced.
CheckResult verify_lemmas(std::uint64_t seed);

// (K_p - R_{p+1} + 2 R_2)/p and (K_{p-1} - R_p)/p have nonnegative integer
// coefficients.
CheckResult verify_divisibility(const std::vector<int>& primes);

// R_k(s d) = s^k R_k(d) and S_n(s d) = s^n S_n(d) on random diagrams.
CheckResult verify_homogeneity(std::uint64_t seed, int diagram_count);

// M/R/S roundtrips, the non-crossing-partition brute force, the commuting
// square, and the symbolic derivative consistency.
CheckResult verify_series_calculus(std::uint64_t seed);

// Asserts the derived small Goulden-Rattan rewrites and reports the
// nonnegativity verdict for k <= max_k without failing on it.
CheckResult verify_goulden_rattan(int max_k);

}  // namespace kerov
