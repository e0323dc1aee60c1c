#include <doctest.h>

#include <stdexcept>

#include "kerov/characters.hpp"
#include "kerov/diagram.hpp"
#include "kerov/kerov.hpp"

using namespace kerov;

namespace {

CumulantPolynomial from_list(
    const std::vector<std::pair<std::vector<int>, long>>& terms) {
  CumulantPolynomial p;
  for (const auto& [indices, c] : terms)
    p.add_term(monomial_from_indices(indices), Rat(c));
  return p;
}

// The classical list.
CumulantPolynomial expected_kerov(int k) {
  switch (k) {
    case 1: return from_list({{{2}, 1}});
    case 2: return from_list({{{3}, 1}});
    case 3: return from_list({{{4}, 1}, {{2}, 1}});
    case 4: return from_list({{{5}, 1}, {{3}, 5}});
    case 5: return from_list({{{6}, 1}, {{4}, 15}, {{2, 2}, 5}, {{2}, 8}});
    case 6: return from_list({{{7}, 1}, {{5}, 35}, {{3, 2}, 35}, {{3}, 84}});
    case 7:
      return from_list({{{8}, 1},
                        {{6}, 70},
                        {{4, 2}, 84},
                        {{3, 3}, 56},
                        {{2, 2, 2}, 14},
                        {{4}, 469},
                        {{2, 2}, 224},
                        {{2}, 180}});
    default: return {};
  }
}

}  // namespace

TEST_CASE("golden polynomials K_1 .. K_7") {
  for (int k = 1; k <= 7; ++k) {
    KerovResult r = kerov_polynomial(k);
    CHECK(r.polynomial == expected_kerov(k));
    CHECK(r.stats.factorizations == static_cast<std::uint64_t>(
                                        factorial(k).get_ui()));
  }
  CHECK(kerov_polynomial(6).polynomial.to_text() ==
        "R7 + 35 R5 + 35 R3 R2 + 84 R3");
  CHECK(kerov_polynomial(7).polynomial.to_text() ==
        "R8 + 70 R6 + 84 R4 R2 + 56 R3^2 + 14 R2^3 + 469 R4 + 224 R2^2 + "
        "180 R2");
}

TEST_CASE("polynomial structure for k <= 7") {
  for (int k = 1; k <= 7; ++k) {
    CumulantPolynomial p = kerov_polynomial(k).polynomial;
    CHECK(p.coefficients_integral());
    CHECK(p.coefficients_nonnegative());
    CHECK(p.coefficient(Monomial{{k + 1, 1}}) == 1);  // leading term
    for (const auto& [m, c] : p.terms()) {
      long deg = weighted_degree(m);
      CHECK(deg <= k + 1);
      CHECK((deg - (k + 1)) % 2 == 0);
      CHECK(m.front().first >= 2);
    }
  }
}

TEST_CASE("thread count never changes the result") {
  KerovResult base = kerov_polynomial(6);
  for (int threads : {2, 3, 8}) {
    KerovResult r = kerov_polynomial(6, threads);
    CHECK(r.polynomial == base.polynomial);
    CHECK(r.stats.factorizations == base.stats.factorizations);
    CHECK(r.stats.triples == base.stats.triples);
  }
  KerovResult gen = generalized_kerov({2, 2}, 4);
  CHECK(gen.polynomial == generalized_kerov({2, 2}).polynomial);
}

TEST_CASE("generalized polynomials") {
  CHECK(generalized_kerov({1, 1}).polynomial ==
        CumulantPolynomial::variable(2));
  for (int k = 1; k <= 5; ++k)
    CHECK(generalized_kerov({k}).polynomial == kerov_polynomial(k).polynomial);

  // frozen small cases, cross-checked against the cumulant oracle
  CHECK(generalized_kerov({2, 1}).polynomial ==
        CumulantPolynomial::variable(3) * Rat(2));
  CumulantPolynomial k22 = CumulantPolynomial::variable(4) * Rat(4) +
                           CumulantPolynomial::variable(2) * Rat(2);
  k22.add_term(monomial_from_indices({2, 2}), 2);
  CHECK(generalized_kerov({2, 2}).polynomial == k22);
  CHECK(generalized_kerov({3, 1}).polynomial ==
        CumulantPolynomial::variable(4) * Rat(3) +
            CumulantPolynomial::variable(2) * Rat(3));

  CharacterOracle oracle;
  for (const auto& parts : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 1}}) {
    CumulantPolynomial poly = generalized_kerov(parts).polynomial;
    const int l = static_cast<int>(parts.size());
    for (const Partition& lam :
         {Partition{3, 1}, Partition{2, 2, 1}, Partition{4, 2}}) {
      TruncatedSeries r = free_cumulants(MultiRectangular::from_partition(lam), 8);
      Rat kappa = oracle.cycle_cumulant(lam, parts);
      if (l % 2 == 0) kappa = -kappa;
      CHECK(kappa == poly.evaluate([&](int idx) { return r.coeff(idx); }));
    }
  }
}

TEST_CASE("linear and quadratic counters") {
  CHECK(linear_coefficient(5, 6) == 1);
  CHECK(linear_coefficient(5, 2) == 8);
  CHECK(linear_coefficient(6, 3) == 84);
  CHECK(linear_coefficient(4, 3) == 5);
  CHECK(quadratic_coefficient(5, 2, 2) == 5);
  CHECK(quadratic_coefficient(6, 2, 3) == 35);
  CHECK(quadratic_coefficient(3, 2, 2) == 0);
  for (int k = 1; k <= 6; ++k) {
    CumulantPolynomial p = kerov_polynomial(k).polynomial;
    for (int l = 2; l <= k + 1; ++l)
      CHECK(Rat(static_cast<long>(linear_coefficient(k, l))) ==
            p.coefficient(Monomial{{l, 1}}));
  }
}

TEST_CASE("prime divisibility") {
  PrimeDivisibilityReport r3 = prime_divisibility_report(3);
  CHECK(r3.sigma_quotient == CumulantPolynomial::variable(2));
  CHECK(r3.lower_quotient.is_zero());

  PrimeDivisibilityReport r5 = prime_divisibility_report(5);
  CumulantPolynomial expected = CumulantPolynomial::variable(4) * Rat(3) +
                                CumulantPolynomial::variable(2) * Rat(2);
  expected.add_term(monomial_from_indices({2, 2}), 1);
  CHECK(r5.sigma_quotient == expected);
  CHECK(r5.lower_quotient == CumulantPolynomial::variable(3));

  CHECK_THROWS_AS(prime_divisibility_report(4), std::invalid_argument);
  CHECK_THROWS_AS(prime_divisibility_report(9), std::invalid_argument);
}

TEST_CASE("stats") {
  KerovResult r = kerov_polynomial(5);
  CHECK(r.stats.factorizations == 120);
  CHECK(r.stats.pruned > 0);
  // total triples = sum of coefficients
  Rat total = 0;
  for (const auto& [m, c] : r.polynomial.terms()) total += c;
  CHECK(Rat(static_cast<long>(r.stats.triples)) == total);
  CHECK(r.cycle_lengths == std::vector<int>{5});
}
