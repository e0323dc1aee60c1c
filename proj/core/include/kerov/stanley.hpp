#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kerov/polynomial.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Polynomial in p_1..p_m, q_1..q_m obtained by evaluating a polynomial
// function of diagrams on the multirectangular family. Keys pair the
// p-exponent vector with the q-exponent vector, both of length m.
class StanleyPolynomial {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  explicit StanleyPolynomial(int m);
  int rectangle_count() const { return m_; }

  void add(const Key& key, const Rat& c);
  const std::map<Key, Rat>& terms() const { return terms_; }

  // Exponent vectors shorter than m are padded with zeros.
  Rat coefficient(std::vector<int> p_exps, std::vector<int> q_exps) const;
  Rat evaluate(const std::vector<Rat>& p, const std::vector<Rat>& q) const;

  bool operator==(const StanleyPolynomial&) const = default;

 private:
  int m_;
  std::map<Key, Rat> terms_;
};

// Stanley-Feray sweep: sum over factorizations s1 * s2 of the multi-cycle of
// sign(s1) prod_{white b} q_{phi1(b)} prod_{black c} p_{phi2(c)} over all
// colorings phi2 of the black cycles by {1..m}, phi1(b) being the largest
// phi2 over blacks meeting b.
StanleyPolynomial stanley_character(const std::vector<int>& parts, int m,
                                    bool transitive_only = false);

// N^F: coefficient [p_1 q_1^{a_1-1} ... p_m q_m^{a_m-1}] weighted by
// prod_r (-1)^{b_r-1} (a_r-1)_(b_r-1); order of the pairs is immaterial.
Rat nn_quantity(const StanleyPolynomial& spoly,
                const std::vector<std::pair<int, int>>& pairs);

// The dual route to K_k: mixed R-derivatives at 0 assembled from N^{Sigma_k}
// over set partitions, then divided by multiplicities.
CumulantPolynomial kerov_via_derivatives(int k);

// Verifies d^2/dR_{l1} dR_{l2} Sigma_k =
//   [p1 p2 q1^{l1-1} q2^{l2-1}] - [p1 p2 q2^{l1+l2-2}] on both routes.
bool quadratic_identity_check(int k, int l1, int l2);

}  // namespace kerov
