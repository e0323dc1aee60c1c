#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kerov/rational.hpp"

namespace kerov {

// Sparse monomial in variables X_1, X_2, ...: (index, exponent) pairs sorted
// by index, exponents > 0. The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<int, int>>;

Monomial monomial_from_indices(const std::vector<int>& indices);
// Weighted degree with deg X_i = i (so R_2^2 R_3 has degree 7).
long weighted_degree(const Monomial& m);

// Exact-rational sparse multivariate polynomial. Used for Kerov polynomials
// in free cumulants, their C-basis rewrites, and symbolic moment/cumulant
// identities. Zero coefficients are never stored.
class CumulantPolynomial {
 public:
  CumulantPolynomial() = default;
  static CumulantPolynomial constant(const Rat& c);
  static CumulantPolynomial variable(int index);

  void add_term(const Monomial& m, const Rat& c);
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rat coefficient(const Monomial& m) const;

  CumulantPolynomial& operator+=(const CumulantPolynomial& o);
  CumulantPolynomial& operator-=(const CumulantPolynomial& o);
  CumulantPolynomial& operator*=(const Rat& s);
  CumulantPolynomial& operator/=(const Rat& s);
  friend CumulantPolynomial operator+(CumulantPolynomial a,
                                      const CumulantPolynomial& b);
  friend CumulantPolynomial operator-(CumulantPolynomial a,
                                      const CumulantPolynomial& b);
  friend CumulantPolynomial operator*(const CumulantPolynomial& a,
                                      const CumulantPolynomial& b);
  friend CumulantPolynomial operator*(CumulantPolynomial a, const Rat& s);
  bool operator==(const CumulantPolynomial&) const = default;

  CumulantPolynomial derivative(int index) const;
  // Mixed derivative at 0: nonzero only for the exact monomial, with the
  // usual multiplicity factorials.
  Rat derivative_at_zero(const std::vector<int>& indices) const;

  Rat evaluate(const std::function<Rat(int)>& value_of) const;
  CumulantPolynomial substitute(
      const std::function<CumulantPolynomial(int)>& image_of) const;

  bool coefficients_integral() const;
  bool coefficients_nonnegative() const;
  int max_index() const;
  long max_weighted_degree() const;

  // Terms in display order: weighted degree descending, then the monomial
  // with the larger exponent at the highest differing index first. Matches
  // "R_7 + 35R_5 + 35R_3R_2 + 84R_3".
  std::vector<std::pair<Monomial, Rat>> sorted_terms() const;
  std::string to_text(const std::string& symbol = "R") const;
  std::string to_latex(const std::string& symbol = "R") const;

 private:
  std::map<Monomial, Rat> terms_;
};

}  // namespace kerov
