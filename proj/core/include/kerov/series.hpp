#pragma once

#include <string>
#include <vector>

#include "kerov/polynomial.hpp"
#include "kerov/rational.hpp"

namespace kerov {

enum class SeriesRole { moments, free_cumulants, s_functionals };

std::string to_string(SeriesRole role);
SeriesRole series_role_from_string(const std::string& s);

// Exact rational coefficients c_1..c_N of a moment, free-cumulant or
// S-functional sequence. Conversions are order-preserving and exact.
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesRole role, int order);
  TruncatedSeries(SeriesRole role, std::vector<Rat> coeffs);

  SeriesRole role() const { return role_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  const Rat& coeff(int n) const;  // 1-based, 1 <= n <= order
  void set_coeff(int n, const Rat& value);
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  SeriesRole role_;
  std::vector<Rat> coeffs_;
};

// M_n = sum_{l>=1} (1/l!) (n)_{l-1} sum_{k_1+...+k_l = n} R_{k_1}...R_{k_l}
TruncatedSeries moments_from_free_cumulants(const TruncatedSeries& r);
// S_n = sum_{l>=1} (1/l!) (n-1)_{l-1} sum_{k_1+...+k_l = n} R_{k_1}...R_{k_l}
TruncatedSeries s_from_r(const TruncatedSeries& r);
// R_n = sum_{l>=1} (1/l!) (1-n)^{l-1} sum_{k_1+...+k_l = n} S_{k_1}...S_{k_l}
TruncatedSeries r_from_s(const TruncatedSeries& s);
// Lagrange inversion of the Cauchy transform: with A(u) = 1 + sum M_n u^n,
// R_k = -(1/(k-1)) [u^k] A(u)^{-(k-1)} for k >= 2, and R_1 = M_1.
TruncatedSeries lagrange_free_cumulant(const TruncatedSeries& moments);

// Symbolic counterparts, as polynomials in variables indexed 1, 2, ...
CumulantPolynomial symbolic_moment_in_r(int n);
CumulantPolynomial symbolic_s_in_r(int n);
CumulantPolynomial symbolic_r_in_s(int n, int min_part = 1);

// C_k = sum_{2 j_2 + 3 j_3 + ... = k} (j_2+j_3+...)!/(j_2! j_3! ...)
//       prod_i ((i-1) R_i)^{j_i},  returned for k = 2..order.
std::vector<CumulantPolynomial> c_from_r(int order);

// Rewrites K_k - R_{k+1} in the C basis by triangular inversion of c_from_r.
// Variable index i of the result means C_i.
CumulantPolynomial goulden_rattan_L(int k, const CumulantPolynomial& kerov_poly);

// Truncated power-series helpers on coefficient vectors a[0..N] (a[i] is the
// coefficient of u^i). All exact.
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                            int n);
std::vector<Rat> series_exp(const std::vector<Rat>& a, int n);  // needs a[0] == 0
std::vector<Rat> series_reciprocal(const std::vector<Rat>& a,
                                   int n);  // needs a[0] != 0

}  // namespace kerov
