#include "kerov/series.hpp"

#include <stdexcept>

namespace kerov {

std::string to_string(SeriesRole role) {
  switch (role) {
    case SeriesRole::moments: return "moments";
    case SeriesRole::free_cumulants: return "free-cumulants";
    case SeriesRole::s_functionals: return "s-functionals";
  }
  throw std::logic_error("bad role");
}

SeriesRole series_role_from_string(const std::string& s) {
  if (s == "moments") return SeriesRole::moments;
  if (s == "free-cumulants") return SeriesRole::free_cumulants;
  if (s == "s-functionals") return SeriesRole::s_functionals;
  throw std::invalid_argument("unknown series role: '" + s + "'");
}

TruncatedSeries::TruncatedSeries(SeriesRole role, int order) : role_(role) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  coeffs_.assign(order, Rat(0));
}

TruncatedSeries::TruncatedSeries(SeriesRole role, std::vector<Rat> coeffs)
    : role_(role), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
}

const Rat& TruncatedSeries::coeff(int n) const {
  if (n < 1 || n > order()) throw std::out_of_range("series index");
  return coeffs_[n - 1];
}

void TruncatedSeries::set_coeff(int n, const Rat& value) {
  if (n < 1 || n > order()) throw std::out_of_range("series index");
  coeffs_[n - 1] = value;
}

namespace {

void require_role(const TruncatedSeries& s, SeriesRole role, const char* op) {
  if (s.role() != role)
    throw std::invalid_argument(std::string(op) + ": expected role " +
                                to_string(role) + ", got " + to_string(s.role()));
}

// table[m][l] = sum over compositions (k_1..k_l) of m of prod coeff(k_i)
std::vector<std::vector<Rat>> composition_table(const TruncatedSeries& s, int n) {
  std::vector<std::vector<Rat>> t(n + 1, std::vector<Rat>(n + 1, Rat(0)));
  t[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int l = 1; l <= m; ++l)
      for (int k = 1; k <= m; ++k) {
        if (s.coeff(k) == 0) continue;
        t[m][l] += s.coeff(k) * t[m - k][l - 1];
      }
  return t;
}

using LengthWeight = Rat (*)(int n, int l);

TruncatedSeries weighted_conversion(const TruncatedSeries& in, SeriesRole out_role,
                                    LengthWeight weight) {
  const int n = in.order();
  auto t = composition_table(in, n);
  TruncatedSeries out(out_role, n);
  for (int m = 1; m <= n; ++m) {
    Rat v = 0;
    for (int l = 1; l <= m; ++l) {
      if (t[m][l] == 0) continue;
      v += weight(m, l) * t[m][l];
    }
    out.set_coeff(m, v);
  }
  return out;
}

Rat moment_weight(int n, int l) {
  return Rat(falling_factorial(n, l - 1)) / Rat(factorial(l));
}

Rat s_weight(int n, int l) {
  return Rat(falling_factorial(n - 1, l - 1)) / Rat(factorial(l));
}

Rat r_weight(int n, int l) {
  Int p = int_pow(Int(1 - n), static_cast<unsigned long>(l - 1));
  return Rat(p) / Rat(factorial(l));
}

}  // namespace

TruncatedSeries moments_from_free_cumulants(const TruncatedSeries& r) {
  require_role(r, SeriesRole::free_cumulants, "moments_from_free_cumulants");
  return weighted_conversion(r, SeriesRole::moments, moment_weight);
}

TruncatedSeries s_from_r(const TruncatedSeries& r) {
  require_role(r, SeriesRole::free_cumulants, "s_from_r");
  return weighted_conversion(r, SeriesRole::s_functionals, s_weight);
}

TruncatedSeries r_from_s(const TruncatedSeries& s) {
  require_role(s, SeriesRole::s_functionals, "r_from_s");
  return weighted_conversion(s, SeriesRole::free_cumulants, r_weight);
}

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                            int n) {
  std::vector<Rat> c(n + 1, Rat(0));
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j + i <= n && j < static_cast<int>(b.size()); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<Rat> series_exp(const std::vector<Rat>& a, int n) {
  if (!a.empty() && a[0] != 0)
    throw std::invalid_argument("series_exp needs zero constant term");
  std::vector<Rat> e(n + 1, Rat(0));
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat t = 0;
    for (int j = 1; j <= m && j < static_cast<int>(a.size()); ++j) {
      if (a[j] == 0) continue;
      t += Rat(j) * a[j] * e[m - j];
    }
    e[m] = t / m;
  }
  return e;
}

std::vector<Rat> series_reciprocal(const std::vector<Rat>& a, int n) {
  if (a.empty() || a[0] == 0)
    throw std::invalid_argument("series_reciprocal needs nonzero constant term");
  std::vector<Rat> inv(n + 1, Rat(0));
  inv[0] = Rat(1) / a[0];
  for (int m = 1; m <= n; ++m) {
    Rat t = 0;
    for (int j = 1; j <= m && j < static_cast<int>(a.size()); ++j)
      t += a[j] * inv[m - j];
    inv[m] = -t / a[0];
  }
  return inv;
}

TruncatedSeries lagrange_free_cumulant(const TruncatedSeries& moments) {
  require_role(moments, SeriesRole::moments, "lagrange_free_cumulant");
  const int n = moments.order();
  std::vector<Rat> a(n + 1, Rat(0));
  a[0] = 1;
  for (int i = 1; i <= n; ++i) a[i] = moments.coeff(i);
  std::vector<Rat> ainv = series_reciprocal(a, n);
  TruncatedSeries r(SeriesRole::free_cumulants, n);
  r.set_coeff(1, moments.coeff(1));
  std::vector<Rat> pw(n + 1, Rat(0));
  pw[0] = 1;  // A^0
  for (int k = 2; k <= n; ++k) {
    pw = series_mul(pw, ainv, n);  // A^{-(k-1)}
    r.set_coeff(k, Rat(-pw[k]) / Rat(k - 1));
  }
  return r;
}

namespace {

// Walks compositions of n (parts >= min_part), accumulating the weighted
// monomial sum into a polynomial.
void composition_monomials(int remaining, int min_part, std::vector<int>& parts,
                           int n, Rat (*weight)(int, int),
                           CumulantPolynomial& out) {
  if (remaining == 0) {
    out.add_term(monomial_from_indices(parts),
                 weight(n, static_cast<int>(parts.size())));
    return;
  }
  for (int k = min_part; k <= remaining; ++k) {
    parts.push_back(k);
    composition_monomials(remaining - k, min_part, parts, n, weight, out);
    parts.pop_back();
  }
}

CumulantPolynomial symbolic_conversion(int n, int min_part,
                                       Rat (*weight)(int, int)) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  CumulantPolynomial out;
  std::vector<int> parts;
  composition_monomials(n, min_part, parts, n, weight, out);
  return out;
}

}  // namespace

CumulantPolynomial symbolic_moment_in_r(int n) {
  return symbolic_conversion(n, 1, moment_weight);
}

CumulantPolynomial symbolic_s_in_r(int n) {
  return symbolic_conversion(n, 1, s_weight);
}

CumulantPolynomial symbolic_r_in_s(int n, int min_part) {
  return symbolic_conversion(n, min_part, r_weight);
}

namespace {

void c_terms(int remaining, int min_index, std::vector<int>& factors,
             CumulantPolynomial& out) {
  if (remaining == 0) {
    // multinomial over the multiplicities, times prod (i-1)^{j_i}
    Int w = factorial(static_cast<long>(factors.size()));
    Rat value(w);
    int run = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      value *= Rat(factors[i] - 1);
      if (i + 1 < factors.size() && factors[i + 1] == factors[i])
        ++run;
      else {
        value /= Rat(factorial(run));
        run = 1;
      }
    }
    out.add_term(monomial_from_indices(factors), value);
    return;
  }
  for (int i = min_index; i <= remaining; ++i) {
    factors.push_back(i);
    c_terms(remaining - i, i, factors, out);
    factors.pop_back();
  }
}

}  // namespace

std::vector<CumulantPolynomial> c_from_r(int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  std::vector<CumulantPolynomial> out;
  for (int k = 2; k <= order; ++k) {
    CumulantPolynomial ck;
    std::vector<int> factors;
    c_terms(k, 2, factors, ck);
    out.push_back(std::move(ck));
  }
  return out;
}

CumulantPolynomial goulden_rattan_L(int k, const CumulantPolynomial& kerov_poly) {
  const int top = k + 1;
  auto cs = c_from_r(top);
  std::vector<CumulantPolynomial> r_in_c(top + 1);
  for (int j = 2; j <= top; ++j) {
    CumulantPolynomial lower = cs[j - 2];
    lower.add_term(Monomial{{j, 1}}, Rat(-(j - 1)));  // strip the (j-1) R_j head
    CumulantPolynomial rj = CumulantPolynomial::variable(j);
    rj -= lower.substitute([&](int idx) { return r_in_c[idx]; });
    rj /= Rat(j - 1);
    r_in_c[j] = std::move(rj);
  }
  CumulantPolynomial target = kerov_poly;
  target.add_term(Monomial{{k + 1, 1}}, Rat(-1));
  return target.substitute([&](int idx) { return r_in_c[idx]; });
}

}  // namespace kerov
