#include "kerov/diagram.hpp"

#include <stdexcept>

namespace kerov {

bool is_partition(const Partition& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

MultiRectangular::MultiRectangular(std::vector<Rat> heights,
                                   std::vector<Rat> widths) {
  if (heights.size() != widths.size())
    throw std::invalid_argument("heights and widths must have equal length");
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] < 0 || widths[i] < 0)
      throw std::invalid_argument("band dimensions must be nonnegative");
    if (heights[i] == 0 || widths[i] == 0) continue;  // degenerate band dropped
    if (!q_.empty() && widths[i] > q_.back())
      throw std::invalid_argument("widths must be weakly decreasing");
    if (!q_.empty() && widths[i] == q_.back()) {
      p_.back() += heights[i];
    } else {
      p_.push_back(heights[i]);
      q_.push_back(widths[i]);
    }
  }
}

MultiRectangular MultiRectangular::from_partition(const Partition& rows) {
  if (!is_partition(rows))
    throw std::invalid_argument("rows must be weakly decreasing positive");
  std::vector<Rat> p, q;
  for (int v : rows) {
    if (!q.empty() && q.back() == v)
      p.back() += 1;
    else {
      p.emplace_back(1);
      q.emplace_back(v);
    }
  }
  return MultiRectangular(std::move(p), std::move(q));
}

Rat MultiRectangular::area() const {
  Rat a = 0;
  for (int i = 0; i < bands(); ++i) a += p_[i] * q_[i];
  return a;
}

MultiRectangular dilate(const MultiRectangular& d, const Rat& s) {
  if (s <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Rat> p = d.heights(), q = d.widths();
  for (auto& v : p) v *= s;
  for (auto& v : q) v *= s;
  return MultiRectangular(std::move(p), std::move(q));
}

TruncatedSeries s_functionals(const MultiRectangular& d, int nmax) {
  if (nmax < 2) throw std::invalid_argument("nmax must be >= 2");
  TruncatedSeries s(SeriesRole::s_functionals, nmax);
  // Band i spans y in [P_{i-1}, P_i], x in [0, q_i]; integrating
  // (x-y)^(n-2) exactly over each band gives
  // S_n = sum_i ((q_i-P_{i-1})^n - (q_i-P_i)^n - (-P_{i-1})^n + (-P_i)^n) / n.
  std::vector<Rat> prefix{Rat(0)};
  for (const auto& h : d.heights()) prefix.push_back(prefix.back() + h);
  for (int n = 2; n <= nmax; ++n) {
    Rat total = 0;
    for (int i = 0; i < d.bands(); ++i) {
      const Rat& a = prefix[i];
      const Rat& b = prefix[i + 1];
      const Rat& q = d.widths()[i];
      total += rat_pow(q - a, n) - rat_pow(q - b, n) - rat_pow(-a, n) +
               rat_pow(-b, n);
    }
    s.set_coeff(n, total / n);
  }
  return s;
}

TruncatedSeries transition_moments(const MultiRectangular& d, int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  std::vector<Rat> sz(nmax + 1, Rat(0));
  if (nmax >= 2) {
    TruncatedSeries s = s_functionals(d, nmax);
    for (int n = 2; n <= nmax; ++n) sz[n] = s.coeff(n);
  }
  std::vector<Rat> zg = series_exp(sz, nmax);  // z G(z) = exp S(z)
  TruncatedSeries m(SeriesRole::moments, nmax);
  for (int n = 1; n <= nmax; ++n) m.set_coeff(n, zg[n]);
  return m;
}

TruncatedSeries free_cumulants(const MultiRectangular& d, int nmax) {
  if (nmax < 2) throw std::invalid_argument("nmax must be >= 2");
  return r_from_s(s_functionals(d, nmax));
}

Rat frobenius_character(const MultiRectangular& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int order = k + 1;  // coefficients of u^0..u^{k+1} are needed
  TruncatedSeries m = transition_moments(d, order);
  // G(z-j) = sum_n M_n (z-j)^{-(n+1)}; in u = 1/z,
  // (z-j)^{-t} = u^t sum_s binom(t-1+s, s) j^s u^s. Dividing by u gives a
  // series with constant term 1 whose index-i entry needs the raw series at
  // index i+1.
  auto shifted_over_u = [&](long j) {
    std::vector<Rat> a(order + 2, Rat(0));
    for (int n = 0; n <= order; ++n) {
      Rat mn = n == 0 ? Rat(1) : m.coeff(n);
      if (mn == 0) continue;
      Int js = 1;
      for (int s = 0; n + 1 + s <= order + 1; ++s) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + s),
                     static_cast<unsigned long>(s));
        a[n + 1 + s] += mn * Rat(binom * js);
        js *= j;
      }
    }
    std::vector<Rat> out(order + 1, Rat(0));
    for (int i = 1; i <= order + 1; ++i) out[i - 1] = a[i];
    return out;
  };
  std::vector<Rat> prod(order + 1, Rat(0));
  prod[0] = 1;
  for (int j = 1; j <= k; ++j) prod = series_mul(prod, shifted_over_u(j), order);
  std::vector<Rat> inv = series_reciprocal(prod, order);
  // 1/(G(z-1)...G(z-k)) = u^{-k} / prod; [z^{-1}] picks [u^{k+1}] of 1/prod.
  return Rat(-1) * inv[k + 1] / k;
}

}  // namespace kerov
