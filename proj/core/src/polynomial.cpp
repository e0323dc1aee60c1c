#include "kerov/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kerov {

Monomial monomial_from_indices(const std::vector<int>& indices) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  Monomial m;
  for (int idx : sorted) {
    if (idx < 1) throw std::invalid_argument("variable index must be >= 1");
    if (!m.empty() && m.back().first == idx)
      ++m.back().second;
    else
      m.emplace_back(idx, 1);
  }
  return m;
}

long weighted_degree(const Monomial& m) {
  long d = 0;
  for (auto [idx, e] : m) d += static_cast<long>(idx) * e;
  return d;
}

CumulantPolynomial CumulantPolynomial::constant(const Rat& c) {
  CumulantPolynomial p;
  p.add_term({}, c);
  return p;
}

CumulantPolynomial CumulantPolynomial::variable(int index) {
  CumulantPolynomial p;
  p.add_term({{index, 1}}, 1);
  return p;
}

void CumulantPolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat CumulantPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

CumulantPolynomial& CumulantPolynomial::operator+=(const CumulantPolynomial& o) {
  if (&o == this) {
    for (auto& [m, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CumulantPolynomial& CumulantPolynomial::operator-=(const CumulantPolynomial& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CumulantPolynomial& CumulantPolynomial::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

CumulantPolynomial& CumulantPolynomial::operator/=(const Rat& s) {
  if (s == 0) throw std::invalid_argument("division by zero");
  for (auto& [m, c] : terms_) c /= s;
  return *this;
}

CumulantPolynomial operator+(CumulantPolynomial a, const CumulantPolynomial& b) {
  a += b;
  return a;
}

CumulantPolynomial operator-(CumulantPolynomial a, const CumulantPolynomial& b) {
  a -= b;
  return a;
}

CumulantPolynomial operator*(CumulantPolynomial a, const Rat& s) {
  a *= s;
  return a;
}

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

CumulantPolynomial operator*(const CumulantPolynomial& a,
                             const CumulantPolynomial& b) {
  CumulantPolynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(mul_monomials(ma, mb), ca * cb);
  return out;
}

CumulantPolynomial CumulantPolynomial::derivative(int index) const {
  CumulantPolynomial out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != index) continue;
      Monomial d = m;
      if (d[i].second == 1)
        d.erase(d.begin() + static_cast<long>(i));
      else
        --d[i].second;
      out.add_term(d, c * m[i].second);
    }
  }
  return out;
}

Rat CumulantPolynomial::derivative_at_zero(const std::vector<int>& indices) const {
  Monomial m = monomial_from_indices(indices);
  Rat c = coefficient(m);
  if (c == 0) return c;
  for (auto [idx, e] : m) c *= Rat(factorial(e));
  return c;
}

Rat CumulantPolynomial::evaluate(const std::function<Rat(int)>& value_of) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (auto [idx, e] : m) t *= rat_pow(value_of(idx), e);
    total += t;
  }
  return total;
}

CumulantPolynomial CumulantPolynomial::substitute(
    const std::function<CumulantPolynomial(int)>& image_of) const {
  CumulantPolynomial out;
  for (const auto& [m, c] : terms_) {
    CumulantPolynomial t = CumulantPolynomial::constant(c);
    for (auto [idx, e] : m) {
      CumulantPolynomial img = image_of(idx);
      for (int rep = 0; rep < e; ++rep) t = t * img;
    }
    out += t;
  }
  return out;
}

bool CumulantPolynomial::coefficients_integral() const {
  for (const auto& [m, c] : terms_)
    if (!is_integral(c)) return false;
  return true;
}

bool CumulantPolynomial::coefficients_nonnegative() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

int CumulantPolynomial::max_index() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) mx = std::max(mx, m.back().first);
  return mx;
}

long CumulantPolynomial::max_weighted_degree() const {
  long mx = 0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, weighted_degree(m));
  return mx;
}

namespace {

int exponent_of(const Monomial& m, int index) {
  for (auto [idx, e] : m)
    if (idx == index) return e;
  return 0;
}

// Weighted degree descending, then larger exponent at the highest differing
// index first.
bool display_before(const Monomial& a, const Monomial& b) {
  long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db;
  int top = 0;
  if (!a.empty()) top = std::max(top, a.back().first);
  if (!b.empty()) top = std::max(top, b.back().first);
  for (int idx = top; idx >= 1; --idx) {
    int ea = exponent_of(a, idx), eb = exponent_of(b, idx);
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string factors_text(const Monomial& m, const std::string& symbol) {
  std::ostringstream os;
  bool first = true;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!first) os << ' ';
    first = false;
    os << symbol << it->first;
    if (it->second > 1) os << '^' << it->second;
  }
  return os.str();
}

std::string factors_latex(const Monomial& m, const std::string& symbol) {
  std::ostringstream os;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    os << symbol << '_';
    if (it->first >= 10)
      os << '{' << it->first << '}';
    else
      os << it->first;
    if (it->second > 1) {
      os << '^';
      if (it->second >= 10)
        os << '{' << it->second << '}';
      else
        os << it->second;
    }
  }
  return os.str();
}

std::string coeff_latex(const Rat& c) {
  if (is_integral(c)) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::vector<std::pair<Monomial, Rat>> CumulantPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rat>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return display_before(x.first, y.first);
  });
  return out;
}

std::string CumulantPolynomial::to_text(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.empty()) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << ' ';
      os << factors_text(m, symbol);
    }
  }
  return os.str();
}

std::string CumulantPolynomial::to_latex(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.empty()) {
      os << coeff_latex(a);
    } else {
      if (a != 1) os << coeff_latex(a);
      os << factors_latex(m, symbol);
    }
  }
  return os.str();
}

}  // namespace kerov
