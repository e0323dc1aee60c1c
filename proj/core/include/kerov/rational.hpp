#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kerov {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// (a)_b = a (a-1) ... (a-b+1)
inline Int falling_factorial(long a, long b) {
  Int r = 1;
  for (long i = 0; i < b; ++i) r *= (a - i);
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  r.canonicalize();
  return r;
}

// Accepts "a" or "a/b" with arbitrary-precision decimal integers.
inline Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rat& r) {
  return r.get_den() == 1 ? r.get_num().get_str()
                          : r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

}  // namespace kerov
