#pragma once

// Exact rationals (GMP) and small helpers around them.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace frob {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// "num/den", or "num" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// True when q is the square of a rational.
inline bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

/// Nonnegative square root of a rational square.
inline Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw std::domain_error("not a rational square");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

inline Rational rational_pow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = base;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k) {
    if (k & 1U) r *= b;
    b *= b;
    k >>= 1U;
  }
  if (neg) {
    if (sgn(r) == 0) throw std::domain_error("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

inline std::size_t hash_integer(const Integer& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ static_cast<std::size_t>(sgn(z) + 1);
}

inline std::size_t hash_rational(const Rational& q) {
  std::size_t a = hash_integer(q.get_num());
  std::size_t b = hash_integer(q.get_den());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace frob
