#pragma once

// Uniform interface over the scalar family used by evaluation: exact
// rationals, exact multiquadratic numbers, and MPFR complex floats.

#include <climits>
#include <cmath>
#include <string>

#include "frob/exact/radical.hpp"
#include "frob/exact/rational.hpp"
#include "frob/exact/real.hpp"

namespace frob {

template <class T>
struct ScalarTraits;

/// Approximate binary exponent of |q| (LONG_MIN for zero).
inline long rational_exponent(const Rational& q) {
  if (sgn(q) == 0) return LONG_MIN;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static long exponent(const Rational& x) { return rational_exponent(x); }
  static std::string str(const Rational& x) { return x.get_str(); }
  static Complex to_complex(const Rational& x) { return Complex(x); }
};

template <>
struct ScalarTraits<RadicalNumber> {
  static constexpr bool exact = true;
  static RadicalNumber from_rational(const Rational& q) { return RadicalNumber(q); }
  static bool is_zero(const RadicalNumber& x) { return x.is_zero(); }
  static long exponent(const RadicalNumber& x) {
    long e = LONG_MIN;
    for (const auto& [m, c] : x.terms()) {
      long ec = rational_exponent(c);
      if (m) ec += rational_exponent(x.field()->mask_product(m)) / 2;
      e = std::max(e, ec);
    }
    return e;
  }
  static std::string str(const RadicalNumber& x) { return x.str(); }
  static Complex to_complex(const RadicalNumber& x) {
    Complex acc(0);
    for (const auto& [m, c] : x.terms()) {
      Complex term(c);
      for (std::size_t k = 0; (m >> k); ++k) {
        if ((m >> k) & 1U) term = term * sqrt(Complex(x.field()->radicand(k)));
      }
      acc += term;
    }
    return acc;
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex from_rational(const Rational& q) { return Complex(q); }
  static bool is_zero(const Complex& x) { return x.is_zero(); }
  static long exponent(const Complex& x) {
    long e = LONG_MIN;
    if (!x.real().is_zero()) e = std::max<long>(e, mpfr_get_exp(x.real().raw()));
    if (!x.imag().is_zero()) e = std::max<long>(e, mpfr_get_exp(x.imag().raw()));
    return e;
  }
  static std::string str(const Complex& x) { return x.str(40); }
  static Complex to_complex(const Complex& x) { return x; }
};

/// Numeric zero test relative to a reference magnitude exponent: true when
/// |x| < 2^(reference - bits).
template <class T>
bool negligible(const T& x, long reference_exponent, long bits) {
  if constexpr (ScalarTraits<T>::exact) {
    return ScalarTraits<T>::is_zero(x);
  } else {
    long e = ScalarTraits<T>::exponent(x);
    if (e == LONG_MIN) return true;
    if (reference_exponent == LONG_MIN) return false;
    return e < reference_exponent - bits;
  }
}

}  // namespace frob
