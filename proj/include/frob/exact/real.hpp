#pragma once

// Arbitrary-precision real and complex floating point on top of MPFR.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace frob {

/// Working precision used when a value is created without an explicit one.
inline thread_local mpfr_prec_t default_precision_bits = 256;

/// Sets the thread's default precision for the lifetime of the guard.
class PrecisionScope {
public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(default_precision_bits) {
    default_precision_bits = bits;
  }
  ~PrecisionScope() { default_precision_bits = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  mpfr_prec_t saved_;
};

/// Explicit precision tag for constructors.
struct Bits {
  mpfr_prec_t value;
};

class Real {
public:
  Real() { mpfr_init2(v_, default_precision_bits); mpfr_set_zero(v_, 1); }
  explicit Real(Bits bits) { mpfr_init2(v_, bits.value); mpfr_set_zero(v_, 1); }
  Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const mpq_class& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  explicit Real(const mpz_class& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal string with `digits` significant digits ("0" for zero).
  std::string str(int digits = 0) const {
    if (is_zero()) return "0";
    if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
    std::string fmt = "%." + std::to_string(digits) + "Re";
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  static Real from_string(const std::string& s, mpfr_prec_t bits = default_precision_bits) {
    Real r(Bits{bits});
    mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
    return r;
  }

  /// 2^e at the default precision.
  static Real pow2(long e) {
    Real r;
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

#define FROB_REAL_BINOP(op, fn)                                                 \
  friend Real operator op(const Real& a, const Real& b) {                       \
    Real r(Bits{std::max(a.precision(), b.precision())});                             \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                            \
    return r;                                                                   \
  }                                                                             \
  Real& operator op##=(const Real& b) {                                         \
    if (precision() < b.precision()) mpfr_prec_round(v_, b.precision(), MPFR_RNDN); \
    fn(v_, v_, b.v_, MPFR_RNDN);                                                \
    return *this;                                                               \
  }
  FROB_REAL_BINOP(+, mpfr_add)
  FROB_REAL_BINOP(-, mpfr_sub)
  FROB_REAL_BINOP(*, mpfr_mul)
  FROB_REAL_BINOP(/, mpfr_div)
#undef FROB_REAL_BINOP

  friend Real operator-(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(Bits{std::max(a.precision(), b.precision())});
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(Bits{std::max(y.precision(), x.precision())});
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log2(const Real& a) {
    Real r(Bits{a.precision()});
    mpfr_log2(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

private:
  mpfr_t v_;
};

class Complex {
public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)), im_(Bits{re_.precision()}) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(long x) : re_(x) {}
  Complex(int x) : re_(x) {}
  explicit Complex(const mpq_class& q) : re_(q) {}
  Complex(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  mpfr_prec_t precision() const { return std::min(re_.precision(), im_.precision()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  Complex& operator+=(const Complex& b) { re_ += b.re_; im_ += b.im_; return *this; }
  Complex& operator-=(const Complex& b) { re_ -= b.re_; im_ -= b.im_; return *this; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
  Complex& operator/=(const Complex& b) { return *this = *this / b; }

  friend Complex conj(const Complex& a) { return {a.re_, -a.im_}; }
  friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }
  friend Real norm(const Complex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }

  /// Principal square root.
  friend Complex sqrt(const Complex& a) {
    if (a.is_zero()) return a;
    Real m = abs(a);
    Real two(2);
    Real re = sqrt((m + a.re_) / two);
    Real im = sqrt((m - a.re_) / two);
    if (a.im_.sign() < 0) im = -im;
    // Recover the smaller part from the larger to avoid cancellation.
    if (re.is_zero()) return {re, im};
    if (abs(re) >= abs(im)) {
      im = a.im_ / (two * re);
    } else {
      re = a.im_ / (two * im);
    }
    return {re, im};
  }

  static Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

  std::string str(int digits = 0) const { return re_.str(digits) + (im_.sign() < 0 ? "" : "+") + im_.str(digits) + "i"; }
  friend std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << c.str(); }

private:
  Real re_;
  Real im_;
};

}  // namespace frob
