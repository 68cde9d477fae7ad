#pragma once

// Dense univariate polynomials and rational functions over a field scalar.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frob/exact/scalar.hpp"

namespace frob {

template <class T>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  /// The monomial a z^k.
  static Poly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = a;
    return Poly(std::move(c));
  }
  /// prod (z - r) over the given roots.
  static Poly from_roots(const std::vector<T>& roots) {
    Poly p = constant(T(1));
    for (const auto& r : roots) p = p * Poly({-r, T(1)});
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  T operator()(const T& z) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }

  /// Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = a.c_;
    long db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    T inv = T(1) / b.leading();
    for (long k = a.degree(); k >= db; --k) {
      T f = r[static_cast<std::size_t>(k)] * inv;
      q[static_cast<std::size_t>(k - db)] = f;
      for (long j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(k - db + j);
        r[idx] = r[idx] - f * b.c_[static_cast<std::size_t>(j)];
      }
      r[static_cast<std::size_t>(k)] = T(0);
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1, T(0));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = T(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
  }
  Poly derivative(int order) const {
    Poly p = *this;
    for (int k = 0; k < order; ++k) p = p.derivative();
    return p;
  }
  /// Antiderivative vanishing at zero.
  Poly antiderivative() const {
    std::vector<T> a(c_.size() + 1, T(0));
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / T(static_cast<long>(k + 1));
    return Poly(std::move(a));
  }

  /// Coefficients of p(a + w) in w.
  Poly shifted(const T& a) const {
    std::vector<T> c = c_;
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] = c[j - 1] + a * c[j];
    return Poly(std::move(c));
  }

  /// Monic gcd (exact scalars only).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (T(1) / a.leading()) * a;
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (ScalarTraits<T>::is_zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + ScalarTraits<T>::str(c_[k]) + ")";
      if (k) s += "*z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

private:
  void trim() {
    while (!c_.empty() && ScalarTraits<T>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Poly<T>::constant(T(1))) {}
  RationalFunction(Poly<T> num) : num_(std::move(num)), den_(Poly<T>::constant(T(1))) {}
  RationalFunction(Poly<T> num, Poly<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if constexpr (ScalarTraits<T>::exact) reduce();
  }
  /// a z^k for any integer k.
  static RationalFunction laurent_monomial(const T& a, long k) {
    if (k >= 0) return RationalFunction(Poly<T>::monomial(a, static_cast<std::size_t>(k)));
    return RationalFunction(Poly<T>::constant(a), Poly<T>::monomial(T(1), static_cast<std::size_t>(-k)));
  }

  const Poly<T>& num() const { return num_; }
  const Poly<T>& den() const { return den_; }

  T operator()(const T& z) const { return num_(z) / den_(z); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  RationalFunction derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }
  RationalFunction derivative(int order) const {
    RationalFunction f = *this;
    for (int k = 0; k < order; ++k) f = f.derivative();
    return f;
  }

private:
  void reduce() {
    Poly<T> g = Poly<T>::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly<T>::divmod(num_, g).first;
      den_ = Poly<T>::divmod(den_, g).first;
    }
    T lc = den_.leading();
    if (!(lc == T(1))) {
      T inv = T(1) / lc;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly<T> num_;
  Poly<T> den_;
};

}  // namespace frob
