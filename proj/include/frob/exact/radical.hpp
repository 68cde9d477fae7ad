#pragma once

// Exact arithmetic in a multiquadratic field Q(sqrt(a_1), ..., sqrt(a_m)).
// An element is a sparse combination of the square-free radical monomials
// r_S = prod_{k in S} sqrt(a_k), keyed by the bit mask of S.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frob/exact/rational.hpp"

namespace frob {

class RadicalField {
public:
  explicit RadicalField(std::vector<Rational> radicands) : radicands_(std::move(radicands)) {
    if (radicands_.size() > 30) throw std::invalid_argument("too many radicals");
    for (const auto& a : radicands_)
      if (sgn(a) == 0) throw std::invalid_argument("zero radicand");
  }

  std::size_t size() const { return radicands_.size(); }
  const Rational& radicand(std::size_t k) const { return radicands_[k]; }

  /// Product of the radicands whose bits are set in `mask`.
  Rational mask_product(std::uint32_t mask) const {
    Rational p = 1;
    for (std::size_t k = 0; mask; ++k, mask >>= 1U)
      if (mask & 1U) p *= radicands_[k];
    return p;
  }

  /// True when no nonempty subset of radicands multiplies to a rational
  /// square, i.e. the radical monomials form a basis and zero tests are exact.
  bool independent() const {
    std::uint32_t full = radicands_.empty() ? 0 : ((1U << radicands_.size()) - 1U);
    for (std::uint32_t m = 1; m <= full && m != 0; ++m)
      if (is_rational_square(mask_product(m))) return false;
    return true;
  }

private:
  std::vector<Rational> radicands_;
};

class RadicalNumber {
public:
  using Term = std::pair<std::uint32_t, Rational>;

  RadicalNumber() = default;
  RadicalNumber(long x) { if (x) terms_.emplace_back(0U, Rational(x)); }
  RadicalNumber(int x) : RadicalNumber(static_cast<long>(x)) {}
  RadicalNumber(const Rational& q) { if (sgn(q)) terms_.emplace_back(0U, q); }

  /// sqrt(a_k) in `field`.
  static RadicalNumber root(std::shared_ptr<const RadicalField> field, std::size_t k) {
    RadicalNumber r;
    r.field_ = std::move(field);
    r.terms_.emplace_back(1U << k, Rational(1));
    return r;
  }

  /// c * r_mask in `field`.
  static RadicalNumber monomial(std::shared_ptr<const RadicalField> field, std::uint32_t mask, const Rational& c) {
    RadicalNumber r;
    r.field_ = std::move(field);
    if (sgn(c)) r.terms_.emplace_back(mask, c);
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const std::shared_ptr<const RadicalField>& field() const { return field_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational rational_part() const {
    return (!terms_.empty() && terms_[0].first == 0) ? terms_[0].second : Rational(0);
  }

  friend RadicalNumber operator+(const RadicalNumber& a, const RadicalNumber& b) { return combine(a, b, 1); }
  friend RadicalNumber operator-(const RadicalNumber& a, const RadicalNumber& b) { return combine(a, b, -1); }
  friend RadicalNumber operator-(const RadicalNumber& a) {
    RadicalNumber r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b) {
    RadicalNumber r;
    r.field_ = a.field_ ? a.field_ : b.field_;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Rational c = ca * cb;
        if (std::uint32_t common = ma & mb) c *= r.field_->mask_product(common);
        acc.emplace_back(ma ^ mb, std::move(c));
      }
    }
    r.terms_ = normalize(std::move(acc));
    return r;
  }

  friend RadicalNumber operator/(const RadicalNumber& a, const RadicalNumber& b) { return a * b.inverse(); }

  RadicalNumber& operator+=(const RadicalNumber& b) { return *this = *this + b; }
  RadicalNumber& operator-=(const RadicalNumber& b) { return *this = *this - b; }
  RadicalNumber& operator*=(const RadicalNumber& b) { return *this = *this * b; }
  RadicalNumber& operator/=(const RadicalNumber& b) { return *this = *this / b; }

  /// Multiplicative inverse, by successive conjugation over each radical.
  RadicalNumber inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero in radical field");
    if (terms_.size() == 1) {
      const auto& [m, c] = terms_[0];
      RadicalNumber r;
      r.field_ = field_;
      Rational d = c;
      if (m) d *= field_->mask_product(m);
      r.terms_.emplace_back(m, 1 / d);
      return r;
    }
    std::uint32_t used = 0;
    for (const auto& t : terms_) used |= t.first;
    std::size_t k = 0;
    while (!((used >> k) & 1U)) ++k;
    RadicalNumber conj = conjugate(k);
    RadicalNumber norm = *this * conj;
    return conj * norm.inverse();
  }

  /// Image under sqrt(a_k) -> -sqrt(a_k).
  RadicalNumber conjugate(std::size_t k) const {
    RadicalNumber r = *this;
    for (auto& t : r.terms_)
      if ((t.first >> k) & 1U) t.second = -t.second;
    return r;
  }

  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.get_str() + ")";
      for (std::size_t k = 0; (m >> k); ++k)
        if ((m >> k) & 1U) s += "*r" + std::to_string(k);
    }
    return s;
  }

private:
  static std::vector<Term> normalize(std::vector<Term> acc) {
    std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    for (auto& t : acc) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    return out;
  }

  static RadicalNumber combine(const RadicalNumber& a, const RadicalNumber& b, int sign) {
    RadicalNumber r;
    r.field_ = a.field_ ? a.field_ : b.field_;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, sign > 0 ? b.terms_[j].second : Rational(-b.terms_[j].second));
        ++j;
      } else {
        Rational c = a.terms_[i].second;
        if (sign > 0) c += b.terms_[j].second; else c -= b.terms_[j].second;
        if (sgn(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::shared_ptr<const RadicalField> field_;
  std::vector<Term> terms_;
};

}  // namespace frob
