#pragma once

// Residues of rational functions, at finite points and at infinity.

#include <climits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frob/exact/poly.hpp"

namespace frob {

/// Pole order of N/D at `a`: leading vanishing Taylor coefficients of D at
/// `a` minus those of N. Numeric coefficients count as zero when below
/// 2^(-bits/2) of the largest Taylor coefficient.
template <class T>
long pole_order(const RationalFunction<T>& f, const T& a, long bits = default_precision_bits) {
  auto count = [&](const Poly<T>& p) {
    Poly<T> s = p.shifted(a);
    long ref = LONG_MIN;
    for (const auto& c : s.coeffs()) ref = std::max(ref, ScalarTraits<T>::exponent(c));
    long k = 0;
    while (k <= s.degree() && negligible(s.coeff(static_cast<std::size_t>(k)), ref, bits / 2)) ++k;
    return k;
  };
  return count(f.den()) - count(f.num());
}

/// Residue of f at the finite point `a`. Returns zero when `a` is not a pole.
/// The pole order may be passed explicitly; otherwise it is detected.
template <class T>
T residue(const RationalFunction<T>& f, const T& a, std::optional<long> order = std::nullopt,
          long bits = default_precision_bits) {
  Poly<T> ns = f.num().shifted(a);
  Poly<T> ds = f.den().shifted(a);
  long m;
  if (order) {
    m = *order;
  } else {
    long ref = LONG_MIN;
    for (const auto& c : ds.coeffs()) ref = std::max(ref, ScalarTraits<T>::exponent(c));
    m = 0;
    while (m <= ds.degree() && negligible(ds.coeff(static_cast<std::size_t>(m)), ref, bits / 2)) ++m;
  }
  if (m <= 0) return T(0);
  if (m > 8) throw std::domain_error("pole order above 8");
  // Series of ns(w) / (ds(w) / w^m) up to w^(m-1).
  std::vector<T> den;
  for (long k = m; k <= ds.degree(); ++k) den.push_back(ds.coeff(static_cast<std::size_t>(k)));
  if (den.empty()) throw std::domain_error("denominator vanishes identically");
  std::vector<T> q;
  T inv = T(1) / den[0];
  for (long k = 0; k < m; ++k) {
    T acc = ns.coeff(static_cast<std::size_t>(k));
    for (long j = 1; j <= k && j < static_cast<long>(den.size()); ++j) acc = acc - den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q.push_back(acc * inv);
  }
  return q.back();
}

/// Residue at infinity: minus the coefficient of 1/z in the expansion at z = infinity.
template <class T>
T residue_at_infinity(const RationalFunction<T>& f) {
  if (f.den().is_zero()) throw std::domain_error("denominator vanishes identically");
  auto [q, r] = Poly<T>::divmod(f.num(), f.den());
  long dd = f.den().degree();
  if (dd < 1) return T(0);
  return -(r.coeff(static_cast<std::size_t>(dd - 1)) / f.den().leading());
}

}  // namespace frob
