#pragma once

// Resultants via the Sylvester determinant.

#include <climits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frob/exact/poly.hpp"

namespace frob {

/// Determinant by Gaussian elimination. Exact scalars pivot on the first
/// nonzero entry; numeric scalars pivot on the largest magnitude.
template <class T>
T determinant(std::vector<std::vector<T>> a) {
  std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t r = col; r < n; ++r)
        if (!ScalarTraits<T>::is_zero(a[r][col])) { piv = r; break; }
    } else {
      long best = LONG_MIN;
      for (std::size_t r = col; r < n; ++r) {
        long e = ScalarTraits<T>::exponent(a[r][col]);
        if (e > best) { best = e; piv = r; }
      }
    }
    if (piv == n) return T(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    T inv = T(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ScalarTraits<T>::is_zero(a[r][col])) continue;
      T f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

/// Sylvester matrix of p (degree m) and q (degree k), size (m+k) x (m+k).
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const Poly<T>& p, const Poly<T>& q) {
  long m = p.degree(), k = q.degree();
  auto n = static_cast<std::size_t>(m + k);
  std::vector<std::vector<T>> s(n, std::vector<T>(n, T(0)));
  for (long r = 0; r < k; ++r)
    for (long j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p.coeff(static_cast<std::size_t>(m - j));
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= k; ++j) s[static_cast<std::size_t>(k + r)][static_cast<std::size_t>(r + j)] = q.coeff(static_cast<std::size_t>(k - j));
  return s;
}

template <class T>
T rational_pow_scalar(const T& x, long e) {
  T r(1);
  for (long k = 0; k < e; ++k) r = r * x;
  return r;
}

template <class T>
T resultant(const Poly<T>& p, const Poly<T>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return T(1);
  if (p.degree() == 0) return rational_pow_scalar(p.leading(), q.degree());
  if (q.degree() == 0) return rational_pow_scalar(q.leading(), p.degree());
  return determinant(sylvester_matrix(p, q));
}

}  // namespace frob
