#pragma once

// Dense Gaussian elimination over any scalar of the family. Exact scalars
// pivot on the first nonzero entry, numeric ones on the largest magnitude.

#include <climits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frob/exact/scalar.hpp"

namespace frob {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row echelon reduction of `a` in place (fully reduced). Returns the pivot
/// column of each pivot row.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a, long bits = default_precision_bits) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  long ref = LONG_MIN;
  if constexpr (!ScalarTraits<T>::exact)
    for (const auto& row : a)
      for (const auto& x : row) ref = std::max(ref, ScalarTraits<T>::exponent(x));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    long best_e = LONG_MIN;
    for (std::size_t k = r; k < rows; ++k) {
      if (negligible(a[k][c], ref, bits / 2)) continue;
      if constexpr (ScalarTraits<T>::exact) {
        best = k;
        break;
      } else {
        long e = ScalarTraits<T>::exponent(a[k][c]);
        if (best == rows || e > best_e) best = k, best_e = e;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    T inv = T(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || ScalarTraits<T>::is_zero(a[k][c])) continue;
      T f = a[k][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] = a[k][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solves the square system a x = b; throws when singular.
template <class T>
std::vector<T> solve_linear(Matrix<T> a, const std::vector<T>& b, long bits = default_precision_bits) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_linear needs a square matrix");
    a[i].push_back(b[i]);
  }
  auto piv = row_reduce(a, bits);
  if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular linear system");
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

/// Least-squares-free overdetermined solve: reduces [a | b] and returns the
/// unique solution when the system is consistent with full column rank,
/// nullopt when its rank is deficient. Throws when inconsistent.
template <class T>
std::optional<std::vector<T>> solve_overdetermined(Matrix<T> a, const std::vector<T>& b,
                                                   long bits = default_precision_bits) {
  std::size_t rows = a.size();
  if (rows == 0) return std::nullopt;
  std::size_t cols = a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto piv = row_reduce(a, bits);
  if (!piv.empty() && piv.back() == cols) throw std::domain_error("inconsistent linear system");
  if (piv.size() < cols) return std::nullopt;
  std::vector<T> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = a[i][cols];
  return x;
}

}  // namespace frob
