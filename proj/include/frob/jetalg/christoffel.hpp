#pragma once

// Christoffel symbols of the flat metric in canonical coordinates.

#include "frob/jetalg/expr.hpp"

namespace frob::jet {

/// Gamma^k_ij; zero unless at least two of k, i, j coincide.
inline Expr christoffel(Store& s, int k, int i, int j) {
  if (i == j && j == k) {
    std::vector<std::pair<Expr, Rational>> items;
    for (int l = 0; l < s.n(); ++l)
      if (l != i) items.emplace_back(s.gamma(i, l) * s.h(l), Rational(-1));
    return s.lincomb(items) / s.h(i);
  }
  if (k == i) return s.gamma(i, j) * s.h(j) / s.h(i);
  if (k == j) return s.gamma(i, j) * s.h(i) / s.h(j);
  if (i == j) return -(s.gamma(i, k) * s.h(i) / s.h(k));
  return s.zero();
}

}  // namespace frob::jet
