#pragma once

// Polynomial roots at arbitrary precision: Aberth-Ehrlich simultaneous
// iteration, with a shifted-QR companion-matrix eigenvalue fallback.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/exact/poly.hpp"
#include "frob/exact/real.hpp"

namespace frob {

class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, double residual_log2)
      : std::runtime_error(what), residual_log2_(residual_log2) {}
  double residual_log2() const { return residual_log2_; }

private:
  double residual_log2_;
};

namespace detail {

inline Real max_abs_coeff(const Poly<Complex>& p) {
  Real m(0);
  for (const auto& c : p.coeffs()) m = std::max(m, abs(c));
  return m;
}

/// Sum |p(r)| / max |coefficient|.
inline Real root_residual(const Poly<Complex>& p, const std::vector<Complex>& roots) {
  Real s(0);
  for (const auto& r : roots) s += abs(p(r));
  return s / max_abs_coeff(p);
}

inline bool aberth(const Poly<Complex>& p, std::vector<Complex>& z, long bits, int max_iter) {
  Poly<Complex> dp = p.derivative();
  std::size_t d = z.size();
  Real tol = Real::pow2(-bits + 8);
  std::vector<bool> done(d, false);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      Complex pv = p(z[k]);
      if (pv.is_zero()) {
        done[k] = true;
        continue;
      }
      Complex w = pv / dp(z[k]);
      Complex s(0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      Complex corr = w / (Complex(1) - w * s);
      z[k] -= corr;
      Real scale = std::max(abs(z[k]), Real(1));
      if (abs(corr) <= tol * scale) {
        done[k] = true;
      } else {
        all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

/// Eigenvalues of an upper Hessenberg complex matrix by shifted QR.
inline bool hessenberg_eigenvalues(std::vector<std::vector<Complex>> h, std::vector<Complex>& out, long bits) {
  long n = static_cast<long>(h.size());
  out.assign(static_cast<std::size_t>(n), Complex(0));
  Real eps = Real::pow2(-bits + 4);
  long hi = n - 1;
  int stall = 0;
  long iter_cap = 200 * n + 200;
  for (long iter = 0; hi >= 0; ++iter) {
    if (iter > iter_cap) return false;
    if (hi == 0) {
      out[0] = h[0][0];
      break;
    }
    long l = hi;
    while (l > 0) {
      auto L = static_cast<std::size_t>(l);
      Real scale = abs(h[L][L]) + abs(h[L - 1][L - 1]);
      if (scale.is_zero()) scale = Real(1);
      if (abs(h[L][L - 1]) <= eps * scale) {
        h[L][L - 1] = Complex(0);
        break;
      }
      --l;
    }
    if (l == hi) {
      out[static_cast<std::size_t>(hi)] = h[static_cast<std::size_t>(hi)][static_cast<std::size_t>(hi)];
      --hi;
      stall = 0;
      continue;
    }
    auto H = static_cast<std::size_t>(hi);
    Complex a = h[H - 1][H - 1], b = h[H - 1][H], c = h[H][H - 1], dd = h[H][H];
    Complex tr = a + dd, det = a * dd - b * c;
    Complex disc = sqrt(tr * tr - Complex(4) * det);
    Complex mu1 = (tr + disc) / Complex(2), mu2 = (tr - disc) / Complex(2);
    Complex mu = abs(mu1 - dd) < abs(mu2 - dd) ? mu1 : mu2;
    if (++stall % 11 == 0) mu = dd + Complex(abs(h[H][H - 1]), Real(0));
    auto lo = static_cast<std::size_t>(l);
    for (std::size_t k = lo; k <= H; ++k) h[k][k] -= mu;
    std::vector<Complex> cs, ss;
    for (std::size_t k = lo; k < H; ++k) {
      Complex x = h[k][k], y = h[k + 1][k];
      Real r = sqrt(norm(x) + norm(y));
      Complex cc = r.is_zero() ? Complex(1) : x / Complex(r);
      Complex sc = r.is_zero() ? Complex(0) : y / Complex(r);
      for (std::size_t j = k; j <= H; ++j) {
        Complex t1 = conj(cc) * h[k][j] + conj(sc) * h[k + 1][j];
        Complex t2 = -sc * h[k][j] + cc * h[k + 1][j];
        h[k][j] = t1;
        h[k + 1][j] = t2;
      }
      cs.push_back(cc);
      ss.push_back(sc);
    }
    for (std::size_t k = lo; k < H; ++k) {
      const Complex& cc = cs[k - lo];
      const Complex& sc = ss[k - lo];
      for (std::size_t i = lo; i <= std::min(H, k + 2); ++i) {
        Complex t1 = h[i][k] * cc + h[i][k + 1] * sc;
        Complex t2 = -(h[i][k] * conj(sc)) + h[i][k + 1] * conj(cc);
        h[i][k] = t1;
        h[i][k + 1] = t2;
      }
    }
    for (std::size_t k = lo; k <= H; ++k) h[k][k] += mu;
  }
  return true;
}

inline void newton_polish(const Poly<Complex>& p, std::vector<Complex>& z, int steps) {
  Poly<Complex> dp = p.derivative();
  for (auto& r : z) {
    for (int s = 0; s < steps; ++s) {
      Complex d = dp(r);
      if (d.is_zero()) break;
      r -= p(r) / d;
    }
  }
}

}  // namespace detail

/// All deg(p) roots, sorted by real part then imaginary part. Throws
/// NonConvergence when neither method meets the residual bound
/// sum |p(r)| / max|coeff| < 2^(-bits/2).
inline std::vector<Complex> poly_roots(const Poly<Complex>& p_in, long bits = default_precision_bits) {
  if (p_in.degree() < 1) throw std::invalid_argument("poly_roots needs degree >= 1");
  PrecisionScope scope(bits);
  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (p_in.coeff(zeros).is_zero()) ++zeros;
  std::vector<Complex> rest(p_in.coeffs().begin() + static_cast<long>(zeros), p_in.coeffs().end());
  Poly<Complex> p(rest);
  for (std::size_t k = 0; k < zeros; ++k) roots.emplace_back(0);
  Real bound_tol = Real::pow2(-bits / 2);

  if (p.degree() >= 1) {
    long d = p.degree();
    Complex lc = p.leading();
    Real cauchy(0);
    for (long k = 0; k < d; ++k) cauchy = std::max(cauchy, abs(p.coeff(static_cast<std::size_t>(k)) / lc));
    cauchy += Real(1);
    std::vector<Complex> z;
    Real two_pi = Real::pi() * Real(2);
    for (long k = 0; k < d; ++k) {
      Real theta = two_pi * Real(k) / Real(d) + Real(0.4);
      z.push_back(Complex::polar(cauchy * Real(0.5), theta));
    }
    bool ok = detail::aberth(p, z, bits, 400 + 40 * static_cast<int>(d));
    if (!ok || detail::root_residual(p, z) >= bound_tol) {
      std::vector<std::vector<Complex>> comp(static_cast<std::size_t>(d), std::vector<Complex>(static_cast<std::size_t>(d), Complex(0)));
      for (long i = 1; i < d; ++i) comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = Complex(1);
      for (long i = 0; i < d; ++i)
        comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] = -(p.coeff(static_cast<std::size_t>(i)) / lc);
      std::vector<Complex> ev;
      if (detail::hessenberg_eigenvalues(comp, ev, bits)) {
        detail::newton_polish(p, ev, 8);
        z = ev;
      }
    }
    for (auto& r : z) roots.push_back(r);
  }
  Real res = detail::root_residual(p_in, roots);
  if (res >= bound_tol) {
    double lg = res.is_zero() ? -1e9 : log2(res).to_double();
    throw NonConvergence("poly_roots did not converge (residual 2^" + std::to_string(lg) + ")", lg);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() < b.real()) return true;
    if (b.real() < a.real()) return false;
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace frob
