#pragma once

// Samplers: draw the free parameters of a family and build (u, h, gamma)
// from its spectral data. A_n, D_n and the two-dimensional family are exact
// over a multiquadratic field; the others use numeric roots.

#include <climits>
#include <functional>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "frob/exact/linear.hpp"
#include "frob/exact/poly.hpp"
#include "frob/exact/radical.hpp"
#include "frob/exact/random.hpp"
#include "frob/exact/roots.hpp"
#include "frob/families/point.hpp"
#include "frob/families/spec.hpp"

namespace frob::fam {

using ExactPoint = SamplePoint<RadicalNumber>;
using NumericPoint = SamplePoint<Complex>;
using AnyPoint = std::variant<ExactPoint, NumericPoint>;

class DegenerateSample : public std::runtime_error {
public:
  DegenerateSample() : std::runtime_error("could not draw a nondegenerate sample") {}
};

struct SampleOptions {
  int max_jet = 4;
  long bits = 256;
  int attempts = 200;
};

namespace detail {

inline Complex eval(const Poly<Rational>& p, const Complex& z) {
  Complex acc(0);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + Complex(c[k]);
  return acc;
}

inline Complex eval(const RationalFunction<Rational>& f, const Complex& z) { return eval(f.num(), z) / eval(f.den(), z); }

inline Poly<Complex> to_complex(const Poly<Rational>& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Poly<Complex>(std::move(c));
}

inline RationalFunction<Rational> rf(const Poly<Rational>& p) { return RationalFunction<Rational>(p); }

inline Poly<Rational> mono(const Rational& a, std::size_t k) { return Poly<Rational>::monomial(a, k); }

inline nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

template <class T>
bool pairwise_distinct(const std::vector<T>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (ScalarTraits<T>::is_zero(v[i] - v[j])) return false;
  return true;
}

/// sqrt(a_i) = q_i r_{m_i} over a multiplicatively independent basis of
/// the radicands modulo squares.
struct RadicalBasis {
  std::vector<Rational> basis;
  std::vector<std::pair<std::uint32_t, Rational>> roots;
};

inline RadicalBasis reduce_radicands(const std::vector<Rational>& a) {
  RadicalBasis rb;
  for (const auto& x : a) {
    bool found = false;
    std::uint32_t full = (1U << rb.basis.size()) - 1U;
    for (std::uint32_t m = 0; m <= full && !found; ++m) {
      Rational p = 1;
      for (std::size_t k = 0; k < rb.basis.size(); ++k)
        if ((m >> k) & 1U) p *= rb.basis[k];
      Rational y = x * p;
      if (is_rational_square(y)) {
        rb.roots.emplace_back(m, Rational(rational_sqrt(y) / p));
        found = true;
      }
    }
    if (!found) {
      rb.roots.emplace_back(1U << rb.basis.size(), Rational(1));
      rb.basis.push_back(x);
    }
  }
  return rb;
}

/// Seeds the exact point with the given roots-derived data and radicands:
/// h_i = 1/sqrt(a_i), gamma_ij = w_ij h_i h_j. Dependent radicands are
/// rewritten over an independent basis so zero tests stay exact.
inline bool fill_exact(ExactPoint& s, const std::vector<Rational>& u, const std::vector<Rational>& radicands,
                       const std::function<Rational(int, int)>& weight) {
  RadicalBasis rb = reduce_radicands(radicands);
  auto field = std::make_shared<const RadicalField>(rb.basis);
  int n = static_cast<int>(u.size());
  s.n = n;
  s.u.assign(u.begin(), u.end());
  s.h.resize(static_cast<std::size_t>(n));
  s.eta.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational& a = radicands[static_cast<std::size_t>(i)];
    const auto& [m, q] = rb.roots[static_cast<std::size_t>(i)];
    s.h[static_cast<std::size_t>(i)] = RadicalNumber::monomial(field, m, 1 / (q * field->mask_product(m)));
    s.eta[static_cast<std::size_t>(i)] = RadicalNumber(Rational(1 / a));
  }
  s.gamma.assign(static_cast<std::size_t>(n), std::vector<RadicalNumber>(static_cast<std::size_t>(n), RadicalNumber(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RadicalNumber g = s.h[static_cast<std::size_t>(i)] * s.h[static_cast<std::size_t>(j)] * RadicalNumber(weight(i, j));
      s.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g;
      s.gamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = g;
    }
  return true;
}

inline long exponent_of(const Complex& x) { return ScalarTraits<Complex>::exponent(x); }

/// Largest exponent among |x| for the values given.
inline long max_exponent(const std::vector<Complex>& v) {
  long e = LONG_MIN;
  for (const auto& x : v) e = std::max(e, exponent_of(x));
  return e;
}

/// Numeric (u, h, gamma) from per-root data: eta_i = h_i^2 and
/// gamma_ij = h_i h_j w_ij.
inline void fill_numeric(NumericPoint& s, std::vector<Complex> u, std::vector<Complex> eta,
                         const std::function<Complex(int, int)>& weight) {
  int n = static_cast<int>(u.size());
  s.n = n;
  s.u = std::move(u);
  s.eta = std::move(eta);
  s.h.clear();
  for (const auto& e : s.eta) s.h.push_back(sqrt(e));
  s.gamma.assign(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n), Complex(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Complex g = s.h[static_cast<std::size_t>(i)] * s.h[static_cast<std::size_t>(j)] * weight(i, j);
      s.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g;
      s.gamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = g;
    }
}

/// Conditioning guard on numeric roots: pairwise gaps at least 1e-3 of the
/// root spread.
inline bool well_separated(const std::vector<Complex>& z) {
  Real spread(0), gap(-1);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      Real d = abs(z[i] - z[j]);
      spread = std::max(spread, d);
      if (gap.sign() < 0 || d < gap) gap = d;
    }
  if (z.size() < 2) return true;
  return gap > spread * Real(1e-3);
}

inline bool all_distinct_numeric(const std::vector<Complex>& v) {
  Real spread(0);
  for (const auto& a : v)
    for (const auto& b : v) spread = std::max(spread, abs(a - b));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (abs(v[i] - v[j]) <= spread * Real(1e-6)) return false;
  return true;
}

/// d log t_n / du_i from the Jacobian du_j/dt_k = (d lambda/d t_k)(z_j):
/// row n of the inverse Jacobian divided by t_n.
inline std::vector<Complex> dlog_last_parameter(const std::vector<RationalFunction<Rational>>& dlam,
                                                const std::vector<Complex>& z, const Rational& tn, long bits) {
  std::size_t n = z.size();
  Matrix<Complex> jt(n, std::vector<Complex>(n, Complex(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) jt[k][j] = eval(dlam[k], z[j]);
  std::vector<Complex> e(n, Complex(0));
  e[n - 1] = Complex(1);
  std::vector<Complex> x = solve_linear(jt, e, bits);
  for (auto& v : x) v = v / Complex(tn);
  return x;
}

}  // namespace detail

/// lambda(z) = int_0^z (n+1) prod (xi - z_k) dxi + z0.
inline Poly<Rational> an_lambda(const std::vector<Rational>& z, const Rational& z0) {
  Poly<Rational> dl = Rational(static_cast<long>(z.size()) + 1) * Poly<Rational>::from_roots(z);
  return dl.antiderivative() + Poly<Rational>::constant(z0);
}

/// lambda(x) = int (n-1) xi^-2 prod (xi - x_k) dxi + x0, requiring sum 1/x_k = 0.
inline RationalFunction<Rational> dn_lambda(const std::vector<Rational>& x, const Rational& x0) {
  std::size_t n = x.size();
  Poly<Rational> pr = Rational(static_cast<long>(n) - 1) * Poly<Rational>::from_roots(x);
  if (sgn(pr.coeff(1)) != 0) throw std::logic_error("D_n: logarithmic term does not vanish");
  // sum_{k>=2} c_k x^(k-1)/(k-1) - c_0/x + x0, over the denominator x
  std::vector<Rational> num(n + 1, Rational(0));
  num[0] = -pr.coeff(0);
  num[1] = x0;
  for (std::size_t k = 2; k <= n; ++k) num[k] = pr.coeff(k) / Rational(static_cast<long>(k - 1));
  return RationalFunction<Rational>(Poly<Rational>(num), detail::mono(1, 1));
}

/// A_n: lambda'(z) = (n+1) prod (z - z_k) with sum z_k = 0,
/// h_i = 1/sqrt(lambda''(z_i)), gamma_ij = h_i h_j / (z_i - z_j)^2.
inline ExactPoint sample_an(int n, std::uint64_t seed, const SampleOptions& opt = {}) {
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> z(static_cast<std::size_t>(n));
    Rational sum = 0;
    for (int k = 0; k + 1 < n; ++k) sum += (z[static_cast<std::size_t>(k)] = rng.nonzero_rational(12));
    z[static_cast<std::size_t>(n - 1)] = -sum;
    if (!detail::pairwise_distinct(z)) continue;
    Rational z0 = rng.rational(12);
    Poly<Rational> lam = an_lambda(z, z0);
    Poly<Rational> d2 = lam.derivative(2);
    std::vector<Rational> u, a;
    for (const auto& zi : z) u.push_back(lam(zi)), a.push_back(d2(zi));
    if (!detail::pairwise_distinct(u)) continue;
    ExactPoint s;
    s.spec = FamilySpec::an(n);
    s.seed = seed;
    if (!detail::fill_exact(s, u, a, [&](int i, int j) {
          Rational d = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
          return Rational(1 / (d * d));
        }))
      continue;
    s.params = {{"z", detail::rationals_json(z)}, {"z0", z0.get_str()}};
    s.jets = random_jets<RadicalNumber>(n, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

/// D_n: lambda'(x) = (n-1) x^-2 prod (x - x_k) with sum 1/x_k = 0,
/// h_i = 1/sqrt(2 x_i lambda''(x_i)), gamma_ij = (x_i + x_j) h_i h_j / (x_i - x_j)^2.
inline ExactPoint sample_dn(int n, std::uint64_t seed, const SampleOptions& opt = {}) {
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> x(static_cast<std::size_t>(n));
    Rational s_inv = 0;
    for (int k = 0; k + 1 < n; ++k) s_inv += 1 / (x[static_cast<std::size_t>(k)] = rng.nonzero_rational(12));
    if (sgn(s_inv) == 0) continue;
    x[static_cast<std::size_t>(n - 1)] = -1 / s_inv;
    if (!detail::pairwise_distinct(x)) continue;
    Rational x0 = rng.rational(12);
    RationalFunction<Rational> lam = dn_lambda(x, x0);
    RationalFunction<Rational> d1 = lam.derivative(), d2 = d1.derivative();
    std::vector<Rational> u, a;
    for (const auto& xi : x) {
      if (sgn(d1(xi)) != 0) throw std::logic_error("D_n: x_i is not a critical point");
      u.push_back(lam(xi));
      a.push_back(2 * xi * d2(xi));
    }
    if (!detail::pairwise_distinct(u)) continue;
    ExactPoint s;
    s.spec = FamilySpec::dn(n);
    s.seed = seed;
    if (!detail::fill_exact(s, u, a, [&](int i, int j) {
          const Rational& xi = x[static_cast<std::size_t>(i)];
          const Rational& xj = x[static_cast<std::size_t>(j)];
          return Rational((xi + xj) / ((xi - xj) * (xi - xj)));
        }))
      continue;
    s.params = {{"x", detail::rationals_json(x)}, {"x0", x0.get_str()}};
    s.jets = random_jets<RadicalNumber>(n, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

/// Two dimensions: h_1 = sqrt(-1) h_2, gamma_12 = -sqrt(-1) mu / (u_1 - u_2).
inline ExactPoint sample_two_dim(const Rational& mu, std::uint64_t seed, const SampleOptions& opt = {}) {
  Rng rng(seed);
  auto field = std::make_shared<const RadicalField>(std::vector<Rational>{Rational(-1)});
  RadicalNumber i_unit = RadicalNumber::root(field, 0);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    Rational u1 = rng.rational(50), u2 = rng.rational(50), h2 = rng.nonzero_rational(50);
    if (u1 == u2) continue;
    ExactPoint s;
    s.spec = FamilySpec::two_dim(mu);
    s.seed = seed;
    s.n = 2;
    s.u = {RadicalNumber(u1), RadicalNumber(u2)};
    s.h = {i_unit * RadicalNumber(h2), RadicalNumber(h2)};
    s.eta = {s.h[0] * s.h[0], s.h[1] * s.h[1]};
    RadicalNumber g = -(i_unit * RadicalNumber(Rational(mu / (u1 - u2))));
    s.gamma = {{RadicalNumber(0), g}, {g, RadicalNumber(0)}};
    s.params = {{"mu", mu.get_str()}, {"h2", h2.get_str()}};
    s.jets = random_jets<RadicalNumber>(2, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

/// One-variable spectral families (the orbifold cases): the critical points
/// are the roots of the numerator of lambda'.
struct SpectralCurve {
  RationalFunction<Rational> lambda;
  std::vector<RationalFunction<Rational>> dlambda_dt;  // d lambda / d t_k, k = 1..n
  Rational tn;
};

namespace detail {

inline bool fill_spectral(NumericPoint& s, const SpectralCurve& c, int n, long bits,
                          const std::function<Complex(const Complex&, const Complex&)>& eta_upper,
                          const std::function<Complex(const Complex&, const Complex&)>& weight) {
  RationalFunction<Rational> d1 = c.lambda.derivative(), d2 = d1.derivative();
  if (d1.num().degree() != n) return false;
  std::vector<Complex> z = poly_roots(to_complex(d1.num()), bits);
  if (!well_separated(z)) return false;
  std::vector<Complex> u, eta, l2;
  for (const auto& zi : z) {
    if (zi.is_zero() || eval(d1.den(), zi).is_zero()) return false;
    u.push_back(eval(c.lambda, zi));
    Complex e = eta_upper(zi, eval(d2, zi));
    if (negligible(e, exponent_of(zi), 20)) return false;
    eta.push_back(Complex(1) / e);
  }
  if (!all_distinct_numeric(u)) return false;
  long ref = LONG_MIN;
  for (const auto& x : d1.num().coeffs()) ref = std::max(ref, rational_exponent(x));
  std::vector<Complex> res;
  for (const auto& zi : z) res.push_back(eval(d1.num(), zi));
  s.consistency_exponent = detail::max_exponent(res) == LONG_MIN ? LONG_MIN : detail::max_exponent(res) - ref;
  fill_numeric(s, u, eta, [&](int i, int j) { return weight(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]); });
  s.dlog_tn = dlog_last_parameter(c.dlambda_dt, z, c.tn, bits);
  return true;
}

}  // namespace detail

/// lambda(z) = P1(z) + P2(t_n/z) + t_{n-1}, eta^ii = -z_i^2 lambda''(z_i),
/// gamma_ij = -h_i h_j z_i z_j / (z_i - z_j)^2.
inline SpectralCurve apq_curve(int p, int q, const std::vector<Rational>& t) {
  int n = p + q;
  const Rational& tn = t[static_cast<std::size_t>(n - 1)];
  // P2(w) = w^q + sum_{i<q} t_{p-1+i} w^i
  std::vector<Rational> b(static_cast<std::size_t>(q) + 1, Rational(0));
  b[static_cast<std::size_t>(q)] = 1;
  for (int i = 1; i < q; ++i) b[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(p - 2 + i)];
  // lambda = (z^q (P1(z) + t_{n-1}) + sum_i b_i t_n^i z^(q-i)) / z^q
  Poly<Rational> p1 = detail::mono(1, static_cast<std::size_t>(p)) + Poly<Rational>::constant(t[static_cast<std::size_t>(n - 2)]);
  for (int i = 1; i < p; ++i) p1 = p1 + detail::mono(t[static_cast<std::size_t>(i - 1)], static_cast<std::size_t>(i));
  Poly<Rational> num = p1 * detail::mono(1, static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i) num = num + detail::mono(b[static_cast<std::size_t>(i)] * rational_pow(tn, i), static_cast<std::size_t>(q - i));
  Poly<Rational> den = detail::mono(1, static_cast<std::size_t>(q));
  SpectralCurve c{RationalFunction<Rational>(num, den), {}, tn};
  c.dlambda_dt.resize(static_cast<std::size_t>(n));
  for (int i = 1; i < p; ++i) c.dlambda_dt[static_cast<std::size_t>(i - 1)] = detail::rf(detail::mono(1, static_cast<std::size_t>(i)));
  for (int i = 1; i < q; ++i)
    c.dlambda_dt[static_cast<std::size_t>(p - 2 + i)] =
        RationalFunction<Rational>(Poly<Rational>::constant(rational_pow(tn, i)), detail::mono(1, static_cast<std::size_t>(i)));
  c.dlambda_dt[static_cast<std::size_t>(n - 2)] = detail::rf(Poly<Rational>::constant(1));
  Poly<Rational> dn;
  for (int i = 1; i <= q; ++i)
    dn = dn + detail::mono(Rational(i) * b[static_cast<std::size_t>(i)] * rational_pow(tn, i - 1), static_cast<std::size_t>(q - i));
  c.dlambda_dt[static_cast<std::size_t>(n - 1)] = RationalFunction<Rational>(dn, den);
  return c;
}

/// lambda(z) = P3(z) + (t1^2 + z t1 t2 + t2^2)/(z^2 - 4), P3 = sum_{i<=r} t_{3+i} z^i.
inline SpectralCurve dr_curve(int r, const std::vector<Rational>& t) {
  int n = r + 3;
  const Rational& t1 = t[0];
  const Rational& t2 = t[1];
  Poly<Rational> p3;
  for (int i = 0; i <= r; ++i) p3 = p3 + detail::mono(t[static_cast<std::size_t>(2 + i)], static_cast<std::size_t>(i));
  Poly<Rational> quad({Rational(-4), Rational(0), Rational(1)});
  Poly<Rational> orb({t1 * t1 + t2 * t2, t1 * t2});
  SpectralCurve c{detail::rf(p3) + RationalFunction<Rational>(orb, quad), {}, t[static_cast<std::size_t>(n - 1)]};
  c.dlambda_dt.resize(static_cast<std::size_t>(n));
  c.dlambda_dt[0] = RationalFunction<Rational>(Poly<Rational>({2 * t1, t2}), quad);
  c.dlambda_dt[1] = RationalFunction<Rational>(Poly<Rational>({2 * t2, t1}), quad);
  for (int i = 0; i <= r; ++i) c.dlambda_dt[static_cast<std::size_t>(2 + i)] = detail::rf(detail::mono(1, static_cast<std::size_t>(i)));
  return c;
}

inline NumericPoint sample_apq(int p, int q, std::uint64_t seed, const SampleOptions& opt = {}) {
  PrecisionScope scope(opt.bits);
  Rng rng(seed);
  int n = p + q;
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> t;
    for (int k = 0; k < n; ++k) t.push_back(rng.nonzero_rational(9));
    SpectralCurve c = apq_curve(p, q, t);
    NumericPoint s;
    s.spec = FamilySpec::apq(p, q);
    s.seed = seed;
    bool ok = detail::fill_spectral(
        s, c, n, opt.bits, [](const Complex& z, const Complex& l2) { return -(z * z * l2); },
        [](const Complex& zi, const Complex& zj) {
          Complex d = zi - zj;
          return -(zi * zj) / (d * d);
        });
    if (!ok) continue;
    s.params = {{"p", p}, {"q", q}, {"t", detail::rationals_json(t)}};
    s.jets = random_jets<Complex>(n, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

inline NumericPoint sample_dr(int r, std::uint64_t seed, const SampleOptions& opt = {}) {
  PrecisionScope scope(opt.bits);
  Rng rng(seed);
  int n = r + 3;
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> t;
    for (int k = 0; k < n; ++k) t.push_back(rng.nonzero_rational(9));
    SpectralCurve c = dr_curve(r, t);
    NumericPoint s;
    s.spec = FamilySpec::dr(r);
    s.seed = seed;
    Complex four(4);
    bool ok = detail::fill_spectral(
        s, c, n, opt.bits, [&](const Complex& z, const Complex& l2) { return (four - z * z) * l2; },
        [&](const Complex& zi, const Complex& zj) {
          Complex d = zi - zj;
          return (four - zi * zj) / (d * d);
        });
    if (!ok) continue;
    s.params = {{"r", r}, {"t", detail::rationals_json(t)}};
    s.jets = random_jets<Complex>(n, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

/// E6 and E8: F = x^3 + p(y) x + q(y), R = 3 q'^2 + p p'^2, y_i the roots of
/// R, x_i = -q'(y_i)/p'(y_i), eta_ii = -p'(y_i)/R'(y_i),
/// gamma_ki = 3 h_k h_i (x_i + x_k)/(y_i - y_k)^2.
struct E68Data {
  Poly<Rational> p, q;
};

inline E68Data e68_polys(int n, const std::vector<Rational>& t) {
  int nu = n / 2;
  E68Data d;
  for (int k = 1; k <= nu; ++k) {
    d.p = d.p + detail::mono(t[static_cast<std::size_t>(k - 1)], static_cast<std::size_t>(nu - k));
    d.q = d.q + detail::mono(t[static_cast<std::size_t>(nu + k - 1)], static_cast<std::size_t>(nu - k));
  }
  d.q = d.q + detail::mono(1, static_cast<std::size_t>(nu + 1));
  return d;
}

inline NumericPoint sample_e68(int n, std::uint64_t seed, const SampleOptions& opt = {}) {
  PrecisionScope scope(opt.bits);
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> t;
    for (int k = 0; k < n; ++k) t.push_back(rng.nonzero_rational(9));
    E68Data d = e68_polys(n, t);
    Poly<Rational> p1 = d.p.derivative(), p2 = p1.derivative(), q1 = d.q.derivative(), q2 = q1.derivative();
    Poly<Rational> rr = Rational(3) * q1 * q1 + d.p * p1 * p1;
    if (rr.degree() != n) continue;
    Poly<Rational> r1 = rr.derivative();
    std::vector<Complex> y = poly_roots(detail::to_complex(rr), opt.bits);
    if (!detail::well_separated(y)) continue;
    std::vector<Complex> x, u, eta, check;
    bool ok = true;
    for (const auto& yi : y) {
      Complex dp = detail::eval(p1, yi);
      if (negligible(dp, detail::exponent_of(yi), 10)) ok = false;
      if (!ok) break;
      Complex xi = -detail::eval(q1, yi) / dp;
      Complex pv = detail::eval(d.p, yi);
      x.push_back(xi);
      u.push_back(xi * xi * xi + pv * xi + detail::eval(d.q, yi));
      Complex e = -dp / detail::eval(r1, yi);
      eta.push_back(e);
      Complex hess = Complex(6) * xi * (detail::eval(p2, yi) * xi + detail::eval(q2, yi)) - dp * dp;
      check.push_back(Complex(3) * xi * xi + pv);
      check.push_back(e * hess - Complex(1));
    }
    if (!ok || !detail::all_distinct_numeric(u)) continue;
    NumericPoint s;
    s.spec = n == 6 ? FamilySpec::e6() : FamilySpec::e8();
    s.seed = seed;
    s.consistency_exponent = detail::max_exponent(check);
    detail::fill_numeric(s, u, eta, [&](int i, int k) {
      Complex dy = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(k)];
      return Complex(3) * (x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(k)]) / (dy * dy);
    });
    s.params = {{"t", detail::rationals_json(t)}};
    s.jets = random_jets<Complex>(n, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

/// E7: F = x^3 + p x^2 + q x + r with p = t1 y + t2, q = y^3 + t3 y + t4,
/// r = t5 y^2 + t6 y + t7; P = 2pp' - 3q', Q = 3r' - p'q, S = qq' - 2pr',
/// R = Q^2 - PS, x_i = Q/P at the roots of R, eta_ii = P(y_i)/R'(y_i) and
/// gamma_ki = 3 h_k h_i (xt_i + xt_k)/(y_i - y_k)^2 with xt = x + p/3.
inline NumericPoint sample_e7(std::uint64_t seed, const SampleOptions& opt = {}) {
  PrecisionScope scope(opt.bits);
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Rational> t;
    for (int k = 0; k < 7; ++k) t.push_back(rng.nonzero_rational(9));
    Poly<Rational> p({t[1], t[0]}), q({t[3], t[2], Rational(0), Rational(1)}), r({t[6], t[5], t[4]});
    Poly<Rational> p1 = p.derivative(), q1 = q.derivative(), r1 = r.derivative();
    Poly<Rational> bp = Rational(2) * p * p1 - Rational(3) * q1;
    Poly<Rational> bq = Rational(3) * r1 - p1 * q;
    Poly<Rational> bs = q * q1 - Rational(2) * p * r1;
    Poly<Rational> rr = bq * bq - bp * bs;
    if (rr.degree() != 7) continue;
    Poly<Rational> rd = rr.derivative();
    std::vector<Complex> y = poly_roots(detail::to_complex(rr), opt.bits);
    if (!detail::well_separated(y)) continue;
    std::vector<Complex> xt, u, eta, check;
    bool ok = true;
    for (const auto& yi : y) {
      Complex pv = detail::eval(bp, yi);
      if (negligible(pv, detail::exponent_of(yi), 10)) {
        ok = false;
        break;
      }
      Complex xi = detail::eval(bq, yi) / pv;
      Complex a = detail::eval(p, yi), b = detail::eval(q, yi), c = detail::eval(r, yi);
      u.push_back(((xi + a) * xi + b) * xi + c);
      xt.push_back(xi + a / Complex(3));
      eta.push_back(pv / detail::eval(rd, yi));
      check.push_back(Complex(3) * xi * xi + Complex(2) * a * xi + b);
      check.push_back(detail::eval(p1, yi) * xi * xi + detail::eval(q1, yi) * xi + detail::eval(r1, yi));
    }
    if (!ok || !detail::all_distinct_numeric(u)) continue;
    NumericPoint s;
    s.spec = FamilySpec::e7();
    s.seed = seed;
    s.consistency_exponent = detail::max_exponent(check);
    detail::fill_numeric(s, u, eta, [&](int i, int k) {
      Complex dy = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(k)];
      return Complex(3) * (xt[static_cast<std::size_t>(i)] + xt[static_cast<std::size_t>(k)]) / (dy * dy);
    });
    s.params = {{"t", detail::rationals_json(t)}};
    s.jets = random_jets<Complex>(7, opt.max_jet, rng);
    return s;
  }
  throw DegenerateSample();
}

inline AnyPoint sample(const FamilySpec& spec, std::uint64_t seed, const SampleOptions& opt = {}) {
  switch (spec.kind) {
    case Kind::An: return sample_an(spec.n, seed, opt);
    case Kind::Dn: return sample_dn(spec.n, seed, opt);
    case Kind::TwoDim: return sample_two_dim(spec.mu, seed, opt);
    case Kind::E6: return sample_e68(6, seed, opt);
    case Kind::E8: return sample_e68(8, seed, opt);
    case Kind::E7: return sample_e7(seed, opt);
    case Kind::Apq: return sample_apq(spec.p, spec.q, seed, opt);
    case Kind::Dr: return sample_dr(spec.r, seed, opt);
  }
  throw std::logic_error("bad family kind");
}

}  // namespace frob::fam
