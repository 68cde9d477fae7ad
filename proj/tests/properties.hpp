#pragma once

// Kernel property checks shared by the unit tests and the acceptance
// binary. Every check draws its own data from a seed and reports one line.

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "frob/exact/residue.hpp"
#include "frob/exact/roots.hpp"
#include "frob/genus2/verify.hpp"

namespace frob::props {

using jet::Expr;
using jet::Store;
using g2::Section;
using g2::TableExpander;

struct Outcome {
  explicit Outcome(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  int cases = 0;
  std::string failure;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
  std::string str() const {
    std::string s = name + ": " + std::to_string(cases) + " cases";
    if (!pass) s += ", first failure: " + failure;
    return s;
  }
};

inline long exp_of(const Complex& x) { return ScalarTraits<Complex>::exponent(x); }

/// Sum of all residues of a rational function, infinity included, is zero.
/// Exact: random rational poles with multiplicity up to 3. Numeric: poles
/// are the computed roots of a random integer polynomial.
inline Outcome residue_global_sum(std::uint64_t seed, int draws = 20) {
  Outcome o("residue global-sum rule");
  Rng rng(seed);
  for (int d = 0; d < draws; ++d) {
    int np = static_cast<int>(rng.uniform(1, 4));
    std::vector<Rational> poles;
    std::vector<long> mult;
    Poly<Rational> den = Poly<Rational>::constant(rng.nonzero_rational(9));
    while (static_cast<int>(poles.size()) < np) {
      Rational a = rng.rational(20);
      if (std::find(poles.begin(), poles.end(), a) != poles.end()) continue;
      long m = rng.uniform(1, 3);
      poles.push_back(a);
      mult.push_back(m);
      for (long k = 0; k < m; ++k) den = den * Poly<Rational>::from_roots({a});
    }
    std::vector<Rational> nc;
    long nd = rng.uniform(0, den.degree() + 2);
    for (long k = 0; k <= nd; ++k) nc.push_back(rng.rational(15));
    RationalFunction<Rational> f(Poly<Rational>(nc), den);
    Rational total = residue_at_infinity(f);
    for (std::size_t k = 0; k < poles.size(); ++k) total += residue(f, poles[k], mult[k]);
    o.require(sgn(total) == 0, "exact draw " + std::to_string(d) + " sums to " + total.get_str());
  }
  for (int d = 0; d < draws; ++d) {
    long deg = rng.uniform(2, 8);
    std::vector<Complex> dc, nc;
    for (long k = 0; k <= deg; ++k) dc.emplace_back(Rational(rng.uniform(-20, 20)));
    if (ScalarTraits<Complex>::is_zero(dc.back())) dc.back() = Complex(1);
    long nd = rng.uniform(0, deg + 1);
    for (long k = 0; k <= nd; ++k) nc.emplace_back(Rational(rng.uniform(-20, 20)));
    Poly<Complex> den(dc);
    RationalFunction<Complex> f(Poly<Complex>(nc), den);
    std::vector<Complex> roots = poly_roots(den);
    Complex total = residue_at_infinity(f);
    long ref = exp_of(total);
    for (const auto& r : roots) {
      Complex x = residue(f, r, 1L);
      ref = std::max(ref, exp_of(x));
      total += x;
    }
    o.require(negligible(total, ref, kToleranceBits), "numeric draw " + std::to_string(d));
  }
  return o;
}

/// Computed roots rebuild the polynomial: the coefficients of
/// lead * prod (z - r) agree with the input to 2^-128 of the largest one,
/// and roots of a polynomial with known rational roots are recovered.
inline Outcome root_reconstruction(std::uint64_t seed, int draws = 20) {
  Outcome o("root-reconstruction bound");
  Rng rng(seed);
  for (int d = 0; d < draws; ++d) {
    long deg = rng.uniform(1, 16);
    std::vector<Complex> c;
    for (long k = 0; k <= deg; ++k) c.emplace_back(Real(Rational(rng.uniform(-1000, 1000))), Real(Rational(rng.uniform(-1000, 1000))));
    if (ScalarTraits<Complex>::is_zero(c.back())) c.back() = Complex(1);
    Poly<Complex> p(c);
    std::vector<Complex> roots = poly_roots(p);
    o.require(static_cast<long>(roots.size()) == deg, "root count at draw " + std::to_string(d));
    Poly<Complex> q = p.leading() * Poly<Complex>::from_roots(roots);
    long ref = exp_of(Complex(frob::detail::max_abs_coeff(p)));
    bool ok = true;
    for (long k = 0; k <= deg; ++k) ok = ok && negligible(Complex(q.coeff(static_cast<std::size_t>(k)) - p.coeff(static_cast<std::size_t>(k))), ref, kToleranceBits);
    o.require(ok, "reconstruction at draw " + std::to_string(d) + ", degree " + std::to_string(deg));
  }
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> want;
    long deg = rng.uniform(1, 10);
    while (static_cast<long>(want.size()) < deg) {
      Rational a = rng.rational(30);
      if (std::find(want.begin(), want.end(), a) == want.end()) want.push_back(a);
    }
    Poly<Rational> p = Poly<Rational>::from_roots(want);
    std::vector<Complex> pc;
    for (const auto& x : p.coeffs()) pc.emplace_back(x);
    std::vector<Complex> got = poly_roots(Poly<Complex>(pc));
    bool ok = got.size() == want.size();
    for (const auto& a : want) {
      bool hit = false;
      for (const auto& g : got) hit = hit || negligible(Complex(g - Complex(a)), std::max(exp_of(Complex(a)), 0L), kToleranceBits);
      ok = ok && hit;
    }
    o.require(ok, "known roots at draw " + std::to_string(d));
  }
  return o;
}

/// d_i d_j e = d_j d_i e for the u-partials (and mixed u / jet partials)
/// of a graph function and a genus-one correlator, exactly at free points.
inline Outcome mixed_partials(int n, std::uint64_t seed, int points = 3) {
  Outcome o("mixed-partial commutativity (n=" + std::to_string(n) + ")");
  g2::Workbench w(n);
  Store& s = w.store();
  std::vector<std::pair<std::string, Expr>> es{{"Q4", w.graph("Q4")}, {"P3", w.graph("P3")},
                                               {"D_0", w.table().correlator_D({0})}, {"C_0001", w.table().correlator_C({0, 0, 0, n - 1})}};
  struct Pair {
    std::string what;
    Expr a, b;
  };
  std::vector<Pair> pairs;
  for (const auto& [name, e] : es)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        pairs.push_back({name + " u" + std::to_string(i) + " u" + std::to_string(j), s.partial_u(s.partial_u(e, i), j),
                         s.partial_u(s.partial_u(e, j), i)});
        pairs.push_back({name + " u" + std::to_string(i) + " jet" + std::to_string(j), s.partial_jet(s.partial_u(e, i), j, 1),
                         s.partial_u(s.partial_jet(e, j, 1), i)});
      }
  for (int t = 0; t < points; ++t) {
    auto pt = g2::random_free_point<Rational>(n, trial_seed(seed, static_cast<std::uint64_t>(t)));
    g2::PointEval<Rational> pe(s, pt);
    for (const auto& p : pairs) o.require(pe(p.a).first == pe(p.b).first, p.what + " at point " + std::to_string(t));
  }
  return o;
}

/// C and D correlators do not depend on which index the recursion
/// differentiates along last.
inline Outcome correlator_symmetry(int n, std::uint64_t seed, int points = 2) {
  Outcome o("C-symmetry (n=" + std::to_string(n) + ")");
  g2::Workbench w(n);
  auto& tb = w.table();
  struct Case {
    std::string what;
    Expr a, b;
  };
  std::vector<Case> cases;
  Rng rng(seed);
  auto add = [&](std::vector<int> t, bool genus0) {
    Expr ref = genus0 ? tb.correlator_C(t) : tb.correlator_D(t);
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::vector<int> head = t;
      head.erase(head.begin() + static_cast<long>(k));
      std::string label = genus0 ? "C" : "D";
      for (int x : t) label += std::to_string(x);
      cases.push_back({label + " via " + std::to_string(t[k]), tb.correlator_step(head, t[k], genus0), ref});
    }
  };
  for (int len = 4; len <= 5; ++len)
    for (int r = 0; r < 3; ++r) {
      std::vector<int> t;
      for (int k = 0; k < len; ++k) t.push_back(static_cast<int>(rng.uniform(0, n - 1)));
      add(t, true);
    }
  for (int len = 2; len <= 3; ++len)
    for (int r = 0; r < 3; ++r) {
      std::vector<int> t;
      for (int k = 0; k < len; ++k) t.push_back(static_cast<int>(rng.uniform(0, n - 1)));
      add(t, false);
    }
  for (int t = 0; t < points; ++t) {
    auto pt = g2::random_free_point<Rational>(n, trial_seed(seed, static_cast<std::uint64_t>(t)));
    g2::PointEval<Rational> pe(w.store(), pt);
    for (const auto& c : cases) o.require(pe(c.a).first == pe(c.b).first, c.what + " at point " + std::to_string(t));
  }
  return o;
}

/// Every term of the F2 and G2 tables has jet degree two: structurally on
/// the parsed term, and by evaluation (u^(p) -> 2^p u^(p) scales each
/// record sum by 4).
inline Outcome jet_degree_two(int n, std::uint64_t seed) {
  Outcome o("jet-degree-2 grading (n=" + std::to_string(n) + ")");
  Store s(n, 4);
  TableExpander ex(s);
  auto pt = g2::random_free_point<Rational>(n, seed);
  auto scaled = pt;
  for (auto& row : scaled.jets)
    for (std::size_t p = 1; p < row.size(); ++p) row[p] *= Rational(1L << p);
  g2::PointEval<Rational> pe(s, pt), ps(s, scaled);
  auto scan = [&](const std::vector<Section>& secs, const std::string& table) {
    for (const auto& sec : secs) {
      auto fd = g2::jet_degree(*sec.factor);
      for (const auto& rec : sec.records) {
        auto d = g2::jet_degree(*rec.ast);
        std::string where = table + " line " + std::to_string(rec.line);
        o.require(d && fd && *d + *fd == 2, where + " structural degree");
        Expr e = ex.record_sum(sec, rec);
        o.require(ps(e).first == 4 * pe(e).first, where + " scaling");
      }
    }
  };
  scan(g2::parse_table(g2::kF2Table), "F2");
  scan(g2::parse_table(g2::kG2Table), "G2");
  return o;
}

}  // namespace frob::props
