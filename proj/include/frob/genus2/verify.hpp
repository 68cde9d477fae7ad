#pragma once

// Identity checks over the genus-two workbench: the decomposition of F2,
// coefficient recovery, the derivative identities of the graph calculus,
// the sixteen-term relation, O1 - O2 and the small phase space evaluation.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frob/exact/linear.hpp"
#include "frob/families/checks.hpp"
#include "frob/genus2/workbench.hpp"
#include "frob/util/parallel.hpp"
#include "frob/util/report.hpp"

namespace frob::g2 {

/// A random assignment of the free generators: distinct u_i, nonzero h_i
/// and u_i', arbitrary gamma_ij and higher jets.
template <class T = Rational>
fam::SamplePoint<T> random_free_point(int n, std::uint64_t seed, int max_jet = 4, std::int64_t height = 50) {
  Rng rng(seed);
  fam::SamplePoint<T> s;
  s.n = n;
  s.seed = seed;
  s.spec = fam::FamilySpec{};
  s.params = {{"free", true}};
  for (;;) {
    std::vector<Rational> u;
    for (int i = 0; i < n; ++i) u.push_back(rng.rational(height));
    if (!fam::detail::pairwise_distinct(u)) continue;
    for (const auto& x : u) s.u.push_back(ScalarTraits<T>::from_rational(x));
    break;
  }
  for (int i = 0; i < n; ++i) s.h.push_back(ScalarTraits<T>::from_rational(rng.nonzero_rational(height)));
  s.gamma.assign(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n), T(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      T g = ScalarTraits<T>::from_rational(rng.rational(height));
      s.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g;
      s.gamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = g;
    }
  for (const auto& h : s.h) s.eta.push_back(h * h);
  s.jets = fam::random_jets<T>(n, max_jet, rng, height);
  return s;
}

template <class T>
std::string point_digest(const fam::SamplePoint<T>& s) {
  return digest(fam::to_json(s).dump());
}

/// Evaluates expressions at a point, tracking the largest summand.
template <class T>
struct PointEval {
  jet::EvalContext<T> ctx;
  Store& store;
  PointEval(Store& st, const fam::SamplePoint<T>& s) : ctx(s.context()), store(st) {}
  /// The value of e and the exponent of the largest term met on the way.
  std::pair<T, long> operator()(Expr e) {
    jet::Evaluator<T> ev(store, ctx);
    T v = ev(e);
    return {v, ev.max_exponent()};
  }
};

template <class T>
TrialResult zero_trial(int index, const fam::SamplePoint<T>& s, Workbench& w, Expr e) {
  PointEval<T> pe(w.store(), s);
  auto [v, ref] = pe(e);
  ZeroTest z = zero_test(v, ref);
  TrialResult t;
  t.index = index;
  t.seed = s.seed;
  t.point_digest = point_digest(s);
  t.residual = z.residual;
  t.pass = z.pass;
  return t;
}

template <class T>
std::string mode_name() {
  return ScalarTraits<T>::exact ? "exact" : "numeric";
}

inline void stamp(VerificationReport& r, const std::string& command, int n, std::uint64_t seed, bool exact) {
  r.command = command;
  r.n = n;
  r.seed = seed;
  r.mode = exact ? "exact" : "numeric";
  r.precision = exact ? 0 : static_cast<long>(default_precision_bits);
}

/// F2 - sum c_p Q_p - G2 at random free points.
template <class T = Rational>
VerificationReport check_decomposition(Workbench& w, int trials, std::uint64_t seed,
                                       const std::vector<Rational>& coeffs = graphs::q_coefficients()) {
  Stopwatch sw;
  VerificationReport r;
  stamp(r, "verify-decomposition", w.n(), seed, ScalarTraits<T>::exact);
  Expr e = w.decomposition_residual(coeffs);
  r.trials = parallel_map<TrialResult>(trials, [&](int t) {
    return zero_trial(t, random_free_point<T>(w.n(), trial_seed(seed, static_cast<std::uint64_t>(t))), w, e);
  });
  r.finish();
  r.wall_time = sw.seconds();
  return r;
}

struct CoefficientSolution {
  std::vector<graphs::DualGraph> graphs;  // the enumerated graphs, in enumeration order
  std::vector<std::string> names;         // catalog names (Q1..Q16), empty if unmatched
  std::vector<Rational> values;           // solved coefficients; empty when rank-deficient
  int samples = 0;
  bool unique = false;
  bool multiset_ok = false;
  bool anchors_ok = false;
  std::map<std::string, Rational> by_name() const {
    std::map<std::string, Rational> m;
    for (std::size_t k = 0; k < values.size(); ++k) m[names[k].empty() ? graphs[k].str() : names[k]] = values[k];
    return m;
  }
};

/// Solves sum a_g graph(g) = F2 - G2 exactly over the enumerated admissible
/// graphs at random free points.
inline CoefficientSolution solve_coefficients(Workbench& w, int samples, std::uint64_t seed) {
  if (samples < 32) throw std::invalid_argument("solve_coefficients needs at least 32 samples");
  CoefficientSolution sol;
  sol.graphs = graphs::enumerate_admissible();
  for (const auto& g : sol.graphs) sol.names.push_back(graphs::catalog_name(g));
  std::vector<Expr> cols;
  for (const auto& g : sol.graphs) cols.push_back(w.graph(g));
  Expr rhs = w.f2_reference() - w.g2_function();
  std::size_t m = cols.size();
  auto rows = parallel_map<std::vector<Rational>>(samples, [&](int t) {
    auto s = random_free_point<Rational>(w.n(), trial_seed(seed, static_cast<std::uint64_t>(t)));
    jet::EvalContext<Rational> ctx = s.context();
    jet::Evaluator<Rational> ev(w.store(), ctx);
    std::vector<Rational> row;
    for (auto c : cols) row.push_back(ev(c));
    row.push_back(ev(rhs));
    return row;
  });
  Matrix<Rational> a;
  std::vector<Rational> b;
  for (auto& row : rows) {
    b.push_back(row.back());
    row.pop_back();
    a.push_back(row);
  }
  sol.samples = samples;
  auto x = solve_overdetermined(a, b);
  if (!x) return sol;
  sol.unique = true;
  sol.values = *x;
  std::vector<Rational> got = sol.values, want = graphs::q_coefficients();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  sol.multiset_ok = got.size() == m && got == want;
  auto anchor = [&](const std::string& name, const Rational& v) {
    for (std::size_t k = 0; k < m; ++k)
      if (sol.names[k] == name) return sol.values[k] == v;
    return false;
  };
  sol.anchors_ok = anchor("Q1", 0) && anchor("Q2", Rational(-1, 960)) && anchor("Q15", Rational(-7, 240)) &&
                   anchor("Q16", Rational(7, 10));
  return sol;
}

/// The derivative identities of the graph calculus, as (graph, combination).
struct DerivativeIdentity {
  std::string lhs;
  std::vector<std::pair<std::string, long>> rhs;
  std::string str() const {
    std::string s = "d/dx " + lhs + " =";
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      long c = rhs[k].second;
      s += (k == 0 ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
      if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + " ";
      s += rhs[k].first;
    }
    return s;
  }
};

inline const std::vector<DerivativeIdentity>& derivative_identities() {
  static const std::vector<DerivativeIdentity> ids = {
      {"P1", {{"Q1", 1}, {"Q3", -2}}},
      {"P2", {{"Q3", 1}, {"Q5", 1}, {"Q7", -1}, {"Q9", -2}}},
      {"P3", {{"Q4", 1}, {"Q8", 1}, {"Q10", 1}, {"Q11", -2}, {"Q12", -2}}},
      {"P4", {{"Q6", 1}, {"Q2", 1}, {"Q10", -3}}},
      {"P5", {{"Q2", 2}, {"Q4", -3}}},
      {"O1", {{"P1", 1}, {"P2", -2}}},
      {"O2", {{"P4", 1}, {"P5", 1}, {"P3", -3}}},
  };
  return ids;
}

inline Expr derivative_identity_residual(Workbench& w, const DerivativeIdentity& id) {
  std::vector<std::pair<Expr, Rational>> items{{w.store().total_x(w.graph(id.lhs)), Rational(1)}};
  for (const auto& [name, c] : id.rhs) items.emplace_back(w.graph(name), Rational(-c));
  return w.store().lincomb(items);
}

/// Structural check of an identity: the graph calculus applied to the left
/// side yields exactly the right side.
inline bool derivative_identity_structural(const DerivativeIdentity& id) {
  auto canon = [](const graphs::DualGraph& g) { return graphs::canonicalize(g); };
  std::map<graphs::DualGraph, int> want, got;
  for (const auto& [name, c] : id.rhs) want[canon(graphs::builtin(name))] += static_cast<int>(c);
  for (const auto& [c, g] : graphs::collect_terms(graphs::graph_x_derivative(graphs::builtin(id.lhs)))) got[canon(g)] += c;
  std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
  return got == want;
}

/// The seven derivative identities at random free points.
inline VerificationReport check_derivative_identities(Workbench& w, int trials, std::uint64_t seed) {
  Stopwatch sw;
  VerificationReport r;
  stamp(r, "verify-derivatives", w.n(), seed, true);
  std::vector<Expr> res;
  for (const auto& id : derivative_identities()) res.push_back(derivative_identity_residual(w, id));
  r.trials = parallel_map<TrialResult>(trials, [&](int t) {
    auto s = random_free_point<Rational>(w.n(), trial_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<fam::IdentityCheck> checks;
    PointEval<Rational> pe(w.store(), s);
    for (std::size_t k = 0; k < res.size(); ++k) checks.push_back({derivative_identities()[k].str(), zero_test(pe(res[k]).first, LONG_MIN)});
    return fam::detail::collect(t, s.seed, fam::to_json(s).dump(), checks);
  });
  r.finish();
  r.wall_time = sw.seconds();
  return r;
}

/// The sixteen-term relation at a point: it vanishes (family points) and it
/// equals d_x^2 (O1 - O2) (every point).
template <class T>
TrialResult check_relation(Workbench& w, const fam::SamplePoint<T>& s, int index = 0, bool expect_zero = true) {
  PointEval<T> pe(w.store(), s);
  auto [lhs, ref] = pe(w.relation_lhs());
  auto [rhs, ref2] = pe(w.relation_rhs());
  std::vector<fam::IdentityCheck> checks;
  if (expect_zero) checks.push_back({"relation = 0", zero_test(lhs, ref)});
  checks.push_back({"relation = d_x^2 (O1 - O2)", zero_test(T(lhs - rhs), std::max(ref, ref2))});
  TrialResult t = fam::detail::collect(index, s.seed, fam::to_json(s).dump(), checks);
  if (!expect_zero) t.detail["relation_value"] = fam::scalar_json(lhs);
  return t;
}

/// O1 - O2 at a point: the closed form, the graph evaluation and, for
/// families with a constant value, that constant.
template <class T>
TrialResult o_difference(Workbench& w, const fam::SamplePoint<T>& s, int index = 0, std::optional<Rational> expected = std::nullopt) {
  PointEval<T> pe(w.store(), s);
  auto [closed, ref] = pe(w.o_difference_closed());
  auto [graph, ref2] = pe(w.o_difference_graphs());
  std::vector<fam::IdentityCheck> checks;
  checks.push_back({"closed form = O1 - O2 (graphs)", zero_test(T(closed - graph), std::max(ref, ref2))});
  if (expected) {
    T c = ScalarTraits<T>::from_rational(*expected);
    checks.push_back({"O1 - O2 = " + to_string(*expected), zero_test(T(closed - c), std::max(ref, ScalarTraits<T>::exponent(c)))});
  }
  TrialResult t = fam::detail::collect(index, s.seed, fam::to_json(s).dump(), checks);
  t.detail["value"] = fam::scalar_json(closed);
  return t;
}

/// G2 at the point's (u, h, gamma) with u_x = 1 and u_xx = ... = 0.
template <class T>
std::pair<T, long> g2_small_phase(Workbench& w, const fam::SamplePoint<T>& s) {
  int mj = s.jets.empty() ? 4 : static_cast<int>(s.jets[0].size()) - 1;
  PointEval<T> pe(w.store(), s.with_jets(fam::small_phase_jets<T>(s.n, mj)));
  return pe(w.g2_function());
}

/// G2 = 0 at a point, on the full jet space and on the small phase space.
template <class T>
TrialResult check_g2(Workbench& w, const fam::SamplePoint<T>& s, int index = 0) {
  PointEval<T> pe(w.store(), s);
  auto [g, ref] = pe(w.g2_function());
  auto [gs, refs] = g2_small_phase(w, s);
  std::vector<fam::IdentityCheck> checks{{"G2 = 0", zero_test(g, ref)}, {"G2 = 0 on the small phase space", zero_test(gs, refs)}};
  TrialResult t = fam::detail::collect(index, s.seed, fam::to_json(s).dump(), checks);
  t.detail["g2"] = fam::scalar_json(g);
  return t;
}

/// f2_reference against the four-graph formula at a point.
template <class T>
TrialResult check_a2_formula(Workbench& w, const fam::SamplePoint<T>& s, int index = 0) {
  return zero_trial(index, s, w, w.f2_reference() - w.a2_formula());
}

struct AffineSearch {
  std::size_t candidates = 0;
  int points = 0;
  std::vector<std::array<std::string, 3>> matches;
  std::string residual_scale;
};

/// Searches all ordered triples (W1, W2, W3) among connected stable
/// degree-two graphs the evaluator supports for which the seven-graph
/// formula reproduces f2_reference at the given numeric points.
inline AffineSearch affine_a1_search(Workbench& w, const std::vector<fam::NumericPoint>& pts, int max_vertices = 5) {
  AffineSearch out;
  std::vector<graphs::DualGraph> cand;
  for (const auto& g : graphs::enumerate_degree_two(max_vertices)) {
    try {
      graphs::GraphEvaluator::check_supported(g);
    } catch (const std::exception&) {
      continue;
    }
    cand.push_back(g);
  }
  out.candidates = cand.size();
  out.points = static_cast<int>(pts.size());
  if (pts.empty()) return out;
  std::vector<Expr> ce;
  for (const auto& g : cand) ce.push_back(w.graph(g));
  Expr d = w.f2_reference() - w.a2_formula();
  std::size_t np = pts.size();
  std::vector<Complex> dv(np);
  std::vector<std::vector<Complex>> cv(cand.size(), std::vector<Complex>(np));
  std::vector<long> ref(np);
  for (std::size_t t = 0; t < np; ++t) {
    jet::EvalContext<Complex> ctx = pts[t].context();
    jet::Evaluator<Complex> ev(w.store(), ctx);
    dv[t] = ev(d);
    for (std::size_t k = 0; k < cand.size(); ++k) cv[k][t] = ev(ce[k]);
    ref[t] = ev.max_exponent();
  }
  out.residual_scale = "2^" + std::to_string(ref[0]);
  // W3 = (d + W1/480 - 7 W2/5760) * 5760/11 at the first point, looked up by value.
  Complex a(Rational(1, 480)), b(Rational(-7, 5760)), c(Rational(5760, 11)), cw(Rational(11, 5760));
  std::vector<std::pair<double, std::size_t>> index;
  for (std::size_t k = 0; k < cand.size(); ++k) index.emplace_back(cv[k][0].real().to_double(), k);
  std::sort(index.begin(), index.end());
  auto close = [&](const Complex& x, const Complex& y, long e) { return negligible(Complex(x - y), e, 64); };
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j) {
      Complex want = (dv[0] + a * cv[i][0] + b * cv[j][0]) * c;
      double wr = want.real().to_double();
      double tol = 1e-9 * std::max(1.0, std::abs(wr));
      auto lo = std::lower_bound(index.begin(), index.end(), std::make_pair(wr - tol, std::size_t(0)));
      for (auto it = lo; it != index.end() && it->first <= wr + tol; ++it) {
        std::size_t k = it->second;
        bool ok = true;
        for (std::size_t t = 0; t < np && ok; ++t)
          ok = close(dv[t], Complex(Complex(0) - a * cv[i][t] - b * cv[j][t] + cw * cv[k][t]), ref[t]);
        if (ok) out.matches.push_back({cand[i].str(), cand[j].str(), cand[k].str()});
      }
    }
  return out;
}

}  // namespace frob::g2
