#pragma once

// Command-line front end. run() parses argv, executes one verb and writes
// JSON lines (one object per trial, then a summary) to the output stream.
// Exit status: 0 pass, 1 fail, 2 usage error, 3 numeric non-convergence.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "frob/genus2/verify.hpp"
#include "frob/jetalg/sexpr.hpp"

namespace frob::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kNonConvergence = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct FamilyArgs {
  std::string family = "an";
  int n = 3, p = 2, q = 2, r = 1;
  std::string mu = "1/6";

  void add_to(CLI::App* sub, bool allow_free) {
    std::string names = allow_free ? "an, dn, e6, e7, e8, apq, dr, 2d, free" : "an, dn, e6, e7, e8, apq, dr, 2d";
    sub->add_option("--family", family, "family: " + names)->capture_default_str();
    sub->add_option("--n", n, "dimension for an, dn and free")->capture_default_str();
    sub->add_option("--p", p, "apq: first orbifold order")->capture_default_str();
    sub->add_option("--q", q, "apq: second orbifold order")->capture_default_str();
    sub->add_option("--r", r, "dr: polynomial degree")->capture_default_str();
    sub->add_option("--mu", mu, "2d: the rational mu_1")->capture_default_str();
  }
  bool is_free() const { return family == "free"; }
  fam::FamilySpec spec() const { return fam::parse_family(family, n, p, q, r, parse_rational(mu)); }
  int dimension() const { return is_free() ? n : spec().dimension(); }
  nlohmann::json params() const {
    nlohmann::json j = nlohmann::json::object();
    if (family == "apq") j = {{"p", p}, {"q", q}};
    if (family == "dr") j = {{"r", r}};
    if (family == "2d") j = {{"mu", parse_rational(mu).get_str()}};
    return j;
  }
};

struct Common {
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
  long precision = 256;
  std::string mode = "auto";
  std::string output;
  bool timing = false;

  void add_to(CLI::App* sub, int default_trials, bool with_mode) {
    trials = default_trials;
    sub->add_option("--trials", trials, "number of random trials")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "master seed; trial t uses a seed derived from (seed, t)")->capture_default_str();
    // the numeric tolerance is 2^-128 relative; keep 32 guard bits above it
    sub->add_option("--precision", precision, "working precision in bits for numeric mode")
        ->capture_default_str()
        ->check(CLI::Range(kToleranceBits + 32, 1L << 16));
    if (with_mode)
      sub->add_option("--mode", mode, "exact, numeric, or auto (exact where the family allows)")
          ->capture_default_str()
          ->check(CLI::IsMember({"auto", "exact", "numeric"}));
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_flag("--timing", timing, "include wall time in the summary (reports then differ between runs)");
  }
};

namespace detail {

/// Runs check(point, t) over sampled family points.
template <class F>
std::vector<TrialResult> over_family(const FamilyArgs& fa, const Common& c, F&& check) {
  fam::FamilySpec spec = fa.spec();
  fam::SampleOptions opt;
  opt.bits = c.precision;
  bool numeric = c.mode == "numeric";
  if (c.mode == "exact" && !spec.exact()) throw std::invalid_argument("family " + spec.name() + " has no exact mode");
  return parallel_map<TrialResult>(c.trials, [&](int t) {
    fam::AnyPoint pt = fam::sample(spec, trial_seed(c.seed, static_cast<std::uint64_t>(t)), opt);
    return std::visit(
        [&](auto& s) -> TrialResult {
          if (numeric) return check(fam::to_numeric(s), t);
          return check(s, t);
        },
        pt);
  });
}

/// Runs check(point, t) over random free points.
template <class F>
std::vector<TrialResult> over_free(int n, const Common& c, F&& check) {
  bool numeric = c.mode == "numeric";
  return parallel_map<TrialResult>(c.trials, [&](int t) {
    std::uint64_t s = trial_seed(c.seed, static_cast<std::uint64_t>(t));
    if (numeric) return check(g2::random_free_point<Complex>(n, s), t);
    return check(g2::random_free_point<Rational>(n, s), t);
  });
}

inline bool family_is_exact(const FamilyArgs& fa, const Common& c) {
  if (c.mode == "numeric") return false;
  return fa.is_free() || fa.spec().exact();
}

inline void header(VerificationReport& r, const std::string& cmd, const FamilyArgs& fa, const Common& c, bool exact) {
  r.command = cmd;
  r.family = fa.is_free() ? "free" : fa.spec().name();
  r.n = fa.dimension();
  r.params = fa.params();
  r.seed = c.seed;
  r.mode = exact ? "exact" : "numeric";
  r.precision = exact ? 0 : c.precision;
}

}  // namespace detail

class App {
public:
  App() : app_("Genus-two free energy verification workbench") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "help for every subcommand");
    app_.footer(std::string("Environment: ") + kWorkersEnv + " sets the number of worker threads (default 1).\n"
                "Exit status: 0 pass, 1 fail, 2 usage error, 3 numeric non-convergence.");

    auto* dec = app_.add_subcommand("verify-decomposition", "F2 - sum c_p Q_p - G2 = 0 at random free points");
    dec->add_option("--n", dec_n_, "dimension")->capture_default_str()->check(CLI::Range(1, 6));
    dec->add_option("--coeff", dec_overrides_, "override a constant, e.g. 2=-1/961 (sensitivity control)");
    dec_common_.add_to(dec, 20, true);

    auto* sol = app_.add_subcommand("solve-coefficients", "solve for the graph constants over the enumerated graphs");
    sol->add_option("--n", sol_n_, "dimension")->capture_default_str()->check(CLI::Range(1, 6));
    sol->add_option("--samples", sol_samples_, "random points (at least 32)")->capture_default_str()->check(CLI::Range(32, 100000));
    sol->add_option("--seed", sol_seed_, "master seed")->capture_default_str();
    sol->add_option("--output", sol_output_, "write the report here instead of stdout");

    auto* g2 = app_.add_subcommand("verify-g2", "G2 = 0 on family points, also on the small phase space");
    g2_fam_.add_to(g2, true);
    g2->add_option("--expect", g2_expect_, "zero or nonzero")->capture_default_str()->check(CLI::IsMember({"zero", "nonzero"}));
    g2_common_.add_to(g2, 3, true);

    auto* rel = app_.add_subcommand("verify-relation", "the sixteen-term relation and its equality with d_x^2 (O1 - O2)");
    rel_fam_.add_to(rel, true);
    rel_common_.add_to(rel, 3, true);

    auto* od = app_.add_subcommand("compute-odiff", "O1 - O2: closed form, graph evaluation, family constant");
    od_fam_.add_to(od, true);
    od_common_.add_to(od, 1, true);

    auto* gf = app_.add_subcommand("verify-gfunction", "gradient of the G-function against its closed form");
    gf_fam_.add_to(gf, false);
    gf_common_.add_to(gf, 3, true);

    auto* res = app_.add_subcommand("verify-residues", "residue identities for an, dn, e6, e8");
    res_fam_.add_to(res, false);
    res_common_.add_to(res, 5, false);

    auto* en = app_.add_subcommand("enumerate-graphs", "list the genus-two graphs");
    en->add_option("--emit", en_emit_, "json, dot or text")->capture_default_str()->check(CLI::IsMember({"json", "dot", "text"}));
    en->add_option("--set", en_set_, "admissible (the sixteen) or degree-two (all connected stable, subdivisions kept)")
        ->capture_default_str()
        ->check(CLI::IsMember({"admissible", "degree-two"}));
    en->add_option("--max-vertices", en_max_vertices_, "vertex bound for degree-two")->capture_default_str()->check(CLI::Range(1, 6));
    en->add_option("--output", en_output_, "write here instead of stdout");

    auto* de = app_.add_subcommand("dump-expr", "print an expression DAG as an S-expression");
    de->add_option("--n", de_n_, "dimension")->capture_default_str()->check(CLI::Range(1, 6));
    de->add_option("--expr", de_expr_,
                   "f2, g2, decomposition, relation, odiff, a2, H<i>, dG<i>, or a graph name (Q1..Q16, P1..P5, O1, O2)")
        ->capture_default_str();
    de->add_option("--output", de_output_, "write here instead of stdout");
  }

  int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app_.help();
      return kPass;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return kPass;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return kUsage;
    }
    try {
      return dispatch(out);
    } catch (const NonConvergence& e) {
      err << "non-convergence: " << e.what() << "\n";
      return kNonConvergence;
    } catch (const std::invalid_argument& e) {
      err << "usage: " << e.what() << "\n";
      return kUsage;
    } catch (const std::out_of_range& e) {
      err << "usage: " << e.what() << "\n";
      return kUsage;
    } catch (const fam::DegenerateSample& e) {
      err << "sampling failed: " << e.what() << "\n";
      return kFail;
    }
  }

private:
  int dispatch(std::ostream& out) {
    auto* sub = app_.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "verify-decomposition") return verify_decomposition(out);
    if (name == "solve-coefficients") return solve_coefficients(out);
    if (name == "verify-g2") return verify_g2(out);
    if (name == "verify-relation") return verify_relation(out);
    if (name == "compute-odiff") return compute_odiff(out);
    if (name == "verify-gfunction") return verify_gfunction(out);
    if (name == "verify-residues") return verify_residues(out);
    if (name == "enumerate-graphs") return enumerate_graphs(out);
    if (name == "dump-expr") return dump_expr(out);
    return kUsage;
  }

  static void write(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
      out << text;
      out.flush();
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    f << text;
  }

  static int emit(std::ostream& out, const Common& c, VerificationReport& r, const Stopwatch& sw) {
    r.finish();
    r.wall_time = sw.seconds();
    std::string text;
    for (const auto& t : r.trials) text += t.to_json().dump() + "\n";
    nlohmann::json s = r.summary();
    if (!c.timing) s.erase("wall_time");
    text += s.dump() + "\n";
    write(out, c.output, text);
    return r.verdict ? kPass : kFail;
  }

  int verify_decomposition(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(dec_common_.precision);
    std::vector<Rational> coeffs = graphs::q_coefficients();
    nlohmann::json overrides = nlohmann::json::object();
    for (const auto& o : dec_overrides_) {
      auto eq = o.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--coeff expects p=value");
      int p = std::stoi(o.substr(0, eq));
      if (p < 1 || p > 16) throw std::invalid_argument("--coeff index must be 1..16");
      coeffs[static_cast<std::size_t>(p - 1)] = parse_rational(o.substr(eq + 1));
      overrides[std::to_string(p)] = coeffs[static_cast<std::size_t>(p - 1)].get_str();
    }
    g2::Workbench w(dec_n_);
    jet::Expr e = w.decomposition_residual(coeffs);
    FamilyArgs fa;
    fa.family = "free";
    fa.n = dec_n_;
    VerificationReport r;
    bool exact = dec_common_.mode != "numeric";
    detail::header(r, "verify-decomposition", fa, dec_common_, exact);
    if (!overrides.empty()) r.params["coefficient_overrides"] = overrides;
    r.trials = detail::over_free(dec_n_, dec_common_, [&](const auto& s, int t) { return g2::zero_trial(t, s, w, e); });
    return emit(out, dec_common_, r, sw);
  }

  int solve_coefficients(std::ostream& out) {
    g2::Workbench w(sol_n_);
    g2::CoefficientSolution sol = g2::solve_coefficients(w, sol_samples_, sol_seed_);
    std::string text;
    for (std::size_t k = 0; k < sol.graphs.size(); ++k) {
      nlohmann::json j{{"graph", graphs::to_json(sol.graphs[k])}, {"name", sol.names[k]}};
      j["coefficient"] = sol.unique ? nlohmann::json(sol.values[k].get_str()) : nlohmann::json(nullptr);
      text += j.dump() + "\n";
    }
    bool ok = sol.unique && sol.multiset_ok && sol.anchors_ok;
    nlohmann::json s{{"command", "solve-coefficients"}, {"n", sol_n_},          {"seed", sol_seed_},
                     {"samples", sol.samples},          {"mode", "exact"},      {"tolerance", "exact zero"},
                     {"unique", sol.unique},            {"multiset_matches", sol.multiset_ok},
                     {"anchors_match", sol.anchors_ok}, {"verdict", ok ? "pass" : "fail"}};
    text += s.dump() + "\n";
    write(out, sol_output_, text);
    return ok ? kPass : kFail;
  }

  int verify_g2(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(g2_common_.precision);
    g2::Workbench w(g2_fam_.dimension());
    w.g2_function();
    bool want_zero = g2_expect_ == "zero";
    VerificationReport r;
    detail::header(r, "verify-g2", g2_fam_, g2_common_, detail::family_is_exact(g2_fam_, g2_common_));
    r.params["expect"] = g2_expect_;
    auto check = [&](const auto& s, int t) {
      TrialResult tr = g2::check_g2(w, s, t);
      if (!want_zero) {
        // nonzero expected: G2 itself must fail the zero test
        tr.pass = !tr.detail["checks"][0]["pass"].template get<bool>();
      }
      return tr;
    };
    if (g2_fam_.is_free())
      r.trials = detail::over_free(g2_fam_.n, g2_common_, check);
    else
      r.trials = detail::over_family(g2_fam_, g2_common_, check);
    return emit(out, g2_common_, r, sw);
  }

  int verify_relation(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(rel_common_.precision);
    g2::Workbench w(rel_fam_.dimension());
    w.relation_lhs();
    w.relation_rhs();
    VerificationReport r;
    detail::header(r, "verify-relation", rel_fam_, rel_common_, detail::family_is_exact(rel_fam_, rel_common_));
    bool free = rel_fam_.is_free();
    auto check = [&](const auto& s, int t) { return g2::check_relation(w, s, t, !free); };
    r.trials = free ? detail::over_free(rel_fam_.n, rel_common_, check) : detail::over_family(rel_fam_, rel_common_, check);
    return emit(out, rel_common_, r, sw);
  }

  int compute_odiff(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(od_common_.precision);
    g2::Workbench w(od_fam_.dimension());
    w.o_difference_closed();
    w.o_difference_graphs();
    std::optional<Rational> expected;
    if (!od_fam_.is_free()) expected = fam::closed_form_o_difference(od_fam_.spec());
    VerificationReport r;
    detail::header(r, "compute-odiff", od_fam_, od_common_, detail::family_is_exact(od_fam_, od_common_));
    if (expected) r.extra["closed_form"] = expected->get_str();
    auto check = [&](const auto& s, int t) { return g2::o_difference(w, s, t, expected); };
    r.trials = od_fam_.is_free() ? detail::over_free(od_fam_.n, od_common_, check) : detail::over_family(od_fam_, od_common_, check);
    return emit(out, od_common_, r, sw);
  }

  int verify_gfunction(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(gf_common_.precision);
    fam::FamilySpec spec = gf_fam_.spec();
    if (spec.kind == fam::Kind::TwoDim) throw std::invalid_argument("verify-gfunction does not cover the 2d family");
    if ((spec.kind == fam::Kind::Apq || spec.kind == fam::Kind::Dr) && gf_common_.mode == "exact")
      throw std::invalid_argument("orbifold families are numeric only");
    g2::Workbench w(gf_fam_.dimension());
    const auto& grads = w.g_gradients();
    VerificationReport r;
    detail::header(r, "verify-gfunction", gf_fam_, gf_common_, detail::family_is_exact(gf_fam_, gf_common_));
    r.trials = detail::over_family(gf_fam_, gf_common_,
                                   [&](const auto& s, int t) { return fam::gfunction_gradient_check(s, w.store(), grads, t); });
    return emit(out, gf_common_, r, sw);
  }

  int verify_residues(std::ostream& out) {
    Stopwatch sw;
    PrecisionScope ps(res_common_.precision);
    fam::FamilySpec spec = res_fam_.spec();
    fam::SampleOptions opt;
    opt.bits = res_common_.precision;
    VerificationReport r;
    detail::header(r, "verify-residues", res_fam_, res_common_, spec.kind == fam::Kind::An || spec.kind == fam::Kind::Dn);
    if (spec.kind == fam::Kind::E6 || spec.kind == fam::Kind::E8) {
      r.mode = "mixed";
      r.precision = res_common_.precision;
      r.extra["note"] = "parameters are rational: values at rational points are exact, sums over numeric roots use the tolerance";
    }
    r.trials = parallel_map<TrialResult>(res_common_.trials, [&](int t) {
      return fam::residue_identity_suite(spec, trial_seed(res_common_.seed, static_cast<std::uint64_t>(t)), t, opt);
    });
    return emit(out, res_common_, r, sw);
  }

  int enumerate_graphs(std::ostream& out) {
    std::vector<graphs::DualGraph> gs =
        en_set_ == "admissible" ? graphs::enumerate_admissible() : graphs::enumerate_degree_two(en_max_vertices_);
    std::string text;
    if (en_emit_ == "json") {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& g : gs) {
        nlohmann::json j = graphs::to_json(g);
        std::string name = graphs::catalog_name(g);
        if (!name.empty()) j["name"] = name;
        a.push_back(j);
      }
      text = nlohmann::json{{"set", en_set_}, {"count", gs.size()}, {"graphs", a}}.dump(1) + "\n";
    } else if (en_emit_ == "dot") {
      for (std::size_t k = 0; k < gs.size(); ++k) {
        std::string name = graphs::catalog_name(gs[k]);
        text += graphs::to_dot(gs[k], name.empty() ? "G" + std::to_string(k + 1) : name);
      }
    } else {
      for (const auto& g : gs) {
        std::string name = graphs::catalog_name(g);
        text += (name.empty() ? std::string("-") : name) + "\t" + g.str() + "\n";
      }
      text += std::to_string(gs.size()) + " graphs\n";
    }
    write(out, en_output_, text);
    return kPass;
  }

  int dump_expr(std::ostream& out) {
    g2::Workbench w(de_n_);
    jet::Expr e;
    const std::string& x = de_expr_;
    auto index = [&](std::size_t pos) {
      int i = std::stoi(x.substr(pos));
      if (i < 1 || i > de_n_) throw std::invalid_argument("index out of range in " + x);
      return i - 1;
    };
    if (x == "f2") e = w.f2_reference();
    else if (x == "g2") e = w.g2_function();
    else if (x == "decomposition") e = w.decomposition_residual();
    else if (x == "relation") e = w.relation_lhs();
    else if (x == "odiff") e = w.o_difference_closed();
    else if (x == "a2") e = w.a2_formula();
    else if (x.rfind("dG", 0) == 0) e = w.g_gradients()[static_cast<std::size_t>(index(2))];
    else if (x.size() > 1 && x[0] == 'H' && std::isdigit(static_cast<unsigned char>(x[1]))) e = w.h_function(index(1));
    else e = w.graph(x);
    write(out, de_output_, jet::dump_sexpr(w.store(), e));
    return kPass;
  }

  CLI::App app_;
  int dec_n_ = 2;
  std::vector<std::string> dec_overrides_;
  Common dec_common_;
  int sol_n_ = 2, sol_samples_ = 32;
  std::uint64_t sol_seed_ = kDefaultSeed;
  std::string sol_output_;
  FamilyArgs g2_fam_, rel_fam_, od_fam_, gf_fam_, res_fam_;
  std::string g2_expect_ = "zero";
  Common g2_common_, rel_common_, od_common_, gf_common_, res_common_;
  std::string en_emit_ = "json", en_set_ = "admissible", en_output_;
  int en_max_vertices_ = 4;
  int de_n_ = 1;
  std::string de_expr_ = "f2", de_output_;
};

/// Parses and runs one command line.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  App app;
  return app.run(argc, argv, out, err);
}

}  // namespace frob::cli
