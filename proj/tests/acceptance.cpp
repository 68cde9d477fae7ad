// Acceptance run: one PASS/FAIL line per criterion, with the supporting
// runs listed underneath. Exit status is nonzero when any criterion fails.
//
// Tolerances are fixed here: exact checks require an identically zero
// residual; numeric checks run at 256 bits and require a residual below
// 2^-128 of the largest term. FROB_WORKERS is honoured as in the CLI.

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frob/cli/app.hpp"
#include "properties.hpp"

namespace {

using namespace frob;

constexpr long kPrecision = 256;
constexpr std::uint64_t kSeed = 20240601;
static_assert(kToleranceBits == 128, "acceptance tolerance is 2^-128 relative");

struct Criterion {
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void part(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { notes.push_back("      " + what); }
};

struct CliResult {
  int exit = -1;
  nlohmann::json summary;
  std::string text;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "frob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.exit = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.text = out.str();
  std::string last;
  std::istringstream in(r.text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) last = line;
  if (!last.empty() && last[0] == '{') r.summary = nlohmann::json::parse(last);
  if (!err.str().empty()) r.summary["stderr"] = err.str();
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

/// Runs a verb and records it as one part: passes when the exit status
/// matches `want` (0 unless stated).
void run_part(Criterion& c, std::vector<std::string> args, int want = 0) {
  CliResult r = cli(args);
  std::string what = join(args);
  if (r.summary.contains("passed")) what += "  [" + std::to_string(r.summary["passed"].get<int>()) + "/" + std::to_string(r.summary["trials"].get<int>()) + "]";
  if (r.summary.contains("tolerance")) what += "  tol " + r.summary["tolerance"].get<std::string>();
  if (r.summary.contains("stderr")) what += "  " + r.summary["stderr"].get<std::string>();
  c.part(r.exit == want, what + "  exit " + std::to_string(r.exit));
}

std::vector<std::string> base(std::vector<std::string> args, int trials) {
  args.push_back("--trials");
  args.push_back(std::to_string(trials));
  args.push_back("--seed");
  args.push_back(std::to_string(kSeed));
  args.push_back("--precision");
  args.push_back(std::to_string(kPrecision));
  return args;
}

Criterion decomposition() {
  Criterion c(1, "decomposition F2 - sum c_p Q_p - G2 = 0, n = 1, 2, 3, 20 exact points");
  for (int n = 1; n <= 3; ++n) run_part(c, base({"verify-decomposition", "--n", std::to_string(n), "--mode", "exact"}, 20));
  // control: one perturbed constant must be detected
  run_part(c, base({"verify-decomposition", "--n", "2", "--mode", "exact", "--coeff", "2=-1/961"}, 5), 1);
  return c;
}

Criterion coefficients() {
  Criterion c(2, "coefficient recovery over the enumerated graphs, anchors 0, -1/960, -7/240, 7/10");
  for (int n : {2, 3}) {
    g2::Workbench w(n);
    g2::CoefficientSolution sol = g2::solve_coefficients(w, 40, kSeed);
    c.part(sol.unique, "n = " + std::to_string(n) + ": unique solution from " + std::to_string(sol.samples) + " exact samples");
    c.part(sol.multiset_ok, "n = " + std::to_string(n) + ": solved values equal the sixteen constants");
    c.part(sol.anchors_ok, "n = " + std::to_string(n) + ": anchors");
    if (sol.unique) {
      auto m = sol.by_name();
      std::string s;
      for (const char* q : {"Q1", "Q2", "Q15", "Q16"}) s += std::string(q) + " = " + m[q].get_str() + "  ";
      c.note(s);
    }
  }
  g2::Workbench w1(1);
  c.note("n = 1 is rank deficient: unique = " + std::string(g2::solve_coefficients(w1, 40, kSeed).unique ? "true" : "false"));
  return c;
}

Criterion enumeration() {
  Criterion c(3, "graph enumeration: sixteen canonical graphs");
  auto gs = graphs::enumerate_admissible();
  c.part(gs.size() == 16, std::to_string(gs.size()) + " admissible graphs (vertex genus 0 or 1)");
  std::set<std::string> names;
  for (const auto& g : gs) names.insert(graphs::catalog_name(g));
  names.erase("");
  c.part(names.size() == 16, std::to_string(names.size()) + " distinct catalog names among them");
  CliResult r = cli({"enumerate-graphs", "--emit", "json"});
  c.part(r.exit == 0 && nlohmann::json::parse(r.text)["count"] == 16, "enumerate-graphs --emit json reports 16");
  return c;
}

Criterion derivatives() {
  Criterion c(4, "the seven d_x graph identities, 10 exact points, n = 2, 3");
  for (const auto& id : g2::derivative_identities()) c.part(g2::derivative_identity_structural(id), "structural: " + id.str());
  for (int n : {2, 3}) {
    g2::Workbench w(n);
    VerificationReport r = g2::check_derivative_identities(w, 10, kSeed);
    int ok = static_cast<int>(std::count_if(r.trials.begin(), r.trials.end(), [](const TrialResult& t) { return t.pass; }));
    c.part(r.verdict, "n = " + std::to_string(n) + ": " + std::to_string(ok) + "/10 points, exact zero");
  }
  return c;
}

Criterion odiff() {
  Criterion c(5, "O1 - O2 closed form equals the graph evaluation; family constants");
  for (int n : {2, 3}) run_part(c, base({"compute-odiff", "--family", "free", "--n", std::to_string(n)}, 5));
  for (int n = 1; n <= 6; ++n) run_part(c, base({"compute-odiff", "--family", "an", "--n", std::to_string(n)}, 3));
  for (int n = 3; n <= 6; ++n) run_part(c, base({"compute-odiff", "--family", "dn", "--n", std::to_string(n)}, 3));
  for (const char* e : {"e6", "e8"}) run_part(c, base({"compute-odiff", "--family", e}, 3));
  for (int p = 1; p <= 7; ++p)
    for (int q = p; p + q <= 8; ++q) run_part(c, base({"compute-odiff", "--family", "apq", "--p", std::to_string(p), "--q", std::to_string(q)}, 2));
  for (int r = 1; r <= 4; ++r) run_part(c, base({"compute-odiff", "--family", "dr", "--r", std::to_string(r)}, 2));
  return c;
}

Criterion g2_zero() {
  Criterion c(6, "G2 = 0 on A_n (n <= 5), D4, D5, E6, E8, 3 points each");
  for (int n = 1; n <= 5; ++n) run_part(c, base({"verify-g2", "--family", "an", "--n", std::to_string(n)}, 3));
  for (int n : {4, 5}) run_part(c, base({"verify-g2", "--family", "dn", "--n", std::to_string(n)}, 3));
  for (const char* e : {"e6", "e8"}) run_part(c, base({"verify-g2", "--family", e}, 3));
  return c;
}

Criterion relation() {
  Criterion c(7, "sixteen-term relation: zero on family points, equal to d_x^2 (O1 - O2) everywhere");
  for (int n : {2, 3}) run_part(c, base({"verify-relation", "--family", "free", "--n", std::to_string(n)}, 3));
  for (int n = 1; n <= 4; ++n) run_part(c, base({"verify-relation", "--family", "an", "--n", std::to_string(n)}, 2));
  for (int n : {4, 5}) run_part(c, base({"verify-relation", "--family", "dn", "--n", std::to_string(n)}, 2));
  for (const char* e : {"e6", "e7", "e8"}) run_part(c, base({"verify-relation", "--family", e}, 2));
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}})
    run_part(c, base({"verify-relation", "--family", "apq", "--p", std::to_string(p), "--q", std::to_string(q)}, 2));
  for (int r = 1; r <= 3; ++r) run_part(c, base({"verify-relation", "--family", "dr", "--r", std::to_string(r)}, 2));
  for (const char* mu : {"1/2", "1/3", "1/4", "1/5", "1/6", "-1/6", "2/7", "-3"})
    run_part(c, base({"verify-relation", "--family", "2d", "--mu", mu}, 2));
  return c;
}

Criterion gfunction() {
  Criterion c(8, "G-function gradients: 0 on ADE, eta/24 on orbifold A, the r-scaled form on orbifold D");
  for (int n = 1; n <= 5; ++n) run_part(c, base({"verify-gfunction", "--family", "an", "--n", std::to_string(n)}, 3));
  for (int n = 4; n <= 6; ++n) run_part(c, base({"verify-gfunction", "--family", "dn", "--n", std::to_string(n)}, 3));
  for (const char* e : {"e6", "e7", "e8"}) run_part(c, base({"verify-gfunction", "--family", e}, 3));
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 4}, {2, 3}, {3, 4}})
    run_part(c, base({"verify-gfunction", "--family", "apq", "--p", std::to_string(p), "--q", std::to_string(q)}, 3));
  for (int r = 1; r <= 4; ++r) run_part(c, base({"verify-gfunction", "--family", "dr", "--r", std::to_string(r)}, 3));
  return c;
}

Criterion residues() {
  Criterion c(9, "residue identities, 5 parameter draws each");
  for (int n = 1; n <= 6; ++n) run_part(c, base({"verify-residues", "--family", "an", "--n", std::to_string(n)}, 5));
  for (int n = 3; n <= 6; ++n) run_part(c, base({"verify-residues", "--family", "dn", "--n", std::to_string(n)}, 5));
  for (const char* e : {"e6", "e8"}) run_part(c, base({"verify-residues", "--family", e}, 5));
  c.note("D_n chain checked with coefficient 1/3 on x lambda''''/lambda''; the variant with coefficient 3 is reported per draw as a diagnostic");
  return c;
}

Criterion two_dim() {
  Criterion c(10, "two-dimensional criterion and the small-rank graph formulas");
  for (const char* mu : {"1/2", "1/3", "1/6"}) run_part(c, base({"verify-g2", "--family", "2d", "--mu", mu, "--expect", "zero"}, 3));
  for (const char* mu : {"1/4", "1/5"}) run_part(c, base({"verify-g2", "--family", "2d", "--mu", mu, "--expect", "nonzero"}, 3));
  // the values at which G2 does vanish on this branch, for reference
  for (const char* mu : {"-1/2", "-1/6"}) {
    CliResult r = cli(base({"verify-g2", "--family", "2d", "--mu", mu, "--expect", "zero"}, 3));
    c.note(std::string("reference: G2 = 0 at mu = ") + mu + ": " + (r.exit == 0 ? "yes" : "no"));
  }
  {
    g2::Workbench w(2);
    fam::FamilySpec a2 = fam::FamilySpec::an(2);
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
      auto s = std::get<fam::ExactPoint>(fam::sample(a2, trial_seed(kSeed, static_cast<std::uint64_t>(t))));
      ok = ok && g2::check_a2_formula(w, s, t).pass;
    }
    c.part(ok, "A2: f2_reference = four-graph formula at 5 exact points");
  }
  {
    PrecisionScope ps(kPrecision);
    g2::Workbench w(2);
    fam::FamilySpec cp1 = fam::parse_family("apq", 2, 1, 1, 1, Rational(1, 6));
    std::vector<fam::NumericPoint> pts;
    for (int t = 0; t < 5; ++t) pts.push_back(std::get<fam::NumericPoint>(fam::sample(cp1, trial_seed(kSeed, static_cast<std::uint64_t>(t)))));
    g2::AffineSearch s = g2::affine_a1_search(w, pts, 5);
    c.part(!s.matches.empty(), "affine A1: seven-graph formula, W1..W3 searched over " + std::to_string(s.candidates) +
                                   " degree-two graphs (<= 5 vertices) at 5 points: " + std::to_string(s.matches.size()) + " matching triples");
  }
  return c;
}

Criterion kernel() {
  Criterion c(11, "kernel property suite");
  std::vector<props::Outcome> all{props::residue_global_sum(kSeed),  props::root_reconstruction(kSeed),
                                  props::mixed_partials(2, kSeed),   props::mixed_partials(3, kSeed),
                                  props::correlator_symmetry(2, kSeed), props::correlator_symmetry(3, kSeed),
                                  props::jet_degree_two(2, kSeed),   props::jet_degree_two(3, kSeed)};
  for (const auto& o : all) c.part(o.pass, o.str());
  return c;
}

}  // namespace

int main() {
  PrecisionScope ps(kPrecision);
  std::printf("acceptance: seed %llu, precision %ld bits, numeric tolerance 2^-%ld relative to the largest term, workers %d\n",
              static_cast<unsigned long long>(kSeed), kPrecision, kToleranceBits, worker_count());
  std::vector<std::function<Criterion()>> runs{decomposition, coefficients, enumeration, derivatives, odiff, g2_zero,
                                               relation,      gfunction,    residues,    two_dim,     kernel};
  int passed = 0;
  std::vector<std::string> lines;
  for (const auto& run : runs) {
    Stopwatch sw;
    Criterion c = run();
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", sw.seconds());
    std::string line = std::string(c.pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.id) + ": " + c.title + "  (" + buf + ")";
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    lines.push_back(line);
    passed += c.pass;
  }
  std::printf("\nsummary\n");
  for (const auto& l : lines) std::printf("%s\n", l.c_str());
  std::printf("%d/%zu criteria pass\n", passed, runs.size());
  return passed == static_cast<int>(runs.size()) ? 0 : 1;
}
