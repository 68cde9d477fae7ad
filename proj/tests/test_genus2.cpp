#include <gtest/gtest.h>

#include "frob/genus2/verify.hpp"

using namespace frob;
using jet::Expr;

TEST(Terms, JetDegree) {
  auto deg = [](const std::string& t) { return g2::jet_degree(*g2::TermParser(t).parse()); };
  EXPECT_EQ(deg("u4[i]/(u1[i]^2*h[i]^2)"), 2);
  EXPECT_EQ(deg("V[i,j]*u2[i]*(32*u1[i]-7*u1[k])/(D[i,j]*u1[i])"), 2);
  EXPECT_EQ(deg("u3[i]"), 3);
  EXPECT_EQ(deg("1 + u1[i]"), 1);
  EXPECT_FALSE(deg("u2[i] + u1[i]").has_value());
}

TEST(Terms, ParseErrors) {
  EXPECT_THROW(g2::TermParser("u2[i]*(").parse(), g2::TermSyntaxError);
  EXPECT_THROW(g2::parse_table("1/2 * u1[i]"), g2::TermSyntaxError);
  EXPECT_THROW(g2::parse_table("@section X\n@bogus"), g2::TermSyntaxError);
}

TEST(Terms, TablesParse) {
  auto f2 = g2::parse_table(g2::kF2Table);
  auto g2t = g2::parse_table(g2::kG2Table);
  ASSERT_FALSE(f2.empty());
  ASSERT_FALSE(g2t.empty());
  std::size_t records = 0;
  for (const auto& s : f2) records += s.records.size();
  EXPECT_GT(records, 50u);
}

TEST(Decomposition, ExactAtFreePoints) {
  for (int n : {1, 2}) {
    g2::Workbench w(n);
    VerificationReport r = g2::check_decomposition<Rational>(w, 5, 99);
    EXPECT_TRUE(r.verdict) << "n = " << n;
    EXPECT_EQ(r.tolerance(), "exact zero");
  }
}

TEST(Decomposition, PerturbedConstantFails) {
  g2::Workbench w(2);
  auto c = graphs::q_coefficients();
  c[6] += Rational(1, 100000);
  VerificationReport r = g2::check_decomposition<Rational>(w, 3, 99, c);
  EXPECT_FALSE(r.verdict);
  for (const auto& t : r.trials) EXPECT_FALSE(t.pass);
}

TEST(Decomposition, NumericModeAgrees) {
  PrecisionScope ps(256);
  g2::Workbench w(2);
  VerificationReport r = g2::check_decomposition<Complex>(w, 3, 99);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.tolerance(), "2^-128 relative to largest term");
}

TEST(G2, NotIdenticallyZero) {
  g2::Workbench w(2);
  auto pt = g2::random_free_point<Rational>(2, 3);
  EXPECT_NE(g2::PointEval<Rational>(w.store(), pt)(w.g2_function()).first, Rational(0));
}

TEST(Relation, EqualsSecondDerivativeOfODifference) {
  g2::Workbench w(2);
  for (int t = 0; t < 2; ++t) {
    auto pt = g2::random_free_point<Rational>(2, trial_seed(5, t));
    TrialResult r = g2::check_relation(w, pt, t, false);
    EXPECT_TRUE(r.pass);
    EXPECT_NE(r.detail["relation_value"], "0");
  }
}

TEST(Derivatives, SevenIdentitiesAtPoints) {
  g2::Workbench w(2);
  EXPECT_TRUE(g2::check_derivative_identities(w, 3, 1).verdict);
}

TEST(Coefficients, RecoveredAtTwo) {
  g2::Workbench w(2);
  auto sol = g2::solve_coefficients(w, 32, 8);
  EXPECT_TRUE(sol.unique);
  EXPECT_TRUE(sol.multiset_ok);
  EXPECT_TRUE(sol.anchors_ok);
  auto m = sol.by_name();
  EXPECT_EQ(m["Q11"], Rational(1, 1920));
  EXPECT_EQ(m["Q14"], Rational(1, 48));
}

TEST(Report, JsonLinesAndDigest) {
  VerificationReport r;
  r.command = "x";
  TrialResult t;
  t.pass = true;
  t.residual = "0";
  r.trials.push_back(t);
  r.finish();
  EXPECT_TRUE(r.verdict);
  std::string lines = r.json_lines();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 2);
  EXPECT_EQ(digest("abc"), digest("abc"));
  EXPECT_NE(digest("abc"), digest("abd"));
  EXPECT_EQ(digest("").size(), 16u);
  VerificationReport empty;
  empty.finish();
  EXPECT_FALSE(empty.verdict);
}
