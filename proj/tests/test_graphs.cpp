#include <gtest/gtest.h>

#include <set>

#include "frob/genus2/verify.hpp"

using namespace frob;
using namespace frob::graphs;

TEST(Graphs, SixteenAdmissible) {
  auto gs = enumerate_admissible();
  ASSERT_EQ(gs.size(), 16u);
  std::set<std::string> names;
  for (const auto& g : gs) {
    EXPECT_TRUE(is_admissible(g)) << g.str();
    EXPECT_TRUE(is_stable(g)) << g.str();
    EXPECT_EQ(g.arithmetic_genus(), 2) << g.str();
    EXPECT_EQ(g, canonicalize(g));
    names.insert(catalog_name(g));
  }
  auto want = q_names();
  EXPECT_EQ(names, std::set<std::string>(want.begin(), want.end()));
}

TEST(Graphs, Constants) {
  auto c = q_coefficients();
  ASSERT_EQ(c.size(), 16u);
  EXPECT_EQ(c[0], Rational(0));
  EXPECT_EQ(c[1], Rational(-1, 960));
  EXPECT_EQ(c[14], Rational(-7, 240));
  EXPECT_EQ(c[15], Rational(7, 10));
  EXPECT_EQ(c[10], Rational(1, 1920));
  EXPECT_EQ(c[11], Rational(-1, 960));
}

TEST(Graphs, CanonicalUnderRelabeling) {
  for (const auto& name : builtin_names()) {
    DualGraph g = builtin(name);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    DualGraph p = graphs::detail::permuted(g, perm);
    EXPECT_TRUE(isomorphic(g, p)) << name;
    EXPECT_EQ(canonical_labeling(g), canonical_labeling(p)) << name;
  }
  EXPECT_FALSE(isomorphic(builtin("Q11"), builtin("Q12")));
}

TEST(Graphs, JsonAndDot) {
  for (const auto& name : builtin_names()) {
    DualGraph g = builtin(name);
    EXPECT_EQ(from_json(to_json(g)), g) << name;
  }
  std::string dot = to_dot(builtin("Q11"), "Q11");
  EXPECT_NE(dot.find("Q11"), std::string::npos);
  EXPECT_NE(dot.find("graph"), std::string::npos);
}

TEST(Graphs, DerivativeIdentitiesStructural) {
  for (const auto& id : g2::derivative_identities()) EXPECT_TRUE(g2::derivative_identity_structural(id)) << id.str();
}

TEST(Graphs, DegreeTwoSetContainsTheSixteen) {
  auto all = enumerate_degree_two(4);
  EXPECT_EQ(all.size(), 456u);
  std::set<DualGraph> canon;
  for (const auto& g : all) canon.insert(canonicalize(g));
  for (const auto& g : enumerate_admissible()) EXPECT_TRUE(canon.count(g)) << g.str();
}

TEST(Graphs, GraphFunctionsNonzero) {
  g2::Workbench w(2);
  auto pt = g2::random_free_point<Rational>(2, 17);
  g2::PointEval<Rational> pe(w.store(), pt);
  for (const auto& name : q_names()) EXPECT_NE(pe(w.graph(name)).first, Rational(0)) << name;
}
