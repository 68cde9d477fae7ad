#include <gtest/gtest.h>

#include "frob/genus2/verify.hpp"

using namespace frob;
using jet::Expr;

namespace {

Rational at(g2::Workbench& w, Expr e, std::uint64_t seed) {
  auto pt = g2::random_free_point<Rational>(w.n(), seed);
  return g2::PointEval<Rational>(w.store(), pt)(e).first;
}

}  // namespace

TEST(Correlators, GenusZeroThreePoint) {
  g2::Workbench w(3);
  auto& s = w.store();
  auto& t = w.table();
  EXPECT_EQ(t.correlator_C({1, 1, 1}), pow(s.h(1), 2) * s.ux(1));
  EXPECT_TRUE(t.correlator_C({0, 1, 1}).is_zero());
  EXPECT_TRUE(t.correlator_C({0, 1, 2}).is_zero());
  EXPECT_EQ(t.correlator_C({2, 0, 1, 0}), t.correlator_C({0, 0, 1, 2}));
}

TEST(Correlators, Bounds) {
  g2::Workbench w(2);
  auto& t = w.table();
  EXPECT_THROW(t.correlator_C({0, 0}), std::out_of_range);
  EXPECT_THROW(t.correlator_C({0, 0, 0, 0, 0, 0, 0}), std::out_of_range);
  EXPECT_THROW(t.correlator_D({}), std::out_of_range);
  EXPECT_THROW(t.correlator_D({0, 5}), std::out_of_range);
  EXPECT_THROW(t.correlator_step({0, 0}, 1, true), std::out_of_range);
}

TEST(Correlators, StepMatchesEveryOrdering) {
  g2::Workbench w(3);
  auto& t = w.table();
  Expr ref = t.correlator_C({0, 1, 1, 2});
  for (std::uint64_t seed : {1, 2}) {
    Rational v = at(w, ref, seed);
    EXPECT_EQ(at(w, t.correlator_step({1, 1, 2}, 0, true), seed), v);
    EXPECT_EQ(at(w, t.correlator_step({0, 1, 2}, 1, true), seed), v);
    EXPECT_EQ(at(w, t.correlator_step({0, 1, 1}, 2, true), seed), v);
  }
  Expr d = t.correlator_D({0, 2});
  EXPECT_EQ(at(w, t.correlator_step({2}, 0, false), 3), at(w, d, 3));
  EXPECT_EQ(at(w, t.correlator_step({0}, 2, false), 3), at(w, d, 3));
}

TEST(Correlators, GFunctionGradientTwoForms) {
  g2::Workbench w(3);
  auto& t = w.table();
  for (int i = 0; i < 3; ++i)
    for (std::uint64_t seed : {4, 5}) EXPECT_EQ(at(w, t.g_gradient(i), seed), at(w, t.g_gradient_christoffel_form(i), seed));
}

TEST(Correlators, GenusOneOnePointIsNotZero) {
  g2::Workbench w(2);
  EXPECT_NE(at(w, w.table().correlator_D({0}), 9), Rational(0));
}
