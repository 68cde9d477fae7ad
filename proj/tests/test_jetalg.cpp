#include <gtest/gtest.h>

#include "frob/genus2/verify.hpp"
#include "frob/jetalg/sexpr.hpp"

using namespace frob;
using jet::Expr;
using jet::Store;

namespace {

Rational at(Store& s, Expr e, std::uint64_t seed, int n) {
  auto pt = g2::random_free_point<Rational>(n, seed);
  return g2::PointEval<Rational>(s, pt)(e).first;
}

}  // namespace

TEST(Expr, HashConsing) {
  Store s(2);
  Expr a = s.u(0) * s.h(1) + s.gamma(0, 1);
  Expr b = s.gamma(1, 0) + s.h(1) * s.u(0);
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
  EXPECT_TRUE(s.constant(Rational(3, 2)).is_constant());
}

TEST(Expr, StructuralZeroDivision) {
  Store s(2);
  EXPECT_THROW(s.one() / (s.u(0) - s.u(0)), jet::StructuralZeroDivision);
}

TEST(Expr, TotalDerivativeOfGenerators) {
  Store s(2, 4);
  EXPECT_EQ(s.total_x(s.u(1)), s.jet(1, 1));
  EXPECT_EQ(s.total_x(s.jet(0, 2)), s.jet(0, 3));
  EXPECT_EQ(s.jet_order(s.jet(0, 3) * s.u(1)), 3);
}

TEST(Expr, LeibnizRule) {
  Store s(3, 4);
  Expr f = s.h(0) * s.jet(1, 2) / s.gamma(0, 2);
  Expr g = pow(s.u(0) - s.u(1), 2) + s.jet(2, 1);
  Expr lhs = s.total_x(f * g);
  Expr rhs = s.total_x(f) * g + f * s.total_x(g);
  for (std::uint64_t seed : {1, 2, 3}) EXPECT_EQ(at(s, lhs, seed, 3), at(s, rhs, seed, 3));
}

TEST(Expr, PartialOfUDifference) {
  Store s(2);
  Expr e = pow(s.u(0) - s.u(1), 3);
  Expr d = s.partial_u(e, 1);
  for (std::uint64_t seed : {4, 5}) EXPECT_EQ(at(s, d, seed, 2), at(s, s.scale(pow(s.u(0) - s.u(1), 2), Rational(-3)), seed, 2));
  EXPECT_TRUE(s.partial_jet(e, 0, 1).is_zero());
}

TEST(Sexpr, RoundTrip) {
  g2::Workbench w(2);
  Expr e = w.graph("Q5");
  std::string text = jet::dump_sexpr(w.store(), e);
  Expr back = jet::parse_sexpr(w.store(), text);
  EXPECT_EQ(back, e);
  Store other(2, 4);
  Expr copy = jet::parse_sexpr(other, text);
  for (std::uint64_t seed : {7, 8}) EXPECT_EQ(at(w.store(), e, seed, 2), at(other, copy, seed, 2));
}

TEST(Sexpr, RejectsMalformed) {
  Store s(2);
  EXPECT_ANY_THROW(jet::parse_sexpr(s, "(dag (c 1"));
  EXPECT_ANY_THROW(jet::parse_sexpr(s, "(dag (u 9))"));
}
