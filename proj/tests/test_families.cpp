#include <gtest/gtest.h>

#include "frob/genus2/verify.hpp"

using namespace frob;
using namespace frob::fam;

TEST(Samplers, DeterministicPerSeed) {
  for (const auto& spec : {FamilySpec::an(3), FamilySpec::dn(4), FamilySpec::two_dim(Rational(1, 3)), FamilySpec::apq(1, 2),
                           FamilySpec::dr(1), FamilySpec::e6()}) {
    auto a = sample(spec, 42), b = sample(spec, 42), c = sample(spec, 43);
    auto dump = [](const AnyPoint& p) { return std::visit([](const auto& s) { return to_json(s).dump(); }, p); };
    EXPECT_EQ(dump(a), dump(b)) << spec.name();
    EXPECT_NE(dump(a), dump(c)) << spec.name();
  }
}

TEST(Samplers, ExactLameCoefficients) {
  // includes n = 4 and 8, where the radicands are dependent modulo squares
  for (int n : {2, 3, 4, 5, 8}) {
    ExactPoint s = sample_an(n, 7);
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE((s.h[i] * s.h[i] - s.eta[i]).is_zero()) << "A" << n << " i = " << i;
      for (int j = 0; j < n; ++j) EXPECT_TRUE((s.gamma[i][j] - s.gamma[j][i]).is_zero());
    }
  }
}

TEST(Samplers, ParameterValidation) {
  EXPECT_THROW(FamilySpec::dn(2), std::invalid_argument);
  EXPECT_THROW(FamilySpec::two_dim(Rational(0)), std::invalid_argument);
  EXPECT_THROW(parse_family("zz", 2, 1, 1, 1, Rational(1)), std::invalid_argument);
}

TEST(Samplers, AdditiveConstantCancels) {
  // shifting every u_i by the same constant (the additive constant of the
  // superpotential) leaves G2, the relation and O1 - O2 unchanged
  g2::Workbench w(3);
  ExactPoint s = sample_an(3, 5);
  ExactPoint t = s;
  for (auto& u : t.u) u += RadicalNumber(Rational(17, 3));
  g2::PointEval<RadicalNumber> a(w.store(), s), b(w.store(), t);
  for (auto e : {w.g2_function(), w.relation_lhs(), w.o_difference_closed(), w.f2_reference()})
    EXPECT_TRUE((a(e).first - b(e).first).is_zero());
}

TEST(Samplers, AnZ0Invariance) {
  g2::Workbench w(2);
  std::vector<Rational> z{Rational(1, 3), Rational(-1, 3)};
  for (const Rational& z0 : {Rational(0), Rational(5, 2)}) {
    Poly<Rational> lam = an_lambda(z, z0);
    EXPECT_EQ(lam.derivative()(z[0]), Rational(0));
    EXPECT_EQ(an_lambda(z, z0)(z[1]) - an_lambda(z, 0)(z[1]), z0);
  }
}

TEST(Checks, ClosedForms) {
  EXPECT_EQ(*closed_form_o_difference(FamilySpec::apq(2, 2)), Rational(2));
  EXPECT_EQ(*closed_form_o_difference(FamilySpec::apq(1, 3)), Rational(4));
  EXPECT_EQ(*closed_form_o_difference(FamilySpec::dr(1)), Rational(2));
  EXPECT_EQ(*closed_form_o_difference(FamilySpec::dr(4)), Rational(12));
  EXPECT_EQ(*closed_form_o_difference(FamilySpec::an(4)), Rational(0));
  EXPECT_FALSE(closed_form_o_difference(FamilySpec::two_dim(Rational(1, 2))).has_value());
}

TEST(Checks, G2VanishesOnA3Exactly) {
  g2::Workbench w(3);
  EXPECT_TRUE(g2::check_g2(w, sample_an(3, 1)).pass);
}

TEST(Checks, G2VanishesOnE6Numerically) {
  PrecisionScope ps(256);
  g2::Workbench w(6);
  NumericPoint s = std::get<NumericPoint>(sample(FamilySpec::e6(), 3));
  EXPECT_TRUE(g2::check_g2(w, s).pass);
}

TEST(Checks, TwoDimensional) {
  g2::Workbench w(2);
  EXPECT_TRUE(g2::check_g2(w, sample_two_dim(Rational(-1, 6), 2)).pass);
  EXPECT_FALSE(g2::check_g2(w, sample_two_dim(Rational(1, 4), 2)).pass);
  EXPECT_TRUE(g2::check_relation(w, sample_two_dim(Rational(1, 4), 2)).pass);
}

TEST(Checks, ResidueSuites) {
  PrecisionScope ps(256);
  for (const auto& spec : {FamilySpec::an(4), FamilySpec::dn(5), FamilySpec::e6(), FamilySpec::e8()}) {
    TrialResult t = residue_identity_suite(spec, 12);
    EXPECT_TRUE(t.pass) << spec.name() << " " << t.detail.dump();
  }
  TrialResult d = residue_identity_suite(FamilySpec::dn(4), 12);
  EXPECT_FALSE(d.detail["diagnostics"]["coefficient_3_variant_matches"].get<bool>());
}

TEST(Checks, GFunctionGradients) {
  PrecisionScope ps(256);
  for (const auto& spec : {FamilySpec::an(3), FamilySpec::apq(1, 2), FamilySpec::dr(2)}) {
    g2::Workbench w(spec.dimension());
    AnyPoint p = sample(spec, 4);
    TrialResult t = std::visit([&](const auto& s) { return gfunction_gradient_check(s, w.store(), w.g_gradients()); }, p);
    EXPECT_TRUE(t.pass) << spec.name();
  }
}
