#include <gtest/gtest.h>

#include "frob/exact/linear.hpp"
#include "frob/exact/radical.hpp"
#include "frob/exact/random.hpp"
#include "frob/exact/residue.hpp"
#include "frob/exact/resultant.hpp"
#include "frob/exact/roots.hpp"
#include "frob/exact/scalar.hpp"
#include "frob/families/samplers.hpp"

using namespace frob;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, SquareRoots) {
  EXPECT_TRUE(is_rational_square(Rational(9, 4)));
  EXPECT_FALSE(is_rational_square(Rational(-9, 4)));
  EXPECT_FALSE(is_rational_square(Rational(2)));
  EXPECT_EQ(rational_sqrt(Rational(49, 16)), Rational(7, 4));
  EXPECT_THROW(rational_sqrt(Rational(3)), std::domain_error);
}

TEST(Radical, FieldArithmetic) {
  auto f = std::make_shared<const RadicalField>(std::vector<Rational>{2, 3});
  ASSERT_TRUE(f->independent());
  RadicalNumber r2 = RadicalNumber::root(f, 0), r3 = RadicalNumber::root(f, 1);
  EXPECT_TRUE((r2 * r2 - RadicalNumber(2)).is_zero());
  RadicalNumber s = r2 + r3;
  RadicalNumber sq = s * s;
  EXPECT_EQ(sq.rational_part(), Rational(5));
  EXPECT_TRUE((sq - RadicalNumber(5) - RadicalNumber(2) * r2 * r3).is_zero());
  EXPECT_TRUE((s * s.inverse() - RadicalNumber(1)).is_zero());
  Complex z = ScalarTraits<RadicalNumber>::to_complex(s.inverse());
  Complex want = Complex(1) / (sqrt(Complex(2)) + sqrt(Complex(3)));
  EXPECT_TRUE(negligible(Complex(z - want), 0, 200));
}

TEST(Radical, DependentFieldDetected) {
  RadicalField f({Rational(2), Rational(3), Rational(6)});
  EXPECT_FALSE(f.independent());
  EXPECT_THROW(RadicalField({Rational(0)}), std::invalid_argument);
}

TEST(Radical, ReduceToIndependentBasis) {
  std::vector<Rational> a{2, 3, 24, Rational(9, 4), -6};
  auto rb = fam::detail::reduce_radicands(a);
  EXPECT_EQ(rb.basis.size(), 3u);  // 2, 3, -6 up to squares: -1 is new
  auto field = std::make_shared<const RadicalField>(rb.basis);
  EXPECT_TRUE(field->independent());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& [m, q] = rb.roots[i];
    RadicalNumber r = RadicalNumber::monomial(field, m, q);
    EXPECT_TRUE((r * r - RadicalNumber(a[i])).is_zero()) << "radicand " << a[i];
  }
}

TEST(Poly, DivmodDerivativeGcd) {
  Poly<Rational> p = Poly<Rational>::from_roots({1, 2, 3});
  Poly<Rational> q = Poly<Rational>::from_roots({2, 5});
  auto [d, r] = Poly<Rational>::divmod(p, q);
  EXPECT_TRUE((d * q + r - p).is_zero());
  EXPECT_LT(r.degree(), q.degree());
  Poly<Rational> g = Poly<Rational>::gcd(p, q);
  EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(g(Rational(2)), Rational(0));
  EXPECT_EQ(p.derivative()(Rational(0)), Rational(11));
  EXPECT_EQ(p.shifted(Rational(1))(Rational(0)), Rational(0));
}

TEST(Resultant, ProductOverRoots) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> a{rng.rational(9), rng.rational(9) + 20}, b{rng.rational(9), rng.rational(9), rng.rational(9)};
    Rational la = rng.nonzero_rational(5), lb = rng.nonzero_rational(5);
    Poly<Rational> p = la * Poly<Rational>::from_roots(a), q = lb * Poly<Rational>::from_roots(b);
    Rational want = rational_pow(la, 3) * rational_pow(lb, 2);
    for (const auto& x : a)
      for (const auto& y : b) want *= x - y;
    EXPECT_EQ(resultant(p, q), want);
    EXPECT_EQ(determinant(sylvester_matrix(p, q)), want);
  }
}

TEST(Linear, SolveExactSystem) {
  Rng rng(5);
  Matrix<Rational> a(4, std::vector<Rational>(4));
  std::vector<Rational> x(4), b(4);
  for (auto& row : a)
    for (auto& v : row) v = rng.rational(20);
  for (auto& v : x) v = rng.rational(20);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b[i] += a[i][j] * x[j];
  EXPECT_EQ(solve_linear(a, b), x);
}

TEST(Residue, KnownValues) {
  // 1 / (z^2 (z - 1)): residues -1 at 0, 1 at 1, 0 at infinity
  RationalFunction<Rational> f(Poly<Rational>::constant(1), Poly<Rational>::from_roots({0, 0, 1}));
  EXPECT_EQ(pole_order(f, Rational(0)), 2);
  EXPECT_EQ(residue(f, Rational(0)), Rational(-1));
  EXPECT_EQ(residue(f, Rational(1)), Rational(1));
  EXPECT_EQ(residue(f, Rational(2)), Rational(0));
  EXPECT_EQ(residue_at_infinity(f), Rational(0));
  // z^2 / (z - 1): residue at infinity is minus the 1/z coefficient, -1
  RationalFunction<Rational> g(Poly<Rational>::monomial(1, 2), Poly<Rational>::from_roots({1}));
  EXPECT_EQ(residue_at_infinity(g), Rational(-1));
}

TEST(Roots, ComplexPair) {
  PrecisionScope ps(256);
  Poly<Complex> p(std::vector<Complex>{Complex(1), Complex(0), Complex(1)});
  auto r = poly_roots(p);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& z : r) EXPECT_TRUE(negligible(Complex(z * z + Complex(1)), 0, 200));
  EXPECT_TRUE(negligible(Complex(r[0] + r[1]), 0, 200));
}

TEST(Roots, ZeroRootsAndResidual) {
  PrecisionScope ps(256);
  Poly<Complex> p(std::vector<Complex>{Complex(0), Complex(0), Complex(-2), Complex(1)});
  auto r = poly_roots(p);
  ASSERT_EQ(r.size(), 3u);
  int zeros = 0;
  for (const auto& z : r) zeros += ScalarTraits<Complex>::is_zero(z) || negligible(z, 0, 200);
  EXPECT_EQ(zeros, 2);
  EXPECT_TRUE(negligible(Complex(frob::detail::root_residual(p, r)), 0, 200));
}
