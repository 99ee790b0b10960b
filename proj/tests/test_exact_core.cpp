#include <gtest/gtest.h>

#include "homstruct/field.hpp"
#include "homstruct/linalg.hpp"
#include "homstruct/poly.hpp"
#include "homstruct/sampling.hpp"

using namespace homstruct;

TEST(Rational, CanonicalAfterArithmetic) {
  Rational a = rat(1, 6) + rat(1, 3);
  EXPECT_EQ(a, rat(1, 2));
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_EQ(to_string(rat(4, 2)), "2/1");
  EXPECT_EQ(to_string(rat(-3, 9)), "-1/3");
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(*parse_rational("-2/1"), rat(-2));
  EXPECT_EQ(*parse_rational("+6/4"), rat(3, 2));
  EXPECT_EQ(*parse_rational("7"), rat(7));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational("1/"));
  EXPECT_FALSE(parse_rational(""));
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(*exact_sqrt(rat(9, 4)), rat(3, 2));
  EXPECT_FALSE(exact_sqrt(rat(2)));
  EXPECT_FALSE(exact_sqrt(rat(-4)));
}

TEST(QuadExt, ArithmeticInQSqrt2) {
  Quad1 r2 = Quad1::root(Rational(2));
  EXPECT_EQ(r2 * r2, Quad1(Rational(2)));
  Quad1 x = Quad1(Rational(1)) + r2;  // 1 + sqrt2
  Quad1 y = x.inverse();               // sqrt2 - 1
  EXPECT_EQ(x * y, Quad1(Rational(1)));
  EXPECT_EQ(y, r2 - Quad1(Rational(1)));
}

TEST(QuadExt, NestedTower) {
  Quad1 r2 = Quad1::root(Rational(2));
  Quad2 r3 = Quad2::root(Quad1(Rational(3)));
  Quad2 s = Quad2(r2) * r3;  // sqrt6
  EXPECT_EQ(s * s, Quad2(Rational(6)));
  // Without the radicands attached, 6 has no square root in the field.
  EXPECT_FALSE(try_sqrt(Quad2(Rational(6))));
  auto back = try_sqrt(s * s);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back * *back, Quad2(Rational(6)));
}

TEST(QuadExt, TrySqrtFindsMultiplesOfRadicand) {
  Quad1 r5 = Quad1::root(Rational(5));
  Quad1 five4(Rational(5, 4));
  five4 = five4 + r5 - r5;  // same value, radicand attached
  auto r = try_sqrt(five4);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, Quad1(Rational(5, 4)));
  EXPECT_FALSE(try_sqrt(Quad1(Rational(3)) + r5 - r5));
}

TEST(Linalg, IdentitySystemHasPointSolution) {
  auto a = identity_matrix<Rational>(9);
  auto s = rref_solve(a, Vec<Rational>(9, Rational(0)));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->dim(), 0u);
  EXPECT_TRUE(is_zero_vec(s->base));
}

TEST(Linalg, VacuousSystemIsEverything) {
  auto a = zero_matrix<Rational>(1, 9);
  auto s = rref_solve(a, Vec<Rational>(1, Rational(0)));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->dim(), 9u);
  EXPECT_TRUE(is_zero_vec(s->base));
}

TEST(Linalg, InconsistentSystemIsInfeasible) {
  Mat<Rational> a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  EXPECT_FALSE(rref_solve(a, Vec<Rational>{Rational(1), Rational(3)}));
}

TEST(Linalg, SolutionPointsSatisfySystem) {
  RationalSampler rs(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = zero_matrix<Rational>(5, 9);
    for (auto& row : a)
      for (auto& x : row) x = rs.integer(-2, 2) == 0 ? rs.any() : Rational(0);
    Vec<Rational> x0(9);
    for (auto& x : x0) x = rs.any();
    auto b = matvec(a, x0);
    auto s = rref_solve(a, b);
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->contains(x0));
    EXPECT_EQ(s->dim(), 9 - rank(a));
    EXPECT_EQ(rank(Mat<Rational>(s->dirs)), s->dim());
    Vec<Rational> c(s->dim());
    for (auto& v : c) v = rs.any();
    EXPECT_EQ(matvec(a, s->point(c)), b);
  }
}

TEST(Linalg, CanonicalFormIgnoresParametrization) {
  AffineSubspace<Rational> a, b;
  a.n = b.n = 3;
  a.base = {Rational(1), Rational(2), Rational(3)};
  a.dirs = {{Rational(1), Rational(1), Rational(0)}};
  b.base = {Rational(3), Rational(4), Rational(3)};
  b.dirs = {{Rational(-2), Rational(-2), Rational(0)}};
  a.canonicalize();
  b.canonicalize();
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(b));
}

TEST(Linalg, InverseAndDeterminant) {
  Mat<Rational> m{{Rational(2), Rational(1)}, {Rational(5), Rational(3)}};
  EXPECT_EQ(determinant(m), Rational(1));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(matmul(m, *inv), identity_matrix<Rational>(2));
  Mat<Rational> sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(inverse(sing));
}

namespace {
MultiPoly expand_product(const std::vector<MultiPoly>& fs, const Rational& k, const std::vector<std::string>& names) {
  MultiPoly p = MultiPoly::constant(names, k);
  for (const auto& f : fs) p = p * f;
  return p;
}
}  // namespace

TEST(Poly, FactorMonomialProduct) {
  std::vector<std::string> n{"x", "y"};
  auto x = MultiPoly::var(n, 0), y = MultiPoly::var(n, 1);
  auto one = MultiPoly::constant(n, Rational(1));
  auto f = factor_affine(x * y - x);
  ASSERT_TRUE(f);
  ASSERT_EQ(f->factors.size(), 2u);
  EXPECT_EQ(expand_product(f->factors, f->constant, n), x * y - x);
  bool has_x = false, has_y1 = false;
  for (const auto& g : f->factors) {
    has_x |= g == x;
    has_y1 |= g == y - one;
  }
  EXPECT_TRUE(has_x && has_y1);
}

TEST(Poly, FactorExpandedSolverSplit) {
  const auto& n = std::vector<std::string>{"rho2", "tau0", "sigma1"};
  auto r2 = MultiPoly::var(n, 0), t0 = MultiPoly::var(n, 1), s1 = MultiPoly::var(n, 2);
  auto one = MultiPoly::constant(n, Rational(1));
  auto p = (r2 - one) * (t0 + s1);
  auto f = factor_affine(p);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->factors.size(), 2u);
  EXPECT_EQ(expand_product(f->factors, f->constant, n), p);
}

TEST(Poly, SumOfSquaresDoesNotFactor) {
  std::vector<std::string> n{"x", "y"};
  auto x = MultiPoly::var(n, 0), y = MultiPoly::var(n, 1);
  EXPECT_FALSE(factor_affine(x * x + y * y));
}

TEST(Poly, PerfectSquareAndAffine) {
  std::vector<std::string> n{"x", "y"};
  auto x = MultiPoly::var(n, 0), y = MultiPoly::var(n, 1);
  auto one = MultiPoly::constant(n, Rational(1));
  auto sq = (x * Rational(2) - y + one) * (x * Rational(2) - y + one) * Rational(3);
  auto f = factor_affine(sq);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->factors[0], f->factors[1]);
  EXPECT_EQ(expand_product(f->factors, f->constant, n), sq);
  auto lin = x * Rational(3) + one;
  auto g = factor_affine(lin);
  ASSERT_TRUE(g);
  ASSERT_EQ(g->factors.size(), 1u);
  EXPECT_EQ(g->factors[0], lin);
}

TEST(Poly, RandomProductsFactorBack) {
  RationalSampler rs(11);
  std::vector<std::string> n{"a", "b", "c", "d"};
  for (int trial = 0; trial < 40; ++trial) {
    auto rnd_affine = [&]() {
      Vec<Rational> c(4);
      for (auto& v : c) v = rs.integer(0, 2) == 0 ? Rational(0) : rs.any();
      return MultiPoly::affine(n, c, rs.coin() ? rs.any() : Rational(0));
    };
    auto p = rnd_affine() * rnd_affine();
    if (p.degree() < 2) continue;
    auto f = factor_affine(p);
    ASSERT_TRUE(f) << p.to_string();
    EXPECT_EQ(expand_product(f->factors, f->constant, n), p);
  }
}

TEST(Poly, ComposeAndEval) {
  std::vector<std::string> n{"x", "y"};
  auto x = MultiPoly::var(n, 0), y = MultiPoly::var(n, 1);
  auto p = x * y + x * Rational(2);
  std::vector<std::string> m{"u"};
  auto u = MultiPoly::var(m, 0);
  auto q = p.compose({u, u + MultiPoly::constant(m, Rational(1))});
  EXPECT_EQ(q, u * u + u * Rational(3));
  EXPECT_EQ(p.eval({Rational(2), Rational(5)}), Rational(14));
}

TEST(Sampling, SymmetricCaseConstraint) {
  auto ps = sample_params(MetricCase::Symmetric, 1, 5);
  for (const auto& p : ps) {
    EXPECT_EQ(-p.lambda, p.mu);
    EXPECT_EQ(p.mu, p.nu);
    EXPECT_GT(sgn(p.mu), 0);
  }
}

TEST(Sampling, GenericPairwiseDistinct) {
  auto ps = sample_params(MetricCase::Generic, 42, 1);
  ASSERT_EQ(ps.size(), 1u);
  const auto& p = ps[0];
  EXPECT_NE(-p.lambda, p.mu);
  EXPECT_NE(-p.lambda, p.nu);
  EXPECT_NE(p.mu, p.nu);
}

TEST(Sampling, PerfectSquareFlag) {
  auto ps = sample_params(MetricCase::Timelike, 7, 8, {true, LambdaSign::Negative});
  for (const auto& p : ps) {
    EXPECT_TRUE(satisfies_case(p, MetricCase::Timelike));
    EXPECT_TRUE(is_perfect_square(abs(p.lambda)));
    EXPECT_TRUE(is_perfect_square(p.mu));
    EXPECT_LT(sgn(p.lambda), 0);
  }
}

TEST(Sampling, PureFunctionOfInputs) {
  for (auto c : all_cases()) {
    EXPECT_EQ(sample_params(c, 99, 6), sample_params(c, 99, 6));
    for (const auto& p : sample_params(c, 99, 6)) EXPECT_TRUE(satisfies_case(p, c));
  }
  EXPECT_THROW(sample_params(MetricCase::Generic, 1, 0), std::invalid_argument);
}
