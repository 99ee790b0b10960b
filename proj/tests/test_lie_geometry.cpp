#include <gtest/gtest.h>

#include "homstruct/lie.hpp"
#include "homstruct/reference_forms.hpp"
#include "homstruct/structure.hpp"

using namespace homstruct;

namespace {
const auto kAlg = StructureConstants::su11();

std::vector<DiagonalMetric> metrics_for(MetricCase c, int n = 16, std::uint64_t seed = 5) {
  std::vector<DiagonalMetric> out;
  for (const auto& p : sample_params(c, seed, n)) out.emplace_back(p);
  return out;
}
}  // namespace

TEST(StructureConstants, Su11Table) {
  EXPECT_EQ(kAlg.c(0, 1, 2), Rational(2));
  EXPECT_EQ(kAlg.c(1, 2, 0), Rational(-2));
  EXPECT_EQ(kAlg.c(2, 0, 1), Rational(2));
  EXPECT_TRUE(kAlg.antisymmetric());
  EXPECT_TRUE(kAlg.jacobi());
}

TEST(StructureConstants, CorruptedTableFailsJacobi) {
  auto bad = kAlg;
  bad.c(1, 2, 0) = 2;
  bad.c(2, 1, 0) = -2;
  bad.c(0, 1, 2) = 2;
  bad.c(0, 1, 1) = 1;
  bad.c(1, 0, 1) = -1;
  EXPECT_TRUE(bad.antisymmetric());
  EXPECT_FALSE(bad.jacobi());
}

TEST(Koszul, UnitAdsExample) {
  auto c = koszul_connection(kAlg, DiagonalMetric(rat(-1), rat(1), rat(1)));
  EXPECT_EQ(c.gamma(0, 1, 2), rat(1));
  EXPECT_EQ(c.gamma(1, 0, 2), rat(-1));
  EXPECT_EQ(c.gamma(0, 1, 2) - c.gamma(1, 0, 2), kAlg.c(0, 1, 2));
}

TEST(Koszul, X0X0VanishesAndSampleValue) {
  for (auto c : all_cases())
    for (const auto& g : metrics_for(c, 4))
      for (int k = 0; k < 3; ++k) EXPECT_TRUE(is_zero(koszul_connection(kAlg, g).gamma(0, 0, k)));
  auto c = koszul_connection(kAlg, DiagonalMetric(rat(1), rat(2), rat(4)));
  EXPECT_EQ(c.gamma(2, 1, 0), rat(3));
}

TEST(Koszul, RejectsDegenerateMetric) {
  EXPECT_THROW(DiagonalMetric(rat(0), rat(1), rat(1)), std::invalid_argument);
}

TEST(Koszul, TorsionFreeMetricAndClosedForm) {
  for (auto c : all_cases())
    for (const auto& g : metrics_for(c)) {
      auto conn = koszul_connection(kAlg, g);
      EXPECT_TRUE(torsion(conn, kAlg).is_zero_tensor());
      EXPECT_TRUE(covariant_derivative(conn, g.tensor(), Layout::Covariant).is_zero_tensor());
      EXPECT_EQ(conn.gamma, reference::levi_civita_gamma(g));
    }
}

TEST(Curvature, ConstantCurvatureOracle) {
  DiagonalMetric g(rat(-1), rat(1), rat(1));
  auto r = curvature(koszul_connection(kAlg, g), kAlg);
  // R(X,Y)Z = -(g(Y,Z)X - g(X,Z)Y)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Rational expect(0);
          if (l == i && j == k) expect -= g.g(j);
          if (l == j && i == k) expect += g.g(i);
          EXPECT_EQ(r(i, j, k, l), expect) << i << j << k << l;
        }
  EXPECT_EQ(r(0, 1, 1, 0), rat(-1));
}

TEST(Curvature, FlatConnection) {
  Connection<Rational> flat;
  EXPECT_TRUE(curvature(flat, StructureConstants::abelian()).is_zero_tensor());
}

TEST(Curvature, SampleValue124) {
  DiagonalMetric g(rat(1), rat(2), rat(4));
  auto r = curvature(koszul_connection(kAlg, g), kAlg);
  Rational l(1), m(2), n(4);
  Rational expect = l / n + 2 * m / n - 2 + m * m / (l * n) + 2 * m / l - 3 * n / l;
  EXPECT_EQ(r(0, 1, 1, 0), expect);
}

TEST(Curvature, ClosedFormAndSymmetries) {
  for (auto c : all_cases())
    for (const auto& g : metrics_for(c)) {
      auto r = curvature(koszul_connection(kAlg, g), kAlg);
      EXPECT_EQ(r, reference::levi_civita_curvature(g)) << case_name(c);
      auto r4 = lower_curvature(r, g);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              EXPECT_EQ(r(i, j, k, l), -r(j, i, k, l));
              EXPECT_EQ(r4(i, j, k, l), r4(k, l, i, j));
              EXPECT_EQ(r4(i, j, k, l), -r4(i, j, l, k));
              EXPECT_TRUE(is_zero(Rational(r4(i, j, k, l) + r4(j, k, i, l) + r4(k, i, j, l))));
            }
    }
}

TEST(CovariantDerivative, MetricityOfCanonicalConnections) {
  RationalSampler rs(17);
  for (const auto& g : metrics_for(MetricCase::Generic, 8)) {
    HomogeneousStructure s;
    for (auto& x : s.coeffs) x = rs.any();
    auto conn = canonical_connection(g, s);
    EXPECT_TRUE(covariant_derivative(conn, g.tensor(), Layout::Covariant).is_zero_tensor());
  }
}

TEST(CovariantDerivative, LocallySymmetricAds) {
  DiagonalMetric g(rat(-1), rat(1), rat(1));
  auto conn = koszul_connection(kAlg, g);
  auto r = curvature(conn, kAlg);
  EXPECT_TRUE(covariant_derivative(conn, r, Layout::UpperLast).is_zero_tensor());
  // A generic metric is not locally symmetric.
  DiagonalMetric h(rat(1), rat(2), rat(4));
  auto ch = koszul_connection(kAlg, h);
  EXPECT_FALSE(covariant_derivative(ch, curvature(ch, kAlg), Layout::UpperLast).is_zero_tensor());
}

TEST(CovariantDerivative, RejectsRankFive) {
  Tensor<Rational> t(5);
  EXPECT_THROW(covariant_derivative(Connection<Rational>{}, t, Layout::Covariant), std::invalid_argument);
}

TEST(KaluzaKlein, Examples) {
  auto p = kk_correspondence(rat(1), rat(1), rat(1), rat(4));
  EXPECT_EQ(p.a, rat(1));
  EXPECT_EQ(p.b, rat(0));
  EXPECT_EQ(p.c, rat(0));
  EXPECT_EQ(p.d, rat(0));
  EXPECT_TRUE(p.riemannian);
  auto q = kk_correspondence(rat(-1), rat(1), rat(1), rat(4));
  EXPECT_EQ(q.a, rat(-1));
  EXPECT_EQ(q.c, rat(2));
  EXPECT_EQ(q.d, rat(0));
  EXPECT_TRUE(q.nondegenerate);
  EXPECT_FALSE(q.riemannian);
  for (const auto& g : metrics_for(MetricCase::Generic, 8))
    EXPECT_FALSE(is_zero(kk_correspondence(g.lambda, g.mu, g.nu, rat(4)).d));
  for (const auto& g : metrics_for(MetricCase::Timelike, 8))
    EXPECT_TRUE(is_zero(kk_correspondence(g.lambda, g.mu, g.nu, rat(4)).d));
}

// The wedge normalization th^a^th^b(Y,Z) = th^a(Y)th^b(Z) - th^b(Y)th^a(Z)
// is the one for which nabla - S_lambda(t) has the closed-form connection.
TEST(WedgeConvention, SlambdaCanonicalConnectionForm) {
  RationalSampler rs(23);
  for (const auto& g : metrics_for(MetricCase::Timelike, 8)) {
    Rational t = rs.any();
    auto conn = canonical_connection(g, catalog_family(Family::Slambda, g, t));
    EXPECT_EQ(conn.gamma, reference::slambda_gamma(g, t));
    // With a 1/2 in the wedge the connection would differ.
    auto half = catalog_family(Family::Slambda, g, t);
    for (auto& x : half.coeffs) x /= 2;
    EXPECT_NE(canonical_connection(g, half).gamma, reference::slambda_gamma(g, t));
  }
}
