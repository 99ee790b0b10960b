#include <gtest/gtest.h>

#include "homstruct/as_solver.hpp"
#include "homstruct/reference_forms.hpp"

using namespace homstruct;

namespace {
std::vector<DiagonalMetric> metrics_for(MetricCase c, int n, std::uint64_t seed = 9) {
  std::vector<DiagonalMetric> out;
  for (const auto& p : sample_params(c, seed, n)) out.emplace_back(p);
  return out;
}

Vec<Rational> v9(std::initializer_list<long> xs) {
  Vec<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}
}  // namespace

TEST(LinearStage, TimelikeExample) {
  auto sys = build_as_system(DiagonalMetric(rat(-2), rat(1), rat(1)));
  auto sub = linear_stage(sys);
  EXPECT_EQ(sub.dim(), 3u);
  EXPECT_EQ(sub.base, v9({0, 0, 2, 0, 0, 0, 0, 2, 0}));
  for (const auto& d : sub.dirs)
    for (int i : {kRho0, kRho1, kRho2, kTau0, kTau1, kTau2}) EXPECT_TRUE(is_zero(d[static_cast<std::size_t>(i)]));
}

TEST(LinearStage, GenericPinsS0) {
  auto sys = build_as_system(DiagonalMetric(rat(1), rat(2), rat(4)));
  auto sub = linear_stage(sys);
  EXPECT_EQ(sub.dim(), 0u);
  EXPECT_EQ(sub.base, v9({0, 0, -3, 7, 0, 0, 0, 1, 0}));
}

TEST(LinearStage, SymmetricIsVacuous) {
  auto sys = build_as_system(DiagonalMetric(rat(-1), rat(1), rat(1)));
  EXPECT_TRUE(sys.linear_a.empty() || rank(sys.linear_a) == 0);
  EXPECT_EQ(linear_stage(sys).dim(), 9u);
}

TEST(LinearStage, DimensionsPerCase) {
  const std::map<MetricCase, std::size_t> expect{{MetricCase::Generic, 0},
                                                 {MetricCase::Timelike, 3},
                                                 {MetricCase::SpacelikeNu, 3},
                                                 {MetricCase::SpacelikeMu, 3},
                                                 {MetricCase::Symmetric, 9}};
  for (auto [c, d] : expect)
    for (const auto& g : metrics_for(c, 4)) EXPECT_EQ(linear_stage(build_as_system(g)).dim(), d) << case_name(c);
}

TEST(System, DegreeBounds) {
  for (const auto& g : metrics_for(MetricCase::Symmetric, 2)) {
    auto sys = build_as_system(g);
    for (const auto& q : sys.quadratic) EXPECT_LE(q.degree(), 2);
    EXPECT_FALSE(sys.quadratic.empty());
  }
}

TEST(Catalog, SoundnessAcrossCases) {
  RationalSampler rs(31);
  for (auto c : all_cases())
    for (const auto& g : metrics_for(c, 16)) {
      auto sys = build_as_system(g);
      for (auto f : families_for(c))
        for (int k = 0; k < 8; ++k) {
          auto s = catalog_family(f, g, rs.any());
          EXPECT_TRUE(satisfies(sys, s.vec())) << family_name(f) << " " << case_name(c);
          EXPECT_TRUE(ambrose_singer_holds(g, s)) << family_name(f) << " " << case_name(c);
        }
    }
}

TEST(Catalog, InvalidPairRejected) {
  DiagonalMetric g(rat(1), rat(2), rat(4));
  EXPECT_THROW(catalog_family(Family::Slambda, g, rat(1)), std::invalid_argument);
  EXPECT_THROW(catalog_family(Family::Svol, DiagonalMetric(rat(-2), rat(1), rat(1)), rat(1)), std::invalid_argument);
}

TEST(Catalog, DegenerationsAndWarnings) {
  DiagonalMetric tl(rat(-2), rat(1), rat(1));
  auto s = catalog_family(Family::Slambda, tl, rat(0));
  EXPECT_EQ(s.coeffs, catalog_family(Family::S0, tl, rat(0)).coeffs);
  EXPECT_FALSE(s.warnings.empty());
  DiagonalMetric sn(rat(-1), rat(4), rat(1));
  EXPECT_EQ(catalog_family(Family::Smu, sn, rat(-2)).coeffs, catalog_family(Family::S0, sn, rat(0)).coeffs);
  auto z = catalog_family(Family::Svol, DiagonalMetric(rat(-1), rat(1), rat(1)), rat(0));
  EXPECT_TRUE(is_zero_vec(z.vec()));
  for (const auto& g : metrics_for(MetricCase::Timelike, 8))
    EXPECT_EQ(catalog_family(Family::Slambda, g, g.lambda + 2 * g.mu).coeffs, catalog_family(Family::S0, g, 0).coeffs);
  for (const auto& g : metrics_for(MetricCase::SpacelikeNu, 8))
    EXPECT_EQ(catalog_family(Family::Smu, g, 2 * g.nu - g.mu).coeffs, catalog_family(Family::S0, g, 0).coeffs);
  for (const auto& g : metrics_for(MetricCase::SpacelikeMu, 8))
    EXPECT_EQ(catalog_family(Family::Snu, g, 2 * g.mu - g.nu).coeffs, catalog_family(Family::S0, g, 0).coeffs);
}

// The alternative placement of t for S_mu (t on rho2) is not a solution on
// -lambda = nu != mu, except at the single value where it meets S0.
TEST(Catalog, AlternativeSmuPlacementFails) {
  RationalSampler rs(77);
  for (const auto& g : metrics_for(MetricCase::SpacelikeNu, 8)) {
    Rational t = rs.any();
    HomogeneousStructure alt;
    alt.coeffs[kRho2] = t;
    alt.coeffs[kSig0] = g.mu;
    alt.coeffs[kTau1] = g.mu;
    if (alt.coeffs == catalog_family(Family::S0, g, 0).coeffs) continue;
    EXPECT_FALSE(ambrose_singer_holds(g, alt));
  }
}

TEST(CanonicalConnection, ClosedForms) {
  RationalSampler rs(41);
  for (const auto& g : metrics_for(MetricCase::Timelike, 8)) {
    Rational t = rs.any();
    auto c = canonical_connection(g, catalog_family(Family::Slambda, g, t));
    EXPECT_EQ(c.gamma, reference::slambda_gamma(g, t));
    EXPECT_EQ(curvature(c, StructureConstants::su11()), reference::slambda_curvature(g, t));
  }
  for (const auto& g : metrics_for(MetricCase::SpacelikeNu, 8)) {
    Rational t = rs.any();
    auto c = canonical_connection(g, catalog_family(Family::Smu, g, t));
    EXPECT_EQ(c.gamma, reference::smu_gamma(g, t));
    EXPECT_EQ(curvature(c, StructureConstants::su11()), reference::smu_curvature(g, t));
  }
  for (auto mc : all_cases())
    for (const auto& g : metrics_for(mc, 4)) {
      auto c = canonical_connection(g, catalog_family(Family::S0, g, 0));
      EXPECT_TRUE(c.gamma.is_zero_tensor());
      EXPECT_TRUE(curvature(c, StructureConstants::su11()).is_zero_tensor());
    }
}

TEST(CanonicalConnection, SvolCurvatureUnitMetric) {
  DiagonalMetric g(rat(-1), rat(1), rat(1));
  RationalSampler rs(43);
  for (int k = 0; k < 8; ++k) {
    Rational t = rs.any();
    auto r = curvature(canonical_connection(g, catalog_family(Family::Svol, g, t)), StructureConstants::su11());
    // R~^a_{bcd}: X_a-component of R~(X_c, X_d) X_b
    Rational v = reference::svol_curvature_value(g, t);
    EXPECT_EQ(r(0, 1, 1, 0), v);
    EXPECT_EQ(r(0, 2, 2, 0), v);
    EXPECT_EQ(r(1, 2, 2, 1), v);
    EXPECT_EQ(v, reference::svol_curvature_value_displayed(g, t));
  }
}

// Off mu = 1 the common value is -(mu-t)(mu+t)/mu^2, matching the general
// component formula mu^2 R~^0_101 = 2mu(rho2 - mu) - sigma1 tau0 + (mu - sigma0)(mu - tau1).
TEST(CanonicalConnection, SvolCurvatureGeneralMu) {
  RationalSampler rs(53);
  for (const auto& g : metrics_for(MetricCase::Symmetric, 8)) {
    if (g.mu == 1) continue;
    Rational t = rs.nonzero();
    auto s = catalog_family(Family::Svol, g, t);
    auto r = curvature(canonical_connection(g, s), StructureConstants::su11());
    const auto& c = s.coeffs;
    Rational general = (2 * g.mu * (c[kRho2] - g.mu) - c[kSig1] * c[kTau0] + (g.mu - c[kSig0]) * (g.mu - c[kTau1])) / (g.mu * g.mu);
    EXPECT_EQ(r(0, 1, 1, 0), general);
    EXPECT_EQ(r(0, 1, 1, 0), reference::svol_curvature_value(g, t));
    EXPECT_EQ(r(1, 2, 2, 1), reference::svol_curvature_value(g, t));
    if (t * t != g.mu * g.mu) EXPECT_NE(r(0, 1, 1, 0), reference::svol_curvature_value_displayed(g, t));
  }
}

// The nine displayed curvature components of nabla - S in the symmetric case,
// as polynomials in the coefficients, at arbitrary mu.
TEST(CanonicalConnection, SymmetricCurvatureComponents) {
  RationalSampler rs(47);
  for (const auto& g : metrics_for(MetricCase::Symmetric, 6)) {
    HomogeneousStructure s;
    for (auto& x : s.coeffs) x = rs.any();
    auto r = curvature(canonical_connection(g, s), StructureConstants::su11());
    const Rational& m = g.mu;
    const auto& c = s.coeffs;
    const Rational &r0 = c[kRho0], &r1 = c[kRho1], &r2 = c[kRho2], &s0 = c[kSig0], &s1 = c[kSig1], &s2 = c[kSig2],
                   &t0 = c[kTau0], &t1 = c[kTau1], &t2 = c[kTau2];
    auto comp = [&](int a, int b, int cc, int d) { return Rational(m * m * r(cc, d, b, a)); };
    EXPECT_EQ(comp(0, 1, 0, 1), 2 * m * (r2 - m) - s1 * t0 + (m - s0) * (m - t1));
    // Two of the nine carry flipped signs on their quadratic terms in the
    // printed list; see SymmetricCurvatureSignSlips.
    EXPECT_EQ(comp(0, 1, 0, 2), -2 * m * r1 - s2 * t0 - t2 * (m - s0));
    EXPECT_EQ(comp(0, 1, 1, 2), -2 * m * r0 + s1 * t2 + s2 * (m - t1));
    EXPECT_EQ(comp(0, 2, 0, 1), -2 * m * t2 - r0 * s1 - r1 * (m - s0));
    EXPECT_EQ(comp(0, 2, 0, 2), 2 * m * (t1 - m) - r0 * s2 + (m - r2) * (m - s0));
    EXPECT_EQ(comp(0, 2, 1, 2), 2 * m * t0 - r1 * s2 - s1 * (m - r2));
    EXPECT_EQ(comp(1, 2, 0, 1), -2 * m * s2 + r1 * t0 + r0 * (m - t1));
    EXPECT_EQ(comp(1, 2, 0, 2), 2 * m * s1 - r0 * t2 - t0 * (m - r2));
    EXPECT_EQ(comp(1, 2, 1, 2), 2 * m * (s0 - m) - r1 * t2 + (m - r2) * (m - t1));
  }
}

TEST(CanonicalConnection, SymmetricCurvatureSignSlips) {
  RationalSampler rs(53);
  DiagonalMetric g(rat(-2), rat(2), rat(2));
  HomogeneousStructure s;
  for (auto& x : s.coeffs) x = rs.any();
  auto r = curvature(canonical_connection(g, s), StructureConstants::su11());
  const Rational& m = g.mu;
  const auto& c = s.coeffs;
  // As printed: mu^2 R~^0_102 = -2 mu rho1 + sigma2 tau0 + tau2 (mu - sigma0).
  Rational printed_102 = -2 * m * c[kRho1] + c[kSig2] * c[kTau0] + c[kTau2] * (m - c[kSig0]);
  Rational printed_201 = -2 * m * c[kTau2] + c[kRho0] * c[kSig1] + c[kRho1] * (m - c[kSig0]);
  EXPECT_NE(Rational(m * m * r(0, 2, 1, 0)), printed_102);
  EXPECT_NE(Rational(m * m * r(0, 1, 2, 0)), printed_201);
  // Every catalog family still solves the full system, so the computed
  // components (not the printed ones) are the consistent set.
  for (auto f : families_for(MetricCase::Symmetric))
    EXPECT_TRUE(ambrose_singer_holds(g, catalog_family(f, g, rat(3, 7))));
}

TEST(BranchSolve, TimelikeGivesSlambdaLine) {
  DiagonalMetric g(rat(-2), rat(1), rat(1));
  auto sys = build_as_system(g);
  auto res = branch_solve(sys, linear_stage(sys));
  ASSERT_EQ(res.components.size(), 1u);
  EXPECT_TRUE(res.components[0].certified);
  EXPECT_EQ(res.components[0].affine, family_affine_set(Family::Slambda, g));
}

TEST(BranchSolve, GenericGivesS0Point) {
  DiagonalMetric g(rat(1), rat(2), rat(4));
  auto sys = build_as_system(g);
  auto res = branch_solve(sys, linear_stage(sys));
  ASSERT_EQ(res.components.size(), 1u);
  EXPECT_EQ(res.components[0].affine.dim(), 0u);
  EXPECT_EQ(res.components[0].affine.base, catalog_family(Family::S0, g, 0).vec());
}

TEST(BranchSolve, ComponentsSolveTheSystem) {
  for (auto c : all_cases())
    for (const auto& g : metrics_for(c, 2, 13)) {
      auto sys = build_as_system(g);
      auto res = branch_solve(sys, linear_stage(sys));
      for (const auto& comp : res.components) {
        auto pts = sample_component(comp, 3, 5);
        ASSERT_FALSE(pts.empty());
        if (comp.certified) EXPECT_TRUE(satisfies(sys, comp.affine.base));
        for (const auto& p : pts) EXPECT_TRUE(satisfies(sys, p.point)) << describe(p.point);
      }
    }
}

TEST(BranchSolve, SymmetricCoversCatalog) {
  DiagonalMetric g(rat(-1), rat(1), rat(1));
  auto sys = build_as_system(g);
  auto res = branch_solve(sys, linear_stage(sys));
  auto rep = match_components(res.components, g, 4, 3);
  EXPECT_TRUE(rep.ok) << rep.failure;
  for (const auto& [f, cov] : rep.family_covered) EXPECT_TRUE(cov) << family_name(f);
  bool some_cert = false;
  for (const auto& cm : rep.components)
    for (const auto& s : cm.samples) some_cert = some_cert || (s.certificate && s.certificate->check.ok);
  EXPECT_TRUE(some_cert);
}

TEST(Match, NonSymmetricCasesAreSetEqual) {
  for (auto c : {MetricCase::Generic, MetricCase::Timelike, MetricCase::SpacelikeNu, MetricCase::SpacelikeMu})
    for (const auto& g : metrics_for(c, 4, 21)) {
      auto sys = build_as_system(g);
      auto res = branch_solve(sys, linear_stage(sys));
      auto rep = match_components(res.components, g);
      EXPECT_TRUE(rep.ok) << case_name(c) << ": " << rep.failure;
      EXPECT_EQ(rep.sampled_components, 0u);
    }
}

TEST(Match, CorruptedComponentIsReported) {
  DiagonalMetric g(rat(1), rat(2), rat(4));
  SolutionComponent bad;
  bad.affine.n = 9;
  bad.affine.base = catalog_family(Family::S0, g, 0).vec();
  bad.affine.base[kRho0] += 1;
  auto rep = match_components({bad}, g);
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.failure.find("rho0=1"), std::string::npos) << rep.failure;
}

TEST(Certificates, SymmetricShapes) {
  DiagonalMetric g(rat(-3), rat(3), rat(3));
  auto vol = symmetric_shape(catalog_family(Family::Svol, g, rat(5)).vec(), g);
  ASSERT_TRUE(vol.scalar);
  EXPECT_EQ(*vol.scalar, rat(2));
  auto nl = symmetric_shape(catalog_family(Family::SnullMinus, g, rat(2)).vec(), g);
  ASSERT_TRUE(nl.y);
  Rational n = g.lambda * (*nl.y)[0] * (*nl.y)[0] + g.mu * (*nl.y)[1] * (*nl.y)[1];
  EXPECT_TRUE(is_zero(n));
}
