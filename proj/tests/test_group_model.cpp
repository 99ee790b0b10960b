#include <gtest/gtest.h>

#include <set>

#include "homstruct/group_model.hpp"

using namespace homstruct;

namespace {

struct CaseSample {
  DiagonalMetric g;
  Rational t;
};

std::vector<CaseSample> case_samples(MetricCase c, int n, std::uint64_t seed) {
  SampleOptions opt;
  opt.lambda_sign = LambdaSign::Negative;
  RationalSampler rs(seed + 1);
  std::vector<CaseSample> out;
  Family f = c == MetricCase::Timelike ? Family::Slambda : Family::Smu;
  for (const auto& p : sample_params(c, seed, n, opt)) {
    DiagonalMetric g(p);
    auto ex = excluded_t(f, g);
    Rational t = rs.nonzero();
    while (ex && *ex == t) t = rs.nonzero();
    out.push_back({g, t});
  }
  return out;
}

ActionCase action_for(MetricCase c) { return c == MetricCase::Timelike ? ActionCase::Timelike : ActionCase::SpacelikeNu; }

}  // namespace

TEST(GroupPoint, SamplesLieOnTheHyperboloid) {
  auto pts = sample_points(5, 32);
  ASSERT_EQ(pts.size(), 32u);
  EXPECT_EQ(pts.front(), base_point());
  for (const auto& p : pts) {
    EXPECT_EQ(p.hyperboloid(), 1) << to_string(p);
    EXPECT_EQ(p * p.inverse(), base_point());
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) EXPECT_FALSE(pts[i] == pts[j]);
}

TEST(GroupPoint, SamplingIsDeterministic) {
  auto a = sample_points(11, 20), b = sample_points(11, 20), c = sample_points(12, 20);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(GroupPoint, MatrixProductMatchesPointProduct) {
  auto pts = sample_points(3, 10);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    auto m = pts[i].matrix() * pts[i + 1].matrix();
    auto p = point_from_matrix(m);
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, pts[i] * pts[i + 1]);
  }
}

TEST(GroupPoint, BasisIsSu11WithStructureConstants) {
  auto alg = StructureConstants::su11();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto br = su11_basis(i) * su11_basis(j) - su11_basis(j) * su11_basis(i);
      auto c = su11_coords(br);
      ASSERT_TRUE(c);
      for (int k = 0; k < 3; ++k) EXPECT_EQ((*c)[static_cast<std::size_t>(k)], alg.c(i, j, k));
    }
  EXPECT_FALSE(su11_coords(mat2<Rational>(1, 0, 0, -1)));
}

TEST(Killing, FieldsAreTangent) {
  auto pts = sample_points(8, 12);
  for (const auto& p : pts)
    for (int a = 0; a < 3; ++a) {
      EXPECT_TRUE(killing_field(su11_basis(a), Side::Left, p).left_coords());
      EXPECT_TRUE(killing_field(su11_basis(a), Side::Right, p).left_coords());
    }
}

TEST(Killing, RightFieldIsLeftInvariant) {
  for (const auto& p : sample_points(9, 8)) {
    auto c = killing_field(su11_basis(2), Side::Right, p).left_coords();
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::array<Rational, 3>{0, 0, 1}));
  }
}

TEST(Killing, FrameAtOriginSpansTangentSpace) {
  DiagonalMetric g(-3, 2, 2);
  auto f = solve_expansion<Rational>(ActionCase::Timelike, g, rat(7, 3), base_point());
  ASSERT_TRUE(f);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ((*f)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], a == b ? 1 : 0);
}

class ExpansionSweep : public ::testing::TestWithParam<MetricCase> {};

TEST_P(ExpansionSweep, CorrectedClosedFormsMatchLinearSolve) {
  auto pts = sample_points(21, 16);
  for (const auto& s : case_samples(GetParam(), 6, 400)) {
    auto r = verify_expansion(action_for(GetParam()), s.g, s.t, pts);
    EXPECT_TRUE(r.ok()) << s.g.to_string() << " t=" << to_string(s.t) << ": " << r.first_mismatch;
    EXPECT_GE(r.points_checked, 16 - r.points_skipped);
    EXPECT_GE(r.points_checked, 14);
  }
}

TEST_P(ExpansionSweep, PrintedClosedFormsFailOnlyAtKnownEntries) {
  auto pts = sample_points(22, 16);
  const std::set<int> bad = GetParam() == MetricCase::Timelike ? std::set<int>{3, 8} : std::set<int>{4, 5, 6};
  for (const auto& s : case_samples(GetParam(), 4, 500)) {
    auto r = verify_expansion(action_for(GetParam()), s.g, s.t, pts, FormulaVariant::Printed);
    EXPECT_FALSE(r.ok());
    for (int k = 0; k < 9; ++k) {
      if (bad.count(k))
        EXPECT_GT(r.mismatches[static_cast<std::size_t>(k)], 0) << coefficient_names(action_for(GetParam()))[static_cast<std::size_t>(k)];
      else
        EXPECT_EQ(r.mismatches[static_cast<std::size_t>(k)], 0) << coefficient_names(action_for(GetParam()))[static_cast<std::size_t>(k)];
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, ExpansionSweep, ::testing::Values(MetricCase::Timelike, MetricCase::SpacelikeNu));

TEST(Expansion, SpacelikeGtAtOrigin) {
  // At o both g_t forms reduce to -2nu * 2 / (-4nu) = 1.
  DiagonalMetric g(-3, 2, 3);
  for (auto v : {FormulaVariant::Printed, FormulaVariant::Corrected}) {
    auto f = expansion_formulas<Rational>(ActionCase::SpacelikeNu, g, rat(5, 7), base_point(), v);
    ASSERT_TRUE(f);
    EXPECT_EQ((*f)[1][1], GaussianRational(1));
  }
}

TEST(Expansion, TimelikeGtPrintedDenominatorDiffers) {
  DiagonalMetric g(-3, 2, 2);
  GroupPoint p{GaussianRational(rat(5, 4)), GaussianRational(0, rat(3, 4))};
  p = p * GroupPoint{GaussianRational(rat(13, 12)), GaussianRational(rat(5, 12))};
  auto solved = solve_expansion<Rational>(ActionCase::Timelike, g, rat(7, 3), p);
  auto pr = expansion_formulas<Rational>(ActionCase::Timelike, g, rat(7, 3), p, FormulaVariant::Printed);
  auto co = expansion_formulas<Rational>(ActionCase::Timelike, g, rat(7, 3), p, FormulaVariant::Corrected);
  ASSERT_TRUE(solved && pr && co);
  EXPECT_EQ(GaussianRational((*solved)[1][0]), (*co)[1][0]);
  EXPECT_NE(GaussianRational((*solved)[1][0]), (*pr)[1][0]);
}

TEST(Expansion, SingularPointsAreCounted) {
  // lambda - t + mu = -4, mu = 2: the denominator -4|z2|^2 + 2|z1|^2 vanishes at (1 + i, 1).
  DiagonalMetric g(-3, 2, 2);
  Rational t = 3;
  GroupPoint p{GaussianRational(1, 1), GaussianRational(1)};
  ASSERT_EQ(p.hyperboloid(), 1);
  auto r = verify_expansion(ActionCase::Timelike, g, t, {base_point(), p});
  EXPECT_EQ(r.points_skipped, 1);
  EXPECT_EQ(r.points_checked, 1);
  EXPECT_TRUE(r.ok());
}

TEST(ActionConnection, TimelikeEqualsCanonical) {
  for (const auto& s : case_samples(MetricCase::Timelike, 8, 600)) {
    auto r = connection_from_action(ActionCase::Timelike, s.g, s.t);
    EXPECT_TRUE(r.ok()) << s.g.to_string();
    Rational c = (s.g.lambda - s.t + 2 * s.g.mu) / s.g.mu;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k) {
          Rational want = 0;
          if (a == 0 && b == 1 && k == 2) want = c;
          if (a == 0 && b == 2 && k == 1) want = -c;
          EXPECT_EQ(r.from_solve(a, b, k), want);
        }
  }
}

TEST(ActionConnection, SpacelikeEqualsCanonical) {
  for (const auto& s : case_samples(MetricCase::SpacelikeNu, 8, 700)) {
    auto r = connection_from_action(ActionCase::SpacelikeNu, s.g, s.t);
    EXPECT_TRUE(r.ok()) << s.g.to_string();
    Rational c = (s.g.mu + s.t - 2 * s.g.nu) / s.g.nu;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k) {
          Rational want = 0;
          if (a == 1 && b == 2 && k == 0) want = c;
          if (a == 1 && b == 0 && k == 2) want = c;
          EXPECT_EQ(r.from_solve(a, b, k), want);
        }
  }
}

TEST(ActionConnection, TrivialActionGivesZeroConnection) {
  SampleOptions opt;
  for (const auto& p : sample_params(MetricCase::Generic, 3, 6, opt)) {
    auto r = connection_from_action(ActionCase::Trivial, DiagonalMetric(p), 0);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.from_solve, Tensor<Rational>(3));
  }
}

TEST(DoubleCover, DisplayedMatrixIsAdjointAndHomomorphism) {
  auto pts = sample_points(31, 16);
  auto r = double_cover_check(pts);
  EXPECT_EQ(r.pairs, 16);
  EXPECT_TRUE(r.in_so012.ok) << r.in_so012.detail;
  EXPECT_TRUE(r.homomorphism.ok) << r.homomorphism.detail;
  EXPECT_TRUE(r.kernel.ok) << r.kernel.detail;
  EXPECT_TRUE(r.adjoint.ok) << r.adjoint.detail;
}

TEST(DoubleCover, RejectsNonIsometry) {
  auto a = double_cover_matrix(sample_points(2, 3)[2]);
  a[0][1] += 1;
  EXPECT_FALSE(check_so012(a).ok);
  auto flip = zero_matrix<Rational>(3, 3);
  flip[0][0] = -1, flip[1][1] = -1, flip[2][2] = 1;
  EXPECT_FALSE(check_so012(flip).ok);
}

TEST(Hopf, FibresAreKernels) {
  auto pts = sample_points(41, 16);
  for (auto h : {HopfMap::Pi0, HopfMap::Pi1, HopfMap::PiPlus}) {
    auto r = hopf_check(h, pts);
    EXPECT_TRUE(r.kernel.ok) << r.which << ": " << r.kernel.detail;
  }
}

TEST(Hopf, HorizontalFramesAreIsometric) {
  auto pts = sample_points(42, 16);
  for (auto h : {HopfMap::Pi0, HopfMap::Pi1}) {
    auto r = hopf_check(h, pts);
    EXPECT_TRUE(r.isometry.ok) << r.which << ": " << r.isometry.detail;
  }
}

TEST(Hopf, NonFibreDirectionsAreNotKernels) {
  auto p = sample_points(43, 4)[3];
  EXPECT_NE(hopf_differential(HopfMap::Pi0, p, su11_basis(1)), std::vector<Rational>(3, Rational(0)));
  EXPECT_NE(hopf_differential(HopfMap::Pi1, p, su11_basis(0)), std::vector<Rational>(3, Rational(0)));
  EXPECT_NE(hopf_differential(HopfMap::PiPlus, p, su11_basis(0) - su11_basis(1)), std::vector<Rational>(2, Rational(0)));
}

TEST(Hopf, ImagesLieOnQuadrics) {
  for (const auto& p : sample_points(44, 16)) {
    auto a = hopf_map(HopfMap::Pi0, p);
    EXPECT_EQ(-a[0] * a[0] + a[1] * a[1] + a[2] * a[2], rat(-1, 4));
    EXPECT_GT(sgn(a[0]), 0);
    auto b = hopf_map(HopfMap::Pi1, p);
    EXPECT_EQ(b[0] * b[0] - b[1] * b[1] - b[2] * b[2], rat(-1, 4));
  }
}
