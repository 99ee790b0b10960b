#pragma once

// Explicit decompositions of the non-symmetric theorems and isomorphism
// certificates between homogeneous structures.

#include "as_solver.hpp"
#include "lemma.hpp"

#include <string>
#include <vector>

namespace homstruct {

struct Certificate2 {
  std::string name;
  std::vector<std::pair<std::string, CheckResult>> checks;
  bool ok() const {
    for (const auto& [n, c] : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
  std::string failure() const {
    for (const auto& [n, c] : checks)
      if (!c.ok) return n + ": " + c.detail;
    return {};
  }
};

// phi: (su(1,1), g_src) -> (su(1,1), g_dst) preserves brackets and metrics.
template <class F>
CheckResult check_frame_isometry(const Mat<F>& phi, const DiagonalMetric& g_src, const DiagonalMetric& g_dst) {
  auto alg = StructureConstants::su11();
  auto col = [&](int k) {
    Vec<F> v(3);
    for (int l = 0; l < 3; ++l) v[static_cast<std::size_t>(l)] = phi[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
    return v;
  };
  auto br = [&](const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(3, F(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          r[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * from_rational<F>(alg.c(i, j, k));
    return r;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec<F> lhs(3, F(0));
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          lhs[static_cast<std::size_t>(l)] += from_rational<F>(alg.c(i, j, k)) * phi[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
      if (lhs != br(col(i), col(j)))
        return CheckResult::fail("bracket [X" + std::to_string(i) + ",X" + std::to_string(j) + "] not preserved");
      F s(0);
      for (int a = 0; a < 3; ++a)
        s += phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] *
             from_rational<F>(g_dst.g(a));
      F want = i == j ? from_rational<F>(g_src.g(i)) : F(0);
      if (s != want) return CheckResult::fail("metric not preserved at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return CheckResult::pass();
}

// Structure S on g_src and S' on g_dst with phi^* S' = S. Checks the frame
// isometry, the tensor identity and the induced Lie algebra isomorphism of
// the transvection algebras.
template <class F>
Certificate2 structure_isomorphism(std::string name, const DiagonalMetric& g_src, const Coeffs<F>& s_src,
                                   const DiagonalMetric& g_dst, const Coeffs<F>& s_dst, const Mat<F>& phi) {
  Certificate2 c;
  c.name = std::move(name);
  c.checks.emplace_back("frame isometry", check_frame_isometry(phi, g_src, g_dst));
  auto pushed = push_forward(s_src, phi);
  if (!pushed) c.checks.emplace_back("push-forward", CheckResult::fail("not a structure tensor"));
  else if (*pushed != s_dst) c.checks.emplace_back("push-forward", CheckResult::fail("phi_* S differs from S'"));
  else c.checks.emplace_back("push-forward", CheckResult::pass());
  auto src = build_transvection_algebra<F>(g_src, s_src);
  auto dst = build_transvection_algebra<F>(g_dst, s_dst);
  auto psi = induced_map(src, dst, phi);
  if (!psi) c.checks.emplace_back("transvection algebras", CheckResult::fail("holonomy not mapped onto holonomy"));
  else c.checks.emplace_back("transvection algebras", verify_isomorphism(src.alg, dst.alg, *psi));
  return c;
}

inline Mat<Rational> frame_map(std::initializer_list<std::initializer_list<long>> rows) {
  Mat<Rational> m;
  for (auto r : rows) {
    Vec<Rational> v;
    for (auto x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

// S_null^-(t) = S_null^+(-t) under X1 -> -X1, X2 -> -X2.
inline Certificate2 null_sign_certificate(const DiagonalMetric& g, const Rational& t) {
  auto phi = frame_map({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  return structure_isomorphism<Rational>("S_null^-(t) ~ S_null^+(-t)", g, catalog_family(Family::SnullMinus, g, t).coeffs, g,
                                         catalog_family(Family::SnullPlus, g, -t).coeffs, phi);
}

// S_nu(t) on (lambda, nu, mu) and S_mu(t) on (lambda, mu, nu) with
// -lambda = nu: phi(X1) = -X2, phi(X2) = X1.
inline Certificate2 mu_nu_exchange_certificate(const DiagonalMetric& g_mu, const Rational& t) {
  auto [l, m, n] = g_mu.params();
  DiagonalMetric g_nu(l, n, m);
  auto phi = frame_map({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  return structure_isomorphism<Rational>("S_nu(t) ~ S_mu(t)", g_nu, catalog_family(Family::Snu, g_nu, t).coeffs, g_mu,
                                         catalog_family(Family::Smu, g_mu, t).coeffs, phi);
}

// Two-parameter structures on -lambda = mu = nu with rho2 = mu, sigma0, tau1 != mu.
inline Coeffs<Rational> case5_structure(const Rational& mu, const Rational& t, const Rational& k) {
  if (sgn(t) == 0 || sgn(k) == 0) throw std::invalid_argument("case5_structure: t and k must be nonzero");
  Coeffs<Rational> c;
  c.fill(Rational(0));
  c[kRho2] = mu;
  c[kSig0] = mu + k * t;
  c[kSig1] = t;
  c[kTau0] = -t;
  c[kTau1] = mu - t / k;
  return c;
}

// Lemma case and the frame map sending the adapted basis to X0, X1, X2.
struct Case5Match {
  std::string lemma_case;
  Rational c;
  Mat<K1> phi;
};

inline Case5Match case5_match(const Rational& mu, const Rational& t, const Rational& k) {
  Case5Match r;
  Rational k2 = k * k;
  r.c = t / (2 * mu) * (k - 1 / k);
  Mat<K1> basis = zero_matrix<K1>(3, 3);  // columns v0, v1, X2
  basis[2][2] = K1(1);
  if (k2 > 1 || k2 < 1) {
    bool big = k2 > 1;
    Rational s = detail::exact_root_or_throw(big ? Rational(k2 - 1) : Rational(1 - k2), big ? "k^2 - 1" : "1 - k^2");
    r.lemma_case = big ? "i" : "ii";
    // big: v0 = (k X0 - X1)/s, v1 = (k X1 - X0)/s; small: v0 = (k X1 - X0)/s, v1 = (k X0 - X1)/s
    Rational a = k / s, b = Rational(-1) / s;
    if (big) {
      basis[0][0] = K1(a), basis[1][0] = K1(b);
      basis[1][1] = K1(a), basis[0][1] = K1(b);
    } else {
      basis[1][0] = K1(a), basis[0][0] = K1(b);
      basis[0][1] = K1(a), basis[1][1] = K1(b);
    }
  } else {
    // k = -1 pairs with (iii) and c = -t/mu; k = 1 with its mirror. The
    // adapted basis is the frame itself.
    r.lemma_case = sgn(k) < 0 ? "iii" : "iii-minus";
    r.c = sgn(k) < 0 ? Rational(-t / mu) : Rational(t / mu);
    basis = identity_matrix<K1>(3);
  }
  auto inv = inverse(basis);
  if (!inv) throw std::logic_error("case5_match: singular basis");
  r.phi = *inv;
  return r;
}

inline Certificate2 case5_certificate(const Rational& mu, const Rational& t, const Rational& k) {
  DiagonalMetric g(-mu, mu, mu);
  auto s = case5_structure(mu, t, k);
  auto m = case5_match(mu, t, k);
  Certificate2 c;
  c.name = "case 5 (k = " + to_pretty(k) + ") -> lemma (" + m.lemma_case + ")";
  c.checks.emplace_back("Ambrose-Singer", ambrose_singer_holds(g, HomogeneousStructure{s, Family::Raw, {}, {}}) ? CheckResult::pass() : CheckResult::fail("not a homogeneous structure"));
  auto ta = build_transvection_algebra<K1>(g, coeffs_as<K1>(HomogeneousStructure{s, Family::Raw, {}, {}}));
  c.checks.emplace_back("decomposition", match_decomposition<K1>(ta, lemma_decomposition(m.lemma_case, m.c), g, std::optional<Mat<K1>>(m.phi)));
  return c;
}

// Three-parameter structures with rho2, sigma0, tau1 all != mu.
inline Coeffs<Rational> case8a_structure(const Rational& mu, const Rational& rho0, const Rational& rho1, const Rational& sigma1) {
  if (sgn(rho0) == 0 || sgn(rho1) == 0 || sgn(sigma1) == 0) throw std::invalid_argument("case8a_structure: parameters must be nonzero");
  Coeffs<Rational> c;
  c[kRho0] = rho0;
  c[kRho1] = rho1;
  c[kRho2] = mu - rho0 * rho1 / sigma1;
  c[kSig0] = mu + rho0 * sigma1 / rho1;
  c[kSig1] = sigma1;
  c[kSig2] = -rho0;
  c[kTau0] = -sigma1;
  c[kTau1] = mu - rho1 * sigma1 / rho0;
  c[kTau2] = rho1;
  return c;
}

// Rotation in the (X1, X2)-plane carrying the case-(8a) structure to the
// case-(5) form with t = sqrt(sigma1^2 + rho0^2), k = rho0 sigma1 / (rho1 t).
inline Certificate2 case8a_certificate(const Rational& mu, const Rational& rho0, const Rational& rho1, const Rational& sigma1) {
  DiagonalMetric g(-mu, mu, mu);
  Rational r = detail::exact_root_or_throw(sigma1 * sigma1 + rho0 * rho0, "sigma1^2 + rho0^2");
  Rational k = rho0 * sigma1 / (rho1 * r);
  auto s = case8a_structure(mu, rho0, rho1, sigma1);
  // phi(X1) = (sigma1 X1 - rho0 X2)/r, phi(X2) = (rho0 X1 + sigma1 X2)/r
  Mat<Rational> phi = zero_matrix<Rational>(3, 3);
  phi[0][0] = 1;
  phi[1][1] = sigma1 / r, phi[2][1] = -rho0 / r;
  phi[1][2] = rho0 / r, phi[2][2] = sigma1 / r;
  // phi^* S = S_5(t, k): S_5 pushed forward by phi is S.
  auto c = structure_isomorphism<Rational>("case 8a -> case 5 (t = " + to_pretty(r) + ", k = " + to_pretty(k) + ")", g,
                                           case5_structure(mu, r, k), g, s, phi);
  c.checks.insert(c.checks.begin(), {"Ambrose-Singer", ambrose_singer_holds(g, HomogeneousStructure{s, Family::Raw, {}, {}})
                                                           ? CheckResult::pass()
                                                           : CheckResult::fail("not a homogeneous structure")});
  return c;
}

// ---------------------------------------------------------------------------
// Explicit decompositions of the S_lambda and S_mu theorems.

// u(1,1) = su(1,1) (+) R iI; tau(iI) = X0.
inline Decomposition<Rational> slambda_theorem_decomposition(const DiagonalMetric& g, const Rational& t) {
  auto [l, m, n] = g.params();
  Decomposition<Rational> d;
  d.id = "u(1,1)";
  d.ambient = su11_plus_center<Rational>("iI");
  d.tau = zero_matrix<Rational>(3, 4);
  for (std::size_t i = 0; i < 3; ++i) d.tau[i][i] = 1;
  d.tau[0][3] = 1;
  // diag(0, i) = (iI - X0)/2, diag(i, (1 + (lambda - t)/mu) i) = a X0 + b iI.
  Rational a = -(l - t) / (2 * m), b = 1 + (l - t) / (2 * m);
  d.h = {{rat(-1, 2), 0, 0, rat(1, 2)}};
  d.m = {{a, 0, 0, b}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  d.h_names = {"diag(0,i)"};
  d.m_names = {"E_t", "X1", "X2"};
  return d;
}

// su(1,1) (+) R D with D central; tau(D) = -X1.
inline Decomposition<Rational> smu_theorem_decomposition(const DiagonalMetric& g, const Rational& t) {
  auto [l, m, n] = g.params();
  Decomposition<Rational> d;
  d.id = "su(1,1)+R";
  d.ambient = su11_plus_center<Rational>("D");
  d.tau = zero_matrix<Rational>(3, 4);
  for (std::size_t i = 0; i < 3; ++i) d.tau[i][i] = 1;
  d.tau[1][3] = -1;
  d.h = {{0, 1, 0, 1}};
  d.m = {{1, 0, 0, 0}, {0, (m + t) / (2 * n), 0, -(2 * n - m - t) / (2 * n)}, {0, 0, 1, 0}};
  d.h_names = {"X1+D"};
  d.m_names = {"X0", "E_t", "X2"};
  return d;
}

struct HattedReport {
  std::vector<RelationCheck> relations;
  CheckResult hatted_table;
  bool ok() const {
    for (const auto& r : relations)
      if (!r.ok) return false;
    return hatted_table.ok;
  }
};

namespace detail {

// In a 4-dimensional presentation with basis U, X0, X1, X2: rebase to the
// hatted basis and compare with su(1,1) (+) R, the hatted U central.
inline CheckResult hatted_check(const LieAlgebraPresentation<Rational>& p, const std::vector<Vec<Rational>>& hatted) {
  auto q = rebase(p, hatted, {"U^", "X0^", "X1^", "X2^"});
  if (!q) return CheckResult::fail("hatted vectors are not a basis");
  auto want = su11_plus_center<Rational>("U^");
  // want has basis X0, X1, X2, Z; q has U^, X0^, X1^, X2^.
  const std::size_t perm[4] = {3, 0, 1, 2};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        if (q->table[i][j][k] != want.table[perm[i]][perm[j]][perm[k]])
          return CheckResult::fail("[" + q->names[i] + "," + q->names[j] + "] = " + q->show(q->table[i][j]));
  return CheckResult::pass();
}

inline RelationCheck rel(const LieAlgebraPresentation<Rational>& p, std::string text, std::size_t i, std::size_t j,
                         Vec<Rational> want) {
  auto got = p.table[i][j];
  return {std::move(text), got == want, p.show(got)};
}

}  // namespace detail

// U = 2(theta^1 (x) X2 - theta^2 (x) X1) on -lambda != mu = nu.
inline HattedReport slambda_hatted(const DiagonalMetric& g, const Rational& t) {
  auto [l, m, n] = g.params();
  auto u = endo_add(theta_x<Rational>(1, 2), theta_x<Rational>(2, 1), Rational(-1));
  u = endo_scale(u, Rational(2));
  auto s = catalog_family(Family::Slambda, g, t);
  auto ta = build_transvection_algebra<Rational>(g, s.coeffs, std::vector<Endo<Rational>>{u}, {"U"});
  const auto& p = ta.alg;
  HattedReport r;
  Rational q = (t - l) / m, e = (l + 2 * m - t) / m;
  r.relations = {detail::rel(p, "[X0,X1] = ((t-lambda)/mu) X2", 1, 2, {0, 0, 0, q}),
                 detail::rel(p, "[X1,X2] = -2X0 - ((lambda+2mu-t)/mu) U", 2, 3, {-e, -2, 0, 0}),
                 detail::rel(p, "[X2,X0] = ((t-lambda)/mu) X1", 3, 1, {0, 0, q, 0}),
                 detail::rel(p, "[U,X0] = 0", 0, 1, {0, 0, 0, 0}),
                 detail::rel(p, "[U,X1] = 2X2", 0, 2, {0, 0, 0, 2}),
                 detail::rel(p, "[U,X2] = -2X1", 0, 3, {0, 0, -2, 0})};
  Rational cu = -(l - t) / (2 * m), cx = (l - t + 2 * m) / (2 * m);
  r.hatted_table = detail::hatted_check(p, {{cu, -1, 0, 0}, {cx, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return r;
}

// U = 2(theta^2 (x) X0 + theta^0 (x) X2) on -lambda = nu != mu.
inline HattedReport smu_hatted(const DiagonalMetric& g, const Rational& t) {
  auto [l, m, n] = g.params();
  auto u = endo_scale(endo_add(theta_x<Rational>(2, 0), theta_x<Rational>(0, 2)), Rational(2));
  auto s = catalog_family(Family::Smu, g, t);
  auto ta = build_transvection_algebra<Rational>(g, s.coeffs, std::vector<Endo<Rational>>{u}, {"U"});
  const auto& p = ta.alg;
  HattedReport r;
  Rational q = (m + t) / n, e = (2 * n - m - t) / n;
  r.relations = {detail::rel(p, "[X0,X1] = ((mu+t)/nu) X2", 1, 2, {0, 0, 0, q}),
                 detail::rel(p, "[X1,X2] = -((mu+t)/nu) X0", 2, 3, {0, -q, 0, 0}),
                 detail::rel(p, "[X2,X0] = 2X1 - ((2nu-mu-t)/nu) U", 3, 1, {-e, 0, 2, 0}),
                 detail::rel(p, "[U,X0] = 2X2", 0, 1, {0, 0, 0, 2}),
                 detail::rel(p, "[U,X1] = 0", 0, 2, {0, 0, 0, 0}),
                 detail::rel(p, "[U,X2] = 2X0", 0, 3, {0, 2, 0, 0})};
  Rational cu = -(m + t) / (2 * n), cx = -(2 * n - m - t) / (2 * n);
  r.hatted_table = detail::hatted_check(p, {{cu, 0, -1, 0}, {0, 1, 0, 0}, {cx, 0, 1, 0}, {0, 0, 0, 1}});
  return r;
}

}  // namespace homstruct

namespace homstruct {

// Coset shapes: isometry algebra dimension per (metric case, family).
struct TableOneRow {
  MetricCase metric_case;
  Family family;
  std::string group;
  std::size_t isometry_dim;
};

inline std::vector<TableOneRow> table_one() {
  using M = MetricCase;
  using F = Family;
  return {{M::Symmetric, F::Svol, "SU(1,1) x SU(1,1)", 6},  {M::Symmetric, F::Slambda, "SU(1,1) x U(1)", 4},
          {M::Symmetric, F::Smu, "SU(1,1) x R", 4},         {M::Symmetric, F::Snu, "SU(1,1) x R", 4},
          {M::Symmetric, F::SnullMinus, "SU(1,1) x R", 4},  {M::Symmetric, F::SnullPlus, "SU(1,1) x R", 4},
          {M::Symmetric, F::S0, "SU(1,1)", 3},              {M::Timelike, F::Slambda, "SU(1,1) x U(1)", 4},
          {M::Timelike, F::S0, "SU(1,1)", 3},               {M::SpacelikeNu, F::Smu, "SU(1,1) x R", 4},
          {M::SpacelikeNu, F::S0, "SU(1,1)", 3},            {M::SpacelikeMu, F::Snu, "SU(1,1) x R", 4},
          {M::SpacelikeMu, F::S0, "SU(1,1)", 3},            {M::Generic, F::S0, "SU(1,1)", 3}};
}

}  // namespace homstruct
