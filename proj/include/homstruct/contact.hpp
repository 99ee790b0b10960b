#pragma once

// Almost contact / paracontact metric structures on the frame X0, X1, X2,
// their parallelism for canonical connections, and mixed metric 3-structures.

#include "lemma.hpp"
#include "reductive.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace homstruct {

enum class ContactKind { Contact, Paracontact };

inline std::string kind_name(ContactKind k) { return k == ContactKind::Contact ? "contact" : "paracontact"; }

// The displayed left-invariant triples. Phi0Riemannian is the sign-reversed
// phi_0 used by the Riemannian mixed family.
enum class TripleId { Phi0, Phi1, Phi2, PhiTilde1, PhiTilde2, Phi0Riemannian };

inline std::string triple_name(TripleId id) {
  switch (id) {
    case TripleId::Phi0: return "phi0";
    case TripleId::Phi1: return "phi1";
    case TripleId::Phi2: return "phi2";
    case TripleId::PhiTilde1: return "phitilde1";
    case TripleId::PhiTilde2: return "phitilde2";
    case TripleId::Phi0Riemannian: return "phi0R";
  }
  return "?";
}

inline const std::array<TripleId, 6>& all_triples() {
  static const std::array<TripleId, 6> t{TripleId::Phi0,      TripleId::Phi1,      TripleId::Phi2,
                                         TripleId::PhiTilde1, TripleId::PhiTilde2, TripleId::Phi0Riemannian};
  return t;
}

struct ContactTriple {
  TripleId id = TripleId::Phi0;
  ContactKind kind = ContactKind::Contact;
  int index = 0;
  Endo<Rational> phi;  // phi[l][k] = X_l-component of phi(X_k)
  Vec<Rational> xi, eta;
  Rational epsilon;  // g(xi, xi)
};

// Entries of the displayed triples are sqrt(|g_b| / |g_a|) and sqrt|g_r|.
// Perfect-square parameters always qualify; other inputs are accepted when
// the ratios involved happen to be squares.
inline Rational exact_root(const Rational& x, const std::string& what) {
  auto r = exact_sqrt(x);
  if (!r) throw std::invalid_argument("contact structures need " + what + " to be a square of a rational; got " + to_string(x));
  return *r;
}

namespace detail {

// Xbar_a (x) thetabar^b as an endomorphism: X_b -> sqrt(|g_b| / |g_a|) X_a.
inline void add_bar(Endo<Rational>& e, const DiagonalMetric& g, int a, int b, int sign) {
  const char* nm[] = {"|lambda|", "mu", "nu"};
  Rational q = exact_root(abs(g.g(b)) / abs(g.g(a)), std::string(nm[b]) + "/" + nm[a]);
  e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += Rational(sign) * q;
}

}  // namespace detail

// The triple as displayed, with no admissibility check.
inline ContactTriple build_triple(TripleId id, const DiagonalMetric& g) {
  ContactTriple t;
  t.id = id;
  t.phi = zero_matrix<Rational>(3, 3);
  int r = 0;
  switch (id) {
    case TripleId::Phi0:
      detail::add_bar(t.phi, g, 1, 2, 1), detail::add_bar(t.phi, g, 2, 1, -1);
      r = 0;
      break;
    case TripleId::Phi0Riemannian:
      detail::add_bar(t.phi, g, 1, 2, -1), detail::add_bar(t.phi, g, 2, 1, 1);
      r = 0;
      break;
    case TripleId::Phi1:
      detail::add_bar(t.phi, g, 0, 2, 1), detail::add_bar(t.phi, g, 2, 0, -1);
      r = 1;
      break;
    case TripleId::Phi2:
      detail::add_bar(t.phi, g, 1, 0, 1), detail::add_bar(t.phi, g, 0, 1, -1);
      r = 2;
      break;
    case TripleId::PhiTilde1:
      detail::add_bar(t.phi, g, 2, 0, -1), detail::add_bar(t.phi, g, 0, 2, -1);
      r = 1;
      break;
    case TripleId::PhiTilde2:
      detail::add_bar(t.phi, g, 1, 0, 1), detail::add_bar(t.phi, g, 0, 1, 1);
      r = 2;
      break;
  }
  t.kind = (id == TripleId::PhiTilde1 || id == TripleId::PhiTilde2) ? ContactKind::Paracontact : ContactKind::Contact;
  t.index = r;
  auto ur = static_cast<std::size_t>(r);
  Rational s = exact_root(abs(g.g(r)), r == 0 ? "|lambda|" : (r == 1 ? "mu" : "nu"));
  t.xi = Vec<Rational>(3, Rational(0));
  t.eta = Vec<Rational>(3, Rational(0));
  t.xi[ur] = 1 / s;
  t.eta[ur] = s;
  t.epsilon = sgn(g.g(r));
  return t;
}

// Compatible with g exactly when this returns true.
inline bool triple_admissible(TripleId id, const DiagonalMetric& g) {
  switch (id) {
    case TripleId::Phi0:
    case TripleId::Phi0Riemannian: return true;
    case TripleId::Phi1:
    case TripleId::Phi2: return sgn(g.lambda) > 0;
    case TripleId::PhiTilde1:
    case TripleId::PhiTilde2: return sgn(g.lambda) < 0;
  }
  return false;
}

inline ContactTriple make_triple(ContactKind kind, int index, const DiagonalMetric& g) {
  if (index < 0 || index > 2) throw std::invalid_argument("make_triple: index must be 0, 1 or 2");
  TripleId id;
  if (kind == ContactKind::Contact) {
    id = index == 0 ? TripleId::Phi0 : (index == 1 ? TripleId::Phi1 : TripleId::Phi2);
  } else {
    if (index == 0) throw std::invalid_argument("make_triple: no paracontact triple with xi along X0 (timelike)");
    id = index == 1 ? TripleId::PhiTilde1 : TripleId::PhiTilde2;
  }
  if (!triple_admissible(id, g))
    throw std::invalid_argument("make_triple: " + triple_name(id) + " is not compatible with lambda = " +
                                to_string(g.lambda));
  return build_triple(id, g);
}

namespace detail {

inline Mat<Rational> metric_matrix(const DiagonalMetric& g) {
  auto m = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = g.g(static_cast<int>(i));
  return m;
}

inline Mat<Rational> outer(const Vec<Rational>& a, const Vec<Rational>& b) {
  auto m = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = a[i] * b[j];
  return m;
}

inline Mat<Rational> transpose(const Mat<Rational>& a) {
  auto m = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = a[j][i];
  return m;
}

inline Mat<Rational> lin(const Mat<Rational>& a, const Rational& ca, const Mat<Rational>& b, const Rational& cb) {
  auto m = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = ca * a[i][j] + cb * b[i][j];
  return m;
}

inline CheckResult compare(const Mat<Rational>& got, const Mat<Rational>& want, const std::string& what) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (got[i][j] != want[i][j])
        return CheckResult::fail(what + " differs at (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                                 to_string(got[i][j]) + " vs " + to_string(want[i][j]));
  return CheckResult::pass();
}

inline CheckResult compare(const Vec<Rational>& got, const Vec<Rational>& want, const std::string& what) {
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i])
      return CheckResult::fail(what + " differs at " + std::to_string(i) + ": " + to_string(got[i]) + " vs " +
                               to_string(want[i]));
  return CheckResult::pass();
}

inline Rational dot(const Vec<Rational>& a, const Vec<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec<Rational> covec_times(const Vec<Rational>& eta, const Mat<Rational>& phi) {
  Vec<Rational> r(3, Rational(0));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) r[k] += eta[l] * phi[l][k];
  return r;
}

inline Vec<Rational> vscale(const Vec<Rational>& v, const Rational& c) {
  auto r = v;
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace detail

struct AxiomReport {
  CheckResult phi_squared, eta_xi, phi_xi, eta_phi, compatibility;
  bool ok() const { return phi_squared.ok && eta_xi.ok && phi_xi.ok && eta_phi.ok && compatibility.ok; }
  std::string failure() const {
    for (const auto* c : {&phi_squared, &eta_xi, &phi_xi, &eta_phi, &compatibility})
      if (!c->ok) return c->detail;
    return {};
  }
};

inline AxiomReport check_structure_axioms(const ContactTriple& tr, const DiagonalMetric& g) {
  using namespace detail;
  AxiomReport r;
  const bool contact = tr.kind == ContactKind::Contact;
  auto id = identity_matrix<Rational>(3);
  auto xe = outer(tr.xi, tr.eta);
  auto want_sq = contact ? lin(id, -1, xe, 1) : lin(id, 1, xe, -1);
  r.phi_squared = compare(matmul(tr.phi, tr.phi), want_sq, "phi^2");
  r.eta_xi = dot(tr.eta, tr.xi) == 1 ? CheckResult::pass() : CheckResult::fail("eta(xi) = " + to_string(dot(tr.eta, tr.xi)));
  r.phi_xi = compare(matvec(tr.phi, tr.xi), Vec<Rational>(3, Rational(0)), "phi(xi)");
  r.eta_phi = compare(covec_times(tr.eta, tr.phi), Vec<Rational>(3, Rational(0)), "eta o phi");
  auto gm = metric_matrix(g);
  auto lhs = matmul(matmul(transpose(tr.phi), gm), tr.phi);
  auto ee = outer(tr.eta, tr.eta);
  Rational eps_xi = dot(tr.xi, matvec(gm, tr.xi));
  if (eps_xi != tr.epsilon) {
    r.compatibility = CheckResult::fail("epsilon != g(xi, xi)");
  } else if (contact) {
    r.compatibility = compare(lhs, lin(gm, 1, ee, -tr.epsilon), "g(phi X, phi Y)");
  } else if (tr.epsilon != 1) {
    r.compatibility = CheckResult::fail("paracontact Reeb field is not spacelike");
  } else {
    r.compatibility = compare(lhs, lin(gm, -1, ee, 1), "g(phi X, phi Y)");
  }
  return r;
}

// (nabla_{X_i} phi) X_j as out(i, j, l), for any connection.
inline Tensor<Rational> phi_derivative(const ContactTriple& tr, const Tensor<Rational>& gamma) {
  Tensor<Rational> t(2);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) t(j, l) = tr.phi[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
  return covariant_derivative(gamma, t, Layout::UpperLast);
}

// Right-hand side g(X_i, X_j) xi - eps eta(X_j) X_i (eps = 1 for paracontact).
inline Tensor<Rational> sasakian_model(const ContactTriple& tr, const DiagonalMetric& g) {
  Tensor<Rational> m(3);
  Rational eps = tr.kind == ContactKind::Contact ? tr.epsilon : Rational(1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        Rational v = i == j ? Rational(g.g(i) * tr.xi[static_cast<std::size_t>(l)]) : Rational(0);
        if (l == i) v -= eps * tr.eta[static_cast<std::size_t>(j)];
        m(i, j, l) = v;
      }
  return m;
}

struct SasakianFit {
  std::optional<Rational> coefficient;
  std::string detail;  // first obstruction when there is no single constant
};

// The alpha (contact) or beta (paracontact) with nabla phi = coefficient * model.
inline SasakianFit sasakian_fit(const ContactTriple& tr, const DiagonalMetric& g) {
  auto d = phi_derivative(tr, koszul_connection(StructureConstants::su11(), g).gamma);
  auto m = sasakian_model(tr, g);
  SasakianFit fit;
  std::optional<Rational> c;
  for (std::size_t f = 0; f < d.e.size(); ++f) {
    auto idx = d.unflat(f);
    std::string at = "(nabla_X" + std::to_string(idx[0]) + " phi)X" + std::to_string(idx[1]) + " along X" + std::to_string(idx[2]);
    if (is_zero(m.e[f])) {
      if (!is_zero(d.e[f])) {
        fit.detail = at + " is " + to_string(d.e[f]) + " where the model vanishes";
        return fit;
      }
      continue;
    }
    Rational q = d.e[f] / m.e[f];
    if (c && *c != q) {
      fit.detail = at + " gives ratio " + to_string(q) + " against " + to_string(*c);
      return fit;
    }
    c = q;
  }
  fit.coefficient = c;
  return fit;
}

inline std::optional<Rational> sasakian_coefficient(const ContactTriple& tr, const DiagonalMetric& g) {
  return sasakian_fit(tr, g).coefficient;
}

// d eta(X_i, X_j) = -eta([X_i, X_j]) for left-invariant eta, against 2 g(X_i, phi X_j).
inline CheckResult check_contact_metric(const ContactTriple& tr, const DiagonalMetric& g) {
  auto alg = StructureConstants::su11();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational d(0);
      for (int k = 0; k < 3; ++k) d -= tr.eta[static_cast<std::size_t>(k)] * alg.c(i, j, k);
      Rational rhs = 2 * g.g(i) * tr.phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (d != rhs)
        return CheckResult::fail("d eta(X" + std::to_string(i) + ",X" + std::to_string(j) + ") = " + to_string(d) +
                                 " but 2 g(X" + std::to_string(i) + ", phi X" + std::to_string(j) + ") = " + to_string(rhs));
    }
  return CheckResult::pass();
}

// Parameter condition for being (para)contact metric, where one is tabulated.
inline std::optional<bool> contact_metric_condition(TripleId id, const DiagonalMetric& g) {
  switch (id) {
    case TripleId::Phi0: return abs(g.lambda) == g.mu * g.nu;
    case TripleId::Phi1: return g.mu == g.lambda * g.nu;
    case TripleId::Phi2: return g.nu == g.lambda * g.mu;
    case TripleId::PhiTilde1: return g.mu == -g.lambda * g.nu;
    case TripleId::PhiTilde2: return g.nu == -g.lambda * g.mu;
    case TripleId::Phi0Riemannian: return std::nullopt;
  }
  return std::nullopt;
}

// nabla~ phi = 0, nabla~ xi = 0, nabla~ eta = 0 for nabla~ = nabla - S.
inline CheckResult check_parallel(const ContactTriple& tr, const DiagonalMetric& g, const HomogeneousStructure& s) {
  auto conn = canonical_connection<Rational>(g, s);
  auto dphi = phi_derivative(tr, conn.gamma);
  if (!dphi.is_zero_tensor()) return CheckResult::fail("nabla~ phi != 0");
  Tensor<Rational> xi(1), eta(1);
  for (int i = 0; i < 3; ++i) {
    xi(i) = tr.xi[static_cast<std::size_t>(i)];
    eta(i) = tr.eta[static_cast<std::size_t>(i)];
  }
  if (!covariant_derivative(conn.gamma, xi, Layout::UpperLast).is_zero_tensor()) return CheckResult::fail("nabla~ xi != 0");
  if (!covariant_derivative(conn.gamma, eta, Layout::Covariant).is_zero_tensor()) return CheckResult::fail("nabla~ eta != 0");
  return CheckResult::pass();
}

struct TableFiveRow {
  MetricCase metric_case;
  std::string group;
  Family family;
  TripleId triple;
};

inline const std::vector<TableFiveRow>& table_five() {
  static const std::vector<TableFiveRow> rows{
      {MetricCase::Symmetric, "SU(1,1)xU(1)", Family::Slambda, TripleId::Phi0},
      {MetricCase::Symmetric, "SU(1,1)xR", Family::Smu, TripleId::PhiTilde1},
      {MetricCase::Timelike, "SU(1,1)xU(1)", Family::Slambda, TripleId::Phi0},
      {MetricCase::SpacelikeNu, "SU(1,1)xR", Family::Smu, TripleId::PhiTilde1},
  };
  return rows;
}

// Table rows plus their images under the mu <-> nu exchange (S_nu with phitilde2).
inline bool expected_parallel(MetricCase c, Family f, TripleId id) {
  if (f == Family::S0) return true;
  for (const auto& r : table_five())
    if (r.metric_case == c && r.family == f && r.triple == id) return true;
  return f == Family::Snu && id == TripleId::PhiTilde2 && (c == MetricCase::Symmetric || c == MetricCase::SpacelikeMu);
}

// ---- mixed metric 3-structures ----

enum class MixedFlavor { Lorentzian, Riemannian };

struct MixedFamily {
  MixedFlavor flavor;
  std::array<ContactTriple, 3> triples;
  std::array<int, 3> tau;  // +1 contact, -1 paracontact
};

inline MixedFamily mixed_family(MixedFlavor flavor, const DiagonalMetric& g) {
  MixedFamily m{flavor, {}, {}};
  if (flavor == MixedFlavor::Lorentzian) {
    if (sgn(g.lambda) >= 0) throw std::invalid_argument("Lorentzian mixed family needs lambda < 0");
    m.triples = {build_triple(TripleId::Phi0, g), build_triple(TripleId::PhiTilde1, g), build_triple(TripleId::PhiTilde2, g)};
  } else {
    if (sgn(g.lambda) <= 0) throw std::invalid_argument("Riemannian mixed family needs lambda > 0");
    m.triples = {build_triple(TripleId::Phi0Riemannian, g), build_triple(TripleId::Phi1, g), build_triple(TripleId::Phi2, g)};
  }
  for (std::size_t l = 0; l < 3; ++l) m.tau[l] = m.triples[l].kind == ContactKind::Contact ? 1 : -1;
  return m;
}

// U_l acting on the tangent space at o: the bracket with B_l in so(2,2),
// read back through tau. Equals ad(X_l) on su(1,1).
inline Endo<Rational> u_endomorphism(int l) {
  using namespace so22_basis;
  auto p = so22<Rational>();
  auto t = tau<Rational>();
  auto e = zero_matrix<Rational>(3, 3);
  for (int k = 0; k < 3; ++k) {
    auto img = matvec(t, p.bracket(U<Rational>(l), B<Rational>(k)));
    for (std::size_t a = 0; a < 3; ++a) e[a][static_cast<std::size_t>(k)] = img[a];
  }
  return e;
}

struct MixedReport {
  std::vector<std::pair<std::string, CheckResult>> relations;
  std::array<SasakianFit, 3> fits;
  bool three_sasakian = false;
  std::string not_sasakian_reason;
  bool ok() const {
    for (const auto& r : relations)
      if (!r.second.ok) return false;
    return true;
  }
  std::string failure() const {
    for (const auto& r : relations)
      if (!r.second.ok) return r.first + ": " + r.second.detail;
    return {};
  }
};

inline MixedReport check_mixed_3(const MixedFamily& fam, const DiagonalMetric& g) {
  using namespace detail;
  MixedReport rep;
  auto add = [&](std::string name, CheckResult c) { rep.relations.emplace_back(std::move(name), std::move(c)); };
  const Vec<Rational> zero(3, Rational(0));
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const auto& a = fam.triples[static_cast<std::size_t>(i)];
    const auto& b = fam.triples[static_cast<std::size_t>(j)];
    const auto& c = fam.triples[static_cast<std::size_t>(k)];
    const Rational ti = fam.tau[static_cast<std::size_t>(i)], tj = fam.tau[static_cast<std::size_t>(j)],
                   tk = fam.tau[static_cast<std::size_t>(k)];
    std::string p = "(" + std::to_string(i) + std::to_string(j) + std::to_string(k) + ") ";
    add(p + "eta_i(xi_j) = 0", dot(a.eta, b.xi) == 0 ? CheckResult::pass() : CheckResult::fail(to_string(dot(a.eta, b.xi))));
    add(p + "eta_j(xi_i) = 0", dot(b.eta, a.xi) == 0 ? CheckResult::pass() : CheckResult::fail(to_string(dot(b.eta, a.xi))));
    add(p + "eta_i phi_j = tau_k eta_k", compare(covec_times(a.eta, b.phi), vscale(c.eta, tk), "eta_i phi_j"));
    add(p + "eta_j phi_i = -tau_k eta_k", compare(covec_times(b.eta, a.phi), vscale(c.eta, -tk), "eta_j phi_i"));
    add(p + "phi_i xi_j = tau_j xi_k", compare(matvec(a.phi, b.xi), vscale(c.xi, tj), "phi_i xi_j"));
    add(p + "phi_j xi_i = -tau_i xi_k", compare(matvec(b.phi, a.xi), vscale(c.xi, -ti), "phi_j xi_i"));
    auto left = lin(matmul(a.phi, b.phi), 1, outer(a.xi, b.eta), -ti);
    auto right = lin(matmul(b.phi, a.phi), -1, outer(b.xi, a.eta), tj);
    auto mid = lin(c.phi, tk, c.phi, 0);
    add(p + "phi_i phi_j - tau_i eta_j (x) xi_i = tau_k phi_k", compare(left, mid, "phi_i phi_j - tau_i eta_j xi_i"));
    add(p + "-phi_j phi_i + tau_j eta_i (x) xi_j = tau_k phi_k", compare(right, mid, "-phi_j phi_i + tau_j eta_i xi_j"));
  }
  auto gm = metric_matrix(g);
  for (std::size_t l = 0; l < 3; ++l) {
    const auto& t = fam.triples[l];
    auto lhs = matmul(matmul(transpose(t.phi), gm), t.phi);
    auto want = lin(gm, fam.tau[l], outer(t.eta, t.eta), -Rational(fam.tau[l]) * t.epsilon);
    add("compatibility " + std::to_string(l), compare(lhs, want, "g(phi X, phi Y)"));
    auto ax = check_structure_axioms(t, g);
    if (!ax.ok()) add("axioms " + std::to_string(l), CheckResult::fail(ax.failure()));
  }
  rep.three_sasakian = true;
  for (std::size_t l = 0; l < 3; ++l) {
    rep.fits[l] = sasakian_fit(fam.triples[l], g);
    Rational want = fam.triples[l].kind == ContactKind::Contact ? Rational(1) : Rational(-1);
    if (!rep.fits[l].coefficient) {
      if (rep.three_sasakian) rep.not_sasakian_reason = triple_name(fam.triples[l].id) + ": " + rep.fits[l].detail;
      rep.three_sasakian = false;
    } else if (*rep.fits[l].coefficient != want) {
      if (rep.three_sasakian)
        rep.not_sasakian_reason = triple_name(fam.triples[l].id) + ": coefficient " + to_string(*rep.fits[l].coefficient) +
                                  " instead of " + to_string(want);
      rep.three_sasakian = false;
    }
  }
  return rep;
}

// phi_l against c * U_l as endomorphisms.
inline CheckResult check_half_u(const ContactTriple& t, int l, const Rational& c) {
  auto u = u_endomorphism(l);
  return detail::compare(t.phi, detail::lin(u, c, u, 0), triple_name(t.id) + " vs " + to_string(c) + " U" + std::to_string(l));
}

}  // namespace homstruct
