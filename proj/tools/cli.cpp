#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace homstruct::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Sampled: return "SAMPLED";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxDetails = 12;

Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "SAMPLED") return Status::Sampled;
  if (s == "FAIL") return Status::Fail;
  throw std::invalid_argument("unknown status " + s);
}

std::string str(const Rational& x) { return to_string(x); }

std::string str(const DiagonalMetric& g) { return g.to_string(); }

// Stable per-suite seed (FNV-1a over the id, mixed with the user seed and case).
std::uint64_t derive_seed(std::uint64_t seed, const std::string& id, int salt = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : id) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  h ^= seed + 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(salt) * 0x100000001b3ULL;
  h *= 1099511628211ULL;
  return h;
}

std::vector<DiagonalMetric> metrics(MetricCase c, int n, std::uint64_t seed, bool squares = false,
                                    LambdaSign sign = LambdaSign::Any) {
  SampleOptions opt;
  opt.perfect_squares = squares;
  opt.lambda_sign = sign;
  std::vector<DiagonalMetric> out;
  for (const auto& p : sample_params(c, seed, n, opt)) out.emplace_back(p);
  return out;
}

std::vector<Rational> t_values(Family f, const DiagonalMetric& g, std::uint64_t seed, std::size_t n) {
  RationalSampler rs(seed);
  std::vector<Rational> out;
  auto ex = excluded_t(f, g);
  while (out.size() < n) {
    Rational t = rs.nonzero();
    if (ex && *ex == t) continue;
    out.push_back(t);
  }
  return out;
}

class Rec {
 public:
  Rec(std::string id, std::string metric_case) {
    r_.id = std::move(id);
    r_.metric_case = std::move(metric_case);
  }

  template <class F>
  bool expect(bool ok, F&& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (r_.details.size() < kMaxDetails) r_.details.push_back(what());
    }
    return ok;
  }
  void fail(const std::string& what) {
    expect(false, [&] { return what; });
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  void metric(const DiagonalMetric& g) {
    for (const auto* x : {&g.lambda, &g.mu, &g.nu}) r_.params.push_back(str(*x));
  }
  void param(const Rational& x) { r_.params.push_back(str(x)); }
  void sampled(std::size_t n) { sampled_ += n; }
  bool failed() const { return failures_ > 0; }

  SuiteRecord finish(double seconds) {
    r_.status = failures_ ? Status::Fail : (sampled_ ? Status::Sampled : Status::Pass);
    for (auto& n : notes_) r_.details.push_back(std::move(n));
    if (sampled_) r_.details.push_back("sampled components: " + std::to_string(sampled_));
    r_.details.push_back("checks: " + std::to_string(checks_) + ", failures: " + std::to_string(failures_));
    r_.seconds = seconds;
    return r_;
  }

 private:
  SuiteRecord r_;
  std::vector<std::string> notes_;
  long checks_ = 0, failures_ = 0;
  std::size_t sampled_ = 0;
};

using Clock = std::chrono::steady_clock;

template <class F>
SuiteRecord timed(const std::string& id, const std::string& mc, F&& body) {
  auto start = Clock::now();
  Rec rec(id, mc);
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  return rec.finish(std::chrono::duration<double>(Clock::now() - start).count());
}

// ---------------------------------------------------------------------------
// suites

void lc_forms(Rec& rec, const Config& cfg, MetricCase c, std::uint64_t seed) {
  auto alg = StructureConstants::su11();
  RationalSampler rs(seed + 1);
  for (const auto& g : metrics(c, cfg.identity_sample_count, seed)) {
    rec.metric(g);
    auto conn = koszul_connection(alg, g);
    rec.expect(conn.gamma == reference::levi_civita_gamma(g), [&] { return "connection forms differ at " + str(g); });
    rec.expect(curvature(conn, alg) == reference::levi_civita_curvature(g), [&] { return "curvature differs at " + str(g); });
    rec.expect(torsion(conn, alg).is_zero_tensor(), [&] { return "torsion at " + str(g); });
    rec.expect(covariant_derivative(conn, g.tensor(), Layout::Covariant).is_zero_tensor(),
               [&] { return "metric not parallel at " + str(g); });
    if (c == MetricCase::Timelike) {
      Rational t = rs.any();
      auto cc = canonical_connection(g, catalog_family(Family::Slambda, g, t));
      rec.expect(cc.gamma == reference::slambda_gamma(g, t) && curvature(cc, alg) == reference::slambda_curvature(g, t),
                 [&] { return "S_lambda canonical forms differ at " + str(g) + " t=" + str(t); });
    }
    if (c == MetricCase::SpacelikeNu) {
      Rational t = rs.any();
      auto cc = canonical_connection(g, catalog_family(Family::Smu, g, t));
      rec.expect(cc.gamma == reference::smu_gamma(g, t) && curvature(cc, alg) == reference::smu_curvature(g, t),
                 [&] { return "S_mu canonical forms differ at " + str(g) + " t=" + str(t); });
    }
  }
}

void constant_curvature(Rec& rec) {
  auto alg = StructureConstants::su11();
  DiagonalMetric g(-1, 1, 1);
  rec.metric(g);
  auto r = curvature(koszul_connection(alg, g), alg);
  // R(X,Y)Z = -(g(Y,Z)X - g(X,Z)Y); r(i,j,k,l) = X_l-component of R(X_i,X_j)X_k.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Rational want(0);
          if (l == i && j == k) want -= g.g(j);
          if (l == j && i == k) want += g.g(i);
          rec.expect(r(i, j, k, l) == want, [&] {
            return "R(" + std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l) + ") = " + str(r(i, j, k, l)) +
                   ", expected " + str(want);
          });
        }
  auto r4 = lower_curvature(r, g);
  rec.expect(r4(0, 1, 1, 0) == Rational(1), [&] { return "R(X0,X1,X1,X0) = " + str(r4(0, 1, 1, 0)); });
}

std::string families_text(const std::vector<Family>& fs) {
  std::string s;
  for (auto f : fs) s += (s.empty() ? "" : ", ") + family_name(f);
  return s;
}

void table1(Rec& rec, const Config& cfg, MetricCase c, std::uint64_t seed, Json& tables) {
  std::size_t sampled = 0;
  for (const auto& g : metrics(c, cfg.samples_per_case, seed)) {
    rec.metric(g);
    auto sys = build_as_system(g);
    auto res = branch_solve(sys, linear_stage(sys));
    auto rep = match_components(res.components, g, 3, seed);
    rec.expect(rep.ok, [&] { return str(g) + ": " + rep.failure; });
    if (c == MetricCase::Symmetric) {
      for (const auto& [f, cov] : rep.family_covered) rec.expect(cov, [&] { return family_name(f) + " not covered at " + str(g); });
      sampled += rep.sampled_components;
    } else {
      rec.expect(rep.sampled_components == 0, [&] { return "uncertified component at " + str(g); });
      for (const auto& comp : res.components) rec.expect(comp.certified, [&] { return "uncertified component at " + str(g); });
    }
    for (const auto& row : table_one()) {
      if (row.metric_case != c) continue;
      Rational t = row.family == Family::S0 ? Rational(0) : t_values(row.family, g, seed + 3, 1)[0];
      auto h = holonomy_algebra(g, catalog_family(row.family, g, t));
      rec.expect(h.dimension + 3 == row.isometry_dim, [&] { return "isometry dimension of " + family_name(row.family) + " at " + str(g); });
    }
  }
  rec.sampled(sampled);
  Json row;
  row["metric_case"] = case_name(c);
  row["families"] = Json::array();
  for (const auto& r : table_one())
    if (r.metric_case == c) {
      Json fam;
      fam["family"] = family_name(r.family);
      fam["group"] = r.group;
      fam["isometry_dim"] = r.isometry_dim;
      row["families"].push_back(fam);
    }
  row["families_text"] = families_text(families_for(c));
  row["sampled_components"] = sampled;
  row["status"] = rec.failed() ? "FAIL" : (sampled ? "SAMPLED" : "PASS");
  tables["table1"].push_back(row);
}

void degenerations(Rec& rec, const Config& cfg, MetricCase c, std::uint64_t seed) {
  for (const auto& g : metrics(c, cfg.samples_per_case, seed)) {
    rec.metric(g);
    auto s0 = catalog_family(Family::S0, g, 0).coeffs;
    if (c == MetricCase::Timelike)
      rec.expect(catalog_family(Family::Slambda, g, g.lambda + 2 * g.mu).coeffs == s0, [&] { return "S_lambda(lambda+2mu) != S0 at " + str(g); });
    if (c == MetricCase::SpacelikeNu)
      rec.expect(catalog_family(Family::Smu, g, 2 * g.nu - g.mu).coeffs == s0, [&] { return "S_mu(2nu-mu) != S0 at " + str(g); });
    if (c == MetricCase::SpacelikeMu)
      rec.expect(catalog_family(Family::Snu, g, 2 * g.mu - g.nu).coeffs == s0, [&] { return "S_nu(2mu-nu) != S0 at " + str(g); });
  }
}

std::size_t expected_holonomy(Family f) {
  switch (f) {
    case Family::S0: return 0;
    case Family::Svol: return 3;
    default: return 1;
  }
}

void holonomy(Rec& rec, const Config& cfg, MetricCase c, std::uint64_t seed) {
  auto alg = StructureConstants::su11();
  for (const auto& g : metrics(c, cfg.samples_per_case, seed)) {
    rec.metric(g);
    for (auto f : families_for(c))
      for (const auto& t : t_values(f, g, seed + 5, 2)) {
        auto s = catalog_family(f, g, t);
        auto h = holonomy_algebra(g, s);
        rec.expect(h.dimension == expected_holonomy(f) && h.closed && h.skew, [&] {
          return family_name(f) + " at " + str(g) + " t=" + str(t) + ": dimension " + std::to_string(h.dimension);
        });
        if (f == Family::Svol) {
          auto r = curvature(canonical_connection(g, s), alg);
          Rational v = reference::svol_curvature_value(g, t);
          rec.expect(r(0, 1, 1, 0) == v && r(0, 2, 2, 0) == v && r(1, 2, 2, 1) == v,
                     [&] { return "S_vol curvature at " + str(g) + " t=" + str(t) + " is " + str(r(0, 1, 1, 0)) + ", expected " + str(v); });
        }
      }
  }
  if (c != MetricCase::Symmetric) return;
  // The displayed value -(mu-t)(mu+t)/mu on the unit metric.
  DiagonalMetric unit(-1, 1, 1);
  RationalSampler rs(seed + 13);
  for (int k = 0; k < cfg.samples_per_case; ++k) {
    Rational t = rs.any();
    if (t == unit.mu) continue;
    auto s = catalog_family(Family::Svol, unit, t);
    auto r = curvature(canonical_connection(unit, s), alg);
    Rational v = -(unit.mu - t) * (unit.mu + t) / unit.mu;
    rec.expect(r(0, 1, 1, 0) == v && r(0, 2, 2, 0) == v && r(1, 2, 2, 1) == v,
               [&] { return "S_vol curvature on (-1,1,1) at t=" + str(t) + " is " + str(r(0, 1, 1, 0)) + ", expected " + str(v); });
    rec.expect(holonomy_algebra(unit, s).dimension == 3, [&] { return "S_vol holonomy on (-1,1,1) at t=" + str(t); });
  }
  rec.note("S_vol curvature: -(mu-t)(mu+t)/mu on (-1,1,1), -(mu-t)(mu+t)/mu^2 for general mu");
}

std::string table_two_formula(Family f) {
  switch (f) {
    case Family::SnullMinus: return "t/mu";
    case Family::SnullPlus: return "-t/mu";
    default: return "(t-mu)/(2mu)";
  }
}

void transvection(Rec& rec, const Config& cfg, MetricCase c, std::uint64_t seed, Json& tables) {
  auto gs = metrics(c, cfg.samples_per_case, seed);
  for (const auto& g : gs) {
    rec.metric(g);
    for (auto f : families_for(c))
      for (const auto& t : t_values(f, g, seed + 7, 2)) {
        auto a = build_transvection_algebra<Rational>(g, catalog_family(f, g, t));
        auto j = check_jacobi(a.alg);
        auto r = check_reductive(a.alg);
        auto tr = check_torsion_reconstruction(a);
        rec.expect(j.ok, [&] { return family_name(f) + " Jacobi at " + str(g) + ": " + j.detail; });
        rec.expect(r.ok, [&] { return family_name(f) + " reductivity at " + str(g) + ": " + r.detail; });
        rec.expect(tr.ok, [&] { return family_name(f) + " torsion at " + str(g) + ": " + tr.detail; });
      }
    if (c == MetricCase::Timelike || c == MetricCase::SpacelikeNu) {
      Family f = c == MetricCase::Timelike ? Family::Slambda : Family::Smu;
      for (const auto& t : t_values(f, g, seed + 9, 2)) {
        auto h = c == MetricCase::Timelike ? slambda_hatted(g, t) : smu_hatted(g, t);
        for (const auto& rel : h.relations) rec.expect(rel.ok, [&] { return rel.text + " got " + rel.got + " at " + str(g); });
        rec.expect(h.hatted_table.ok, [&] { return "hatted table at " + str(g) + ": " + h.hatted_table.detail; });
        auto d = c == MetricCase::Timelike ? slambda_theorem_decomposition(g, t) : smu_theorem_decomposition(g, t);
        auto dr = check_decomposition(d, g);
        rec.expect(dr.ok(), [&] { return "theorem decomposition at " + str(g) + ": " + dr.reductive.detail; });
        auto m = match_decomposition(build_transvection_algebra<Rational>(g, catalog_family(f, g, t)), d, g);
        rec.expect(m.ok, [&] { return "decomposition match at " + str(g) + ": " + m.detail; });
      }
    }
  }
  if (c != MetricCase::Symmetric) return;
  for (const auto& row : table_two()) {
    bool ok = true;
    for (const auto& g : gs)
      for (const auto& t : t_values(row.family, g, seed + 11, 2)) {
        auto ta = build_transvection_algebra<K1>(g, coeffs_as<K1>(catalog_family(row.family, g, t)));
        Rational cv = row.c(g.mu, t);
        auto good = match_decomposition(ta, lemma_decomposition(row.lemma_case, cv), g);
        auto bad = match_decomposition(ta, lemma_decomposition(row.lemma_case, cv + 1), g);
        ok = rec.expect(good.ok, [&] { return "Table 2 " + family_name(row.family) + " at " + str(g) + ": " + good.detail; }) && ok;
        ok = rec.expect(!bad.ok, [&] { return "Table 2 " + family_name(row.family) + " matched a wrong c at " + str(g); }) && ok;
      }
    Json j;
    j["family"] = family_name(row.family);
    j["holonomy_dim"] = expected_holonomy(row.family);
    j["lemma_case"] = row.lemma_case;
    j["c"] = table_two_formula(row.family);
    j["status"] = ok ? "PASS" : "FAIL";
    tables["table2"].push_back(j);
  }
}

void lemma(Rec& rec) {
  struct P {
    Rational c0, c1, c2;
  };
  std::vector<P> ps{{2, 3, 4}, {-1, 5, 12}, {rat(1, 2), 8, 15}};
  std::vector<std::pair<Rational, Rational>> a{{5, 3}, {-5, 4}, {13, 12}}, b{{3, 5}, {4, -5}, {rat(5, 2), rat(13, 2)}};
  auto check = [&](const std::string& id, const LemmaParams& prm) {
    auto r = verify_decomposition_case(id, prm);
    rec.expect(r.ok(), [&] {
      std::string d = "case " + id + " at c=" + str(prm.c);
      for (const auto& rel : r.relations)
        if (!rel.ok) return d + ": " + rel.text + " got " + rel.got;
      return d + ": " + r.extra.detail;
    });
    return r;
  };
  for (Rational c : {rat(3, 7), rat(-2), rat(5)}) {
    rec.param(c);
    for (std::size_t i = 0; i < 3; ++i) {
      LemmaParams prm;
      prm.c = c;
      prm.c0 = ps[i].c0, prm.c1 = ps[i].c1, prm.c2 = ps[i].c2;
      check("1-reduce", prm);
      prm.c0 = a[i].first, prm.c1 = a[i].second;
      check("1a", prm);
      prm.c0 = b[i].first, prm.c1 = b[i].second;
      check("1b", prm);
    }
    LemmaParams prm;
    prm.c = c;
    for (const char* id : {"1c-plus", "1c-minus", "1c-iso", "2", "3", "i", "ii", "iii", "iv", "v"}) check(id, prm);
  }
  auto two = verify_decomposition_case("2", {});
  rec.expect(!two.printed_errata.empty() && !two.printed_errata[0].ok, [] { return "case 2 printed bracket unexpectedly holds"; });
  auto iv = verify_decomposition_case("iv", {});
  rec.expect(iv.decomposition && iv.decomposition->ok() && iv.decomposition->dim_h == 2 && iv.decomposition->h_generated == 0,
             [] { return "case iv obstruction not reproduced"; });
  rec.expect(invariant_graph_dimension() == 1, [] { return "invariant graphs are not multiples of the identity"; });
  rec.note("case iv: 2-dimensional h generates no holonomy, so no homogeneous structure");
}

void certificates(Rec& rec, const Config& cfg, std::uint64_t seed) {
  for (const auto& g : metrics(MetricCase::Symmetric, cfg.samples_per_case, seed)) {
    rec.metric(g);
    for (Rational t : {rat(1, 3), rat(-7, 2), rat(4)}) {
      auto c = null_sign_certificate(g, t);
      rec.expect(c.ok(), [&] { return "S_null sign flip at " + str(g) + ": " + c.failure(); });
    }
  }
  for (const auto& g : metrics(MetricCase::SpacelikeNu, cfg.samples_per_case, seed + 1)) {
    rec.metric(g);
    for (const auto& t : t_values(Family::Smu, g, seed + 2, 2)) {
      auto c = mu_nu_exchange_certificate(g, t);
      rec.expect(c.ok(), [&] { return "S_mu/S_nu exchange at " + str(g) + ": " + c.failure(); });
    }
  }
  for (Rational mu : {rat(1), rat(7, 3), rat(9, 4)})
    for (Rational t : {rat(2, 9), rat(-3), rat(5, 4)})
      for (Rational k : {rat(5, 3), rat(-5, 3), rat(13, 5), rat(3, 5), rat(-4, 5), rat(1), rat(-1)}) {
        auto c = case5_certificate(mu, t, k);
        rec.expect(c.ok(), [&] { return c.name + ": " + c.failure(); });
      }
  struct P {
    Rational r0, r1, s1;
  };
  int n8 = 0;
  for (Rational mu : {rat(1), rat(7, 3)})
    for (const P& p : {P{3, rat(2, 5), 4}, P{rat(-4, 7), rat(1, 5), rat(3, 7)}, P{5, -2, 12}, P{rat(8, 3), 7, rat(-5, 1)}}) {
      if (!exact_sqrt(p.r0 * p.r0 + p.s1 * p.s1)) continue;
      ++n8;
      auto c = case8a_certificate(mu, p.r0, p.r1, p.s1);
      rec.expect(c.ok(), [&] { return c.name + ": " + c.failure(); });
    }
  rec.expect(n8 > 0, [] { return "no case 8a sample with a rational rotation"; });
}

std::string condition_text(TripleId id) {
  switch (id) {
    case TripleId::Phi0: return "|lambda| = mu nu";
    case TripleId::Phi1: return "mu = lambda nu";
    case TripleId::Phi2: return "nu = lambda mu";
    case TripleId::PhiTilde1: return "mu = -lambda nu";
    case TripleId::PhiTilde2: return "nu = -lambda mu";
    default: return "";
  }
}

void contact(Rec& rec, const Config& cfg, std::uint64_t seed, Json& tables) {
  const int n = cfg.samples_per_case;
  // Axioms for every admissible triple.
  for (auto mc : all_cases())
    for (const auto& g : metrics(mc, n, seed, true)) {
      rec.metric(g);
      for (auto id : all_triples()) {
        if (!triple_admissible(id, g)) continue;
        auto r = check_structure_axioms(build_triple(id, g), g);
        rec.expect(r.ok(), [&] { return triple_name(id) + " at " + str(g) + ": " + r.failure(); });
      }
    }
  // Published coefficients.
  DiagonalMetric a(-4, 9, 9), b(-9, 4, 9), c(-9, 9, 4);
  rec.expect(sasakian_coefficient(make_triple(ContactKind::Contact, 0, a), a) == rat(2, 9), [] { return "alpha at (-4,9,9) is not 2/9"; });
  rec.expect(sasakian_coefficient(make_triple(ContactKind::Paracontact, 1, b), b) == rat(-2, 9),
             [] { return "beta at (-9,4,9) is not -2/9"; });
  rec.expect(sasakian_coefficient(make_triple(ContactKind::Paracontact, 2, c), c) == rat(-2, 9),
             [] { return "beta for phitilde2 at (-9,9,4) is not -2/9"; });
  for (const auto& g : metrics(MetricCase::Timelike, n, seed + 1, true)) {
    auto al = sasakian_coefficient(make_triple(ContactKind::Contact, 0, g), g);
    rec.expect(al && *al == *exact_sqrt(abs(g.lambda)) / g.mu, [&] { return "alpha = sqrt|lambda|/mu fails at " + str(g); });
  }
  for (const auto& g : metrics(MetricCase::SpacelikeNu, n, seed + 2, true)) {
    auto be = sasakian_coefficient(make_triple(ContactKind::Paracontact, 1, g), g);
    rec.expect(be && *be == -*exact_sqrt(g.mu) / g.nu, [&] { return "beta = -sqrt(mu)/nu fails at " + str(g); });
  }
  // Tables 3-4 in both directions.
  std::map<TripleId, bool> cond_ok;
  RationalSampler rs(seed + 3);
  for (int k = 0; k < n; ++k) {
    Rational p = rs.positive_maybe_square(true), q = rs.positive_maybe_square(true), r = rs.positive_maybe_square(true);
    std::vector<std::pair<TripleId, DiagonalMetric>> on{
        {TripleId::Phi0, DiagonalMetric(-p * q, p, q)},     {TripleId::Phi0, DiagonalMetric(p * q, p, q)},
        {TripleId::Phi1, DiagonalMetric(p, p * q, q)},      {TripleId::Phi2, DiagonalMetric(p, q, p * q)},
        {TripleId::PhiTilde1, DiagonalMetric(-p, p * q, q)}, {TripleId::PhiTilde2, DiagonalMetric(-p, q, p * q)}};
    for (const auto& [id, g] : on) {
      bool ok = contact_metric_condition(id, g).value_or(false) && check_contact_metric(build_triple(id, g), g).ok;
      cond_ok.emplace(id, true);
      cond_ok[id] = rec.expect(ok, [&, id = id, g = g] { return triple_name(id) + " not contact metric under its condition at " + str(g); }) &&
                    cond_ok[id];
    }
    for (auto lam : {Rational(-p), p}) {
      DiagonalMetric g(lam, q, r);
      for (auto id : all_triples()) {
        if (!triple_admissible(id, g)) continue;
        auto cond = contact_metric_condition(id, g);
        if (!cond) continue;
        bool ok = check_contact_metric(build_triple(id, g), g).ok == *cond;
        cond_ok[id] = rec.expect(ok, [&] { return triple_name(id) + " condition and check disagree at " + str(g); }) && cond_ok[id];
      }
    }
  }
  for (auto id : {TripleId::Phi0, TripleId::Phi1, TripleId::Phi2, TripleId::PhiTilde1, TripleId::PhiTilde2}) {
    Json j;
    j["triple"] = triple_name(id);
    j["condition"] = condition_text(id);
    j["status"] = cond_ok[id] ? "PASS" : "FAIL";
    tables[id == TripleId::PhiTilde1 || id == TripleId::PhiTilde2 ? "table4" : "table3"].push_back(j);
  }
  // Table 5: listed pairs parallel, every other non-trivial pairing not.
  long pairs = 0;
  for (auto mc : {MetricCase::Symmetric, MetricCase::Timelike, MetricCase::SpacelikeNu, MetricCase::SpacelikeMu})
    for (const auto& g : metrics(mc, n, seed + 4, true, LambdaSign::Negative))
      for (auto f : families_for(mc)) {
        if (f == Family::S0) continue;
        for (const auto& t : t_values(f, g, seed + 5, 2))
          for (auto id : all_triples()) {
            if (!triple_admissible(id, g) || id == TripleId::Phi0Riemannian) continue;
            ++pairs;
            bool par = check_parallel(build_triple(id, g), g, catalog_family(f, g, t)).ok;
            rec.expect(par == expected_parallel(mc, f, id), [&] {
              return case_name(mc) + " " + family_name(f) + " " + triple_name(id) + " at " + str(g) + (par ? " parallel" : " not parallel");
            });
          }
      }
  rec.note("Table 5 sweep: " + std::to_string(pairs) + " (structure, triple) pairs");
  for (const auto& row : table_five()) {
    bool ok = true;
    for (const auto& g : metrics(row.metric_case, n, seed + 6, true, LambdaSign::Negative)) {
      auto s = catalog_family(row.family, g, t_values(row.family, g, seed + 7, 1)[0]);
      ok = rec.expect(check_parallel(build_triple(row.triple, g), g, s).ok,
                      [&] { return "Table 5 row " + row.group + " fails at " + str(g); }) &&
           ok;
    }
    Json j;
    j["metric_case"] = case_name(row.metric_case);
    j["group"] = row.group;
    j["family"] = family_name(row.family);
    j["triple"] = triple_name(row.triple);
    j["status"] = ok ? "PASS" : "FAIL";
    tables["table5"].push_back(j);
  }
}

void mixed(Rec& rec, const Config& cfg, std::uint64_t seed) {
  const int n = cfg.samples_per_case;
  for (auto mc : {MetricCase::Generic, MetricCase::Timelike, MetricCase::Symmetric})
    for (const auto& g : metrics(mc, n, seed, true, LambdaSign::Negative)) {
      rec.metric(g);
      auto r = check_mixed_3(mixed_family(MixedFlavor::Lorentzian, g), g);
      rec.expect(r.ok(), [&] { return "Lorentzian family at " + str(g) + ": " + r.failure(); });
      bool unit = g.lambda == -1 && g.mu == 1 && g.nu == 1;
      rec.expect(r.three_sasakian == unit, [&] { return "Lorentzian 3-Sasakian flag wrong at " + str(g); });
    }
  DiagonalMetric unit(-1, 1, 1);
  auto u = check_mixed_3(mixed_family(MixedFlavor::Lorentzian, unit), unit);
  rec.expect(u.ok() && u.three_sasakian, [] { return "Lorentzian family not 3-Sasakian at (-1,1,1)"; });
  auto fam = mixed_family(MixedFlavor::Lorentzian, unit);
  rec.expect(check_half_u(fam.triples[0], 0, rat(-1, 2)).ok && check_half_u(fam.triples[1], 1, rat(1, 2)).ok &&
                 check_half_u(fam.triples[2], 2, rat(1, 2)).ok,
             [] { return "phi_l = 1/2 U_l (phi0 = -1/2 U0) fails at (-1,1,1)"; });
  rec.expect(!check_half_u(fam.triples[0], 0, rat(1, 2)).ok, [] { return "phi0 = +1/2 U0 unexpectedly holds"; });
  for (auto mc : {MetricCase::Generic, MetricCase::Timelike})
    for (const auto& g : metrics(mc, n, seed + 1, true, LambdaSign::Positive)) {
      rec.metric(g);
      auto r = check_mixed_3(mixed_family(MixedFlavor::Riemannian, g), g);
      rec.expect(r.ok(), [&] { return "Riemannian family at " + str(g) + ": " + r.failure(); });
      rec.expect(!r.three_sasakian, [&] { return "Riemannian family 3-Sasakian at " + str(g); });
    }
}

void group_case(Rec& rec, const Config& cfg, ActionCase k, const DiagonalMetric& g, const Rational& t, const std::vector<GroupPoint>& pts,
                std::array<int, 9>& printed_mismatch) {
  rec.metric(g);
  rec.param(t);
  auto r = verify_expansion(k, g, t, pts);
  rec.expect(r.ok() && r.points_checked >= cfg.points, [&] {
    return action_case_name(k) + " expansion at " + str(g) + " t=" + str(t) + ": checked " + std::to_string(r.points_checked) + ", " +
           r.first_mismatch;
  });
  auto p = verify_expansion(k, g, t, pts, FormulaVariant::Printed);
  for (std::size_t i = 0; i < 9; ++i) printed_mismatch[i] += p.mismatches[i];
  auto c = connection_from_action(k, g, t);
  rec.expect(c.ok(), [&] { return action_case_name(k) + " connection from the action differs from nabla - S at " + str(g); });
}

// Enough points that at least cfg.points are regular for the closed forms.
std::vector<GroupPoint> group_points(const Config& cfg, std::uint64_t seed) { return sample_points(seed, cfg.points + 8); }

void group_model(Rec& rec, const Config& cfg, ActionCase k, std::uint64_t seed) {
  auto pts = group_points(cfg, seed);
  MetricCase mc = k == ActionCase::Timelike ? MetricCase::Timelike : MetricCase::SpacelikeNu;
  Family f = k == ActionCase::Timelike ? Family::Slambda : Family::Smu;
  std::array<int, 9> printed{};
  for (const auto& g : metrics(mc, cfg.samples_per_case, seed, false, LambdaSign::Negative))
    group_case(rec, cfg, k, g, t_values(f, g, seed + 1, 1)[0], pts, printed);
  std::string bad;
  for (std::size_t i = 0; i < 9; ++i)
    if (printed[i]) bad += (bad.empty() ? "" : ", ") + coefficient_names(k)[i];
  rec.note("printed closed forms that fail: " + (bad.empty() ? std::string("none") : bad));
}

void group_common(Rec& rec, const Config& cfg, std::uint64_t seed) {
  auto pts = sample_points(seed, cfg.points);
  for (auto h : {HopfMap::Pi0, HopfMap::Pi1, HopfMap::PiPlus}) {
    auto r = hopf_check(h, pts);
    rec.expect(r.kernel.ok, [&] { return r.which + ": " + r.kernel.detail; });
    rec.expect(r.isometry.ok, [&] { return r.which + ": " + r.isometry.detail; });
  }
  auto d = double_cover_check(pts);
  rec.expect(d.ok() && d.pairs >= cfg.points, [&] {
    return "double cover: " + d.in_so012.detail + d.homomorphism.detail + d.kernel.detail + d.adjoint.detail;
  });
  for (const auto& g : metrics(MetricCase::Generic, 2, seed)) {
    rec.metric(g);
    rec.expect(connection_from_action(ActionCase::Trivial, g, 0).ok(), [&] { return "trivial action connection at " + str(g); });
  }
  rec.note("points: " + std::to_string(pts.size()) + ", double-cover pairs: " + std::to_string(d.pairs));
}

bool case_active(const Config& cfg, MetricCase c) {
  auto a = cfg.active_cases();
  return std::find(a.begin(), a.end(), c) != a.end();
}

}  // namespace

// ---------------------------------------------------------------------------
// config

std::vector<MetricCase> Config::active_cases() const {
  if (cases.empty()) return {all_cases().begin(), all_cases().end()};
  return cases;
}

std::optional<DiagonalMetric> Config::metric() const {
  if (!lambda && !mu && !nu) return std::nullopt;
  if (!lambda || !mu || !nu) throw ConfigError("--lambda, --mu and --nu must be given together");
  try {
    return DiagonalMetric(*lambda, *mu, *nu);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void Config::validate() const {
  if (samples_per_case < 1) throw ConfigError("--samples must be at least 1");
  if (identity_sample_count < 1) throw ConfigError("--identity-samples must be at least 1");
  if (identity_sample_count < 16 && !unsafe_low_samples) throw ConfigError("--identity-samples below 16 needs --unsafe-low-samples");
  if (points < 1) throw ConfigError("--points must be at least 1");
  if (points < 16 && !unsafe_low_samples) throw ConfigError("--points below 16 needs --unsafe-low-samples");
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (std::size_t j = i + 1; j < cases.size(); ++j)
      if (cases[i] == cases[j]) throw ConfigError("case given twice: " + case_name(cases[i]));
  bool explicit_metric = lambda || mu || nu;
  if (explicit_metric && !cases.empty()) throw ConfigError("--case conflicts with an explicit metric");
  if (explicit_metric) (void)metric();
  if (command == "solve" && !explicit_metric) throw ConfigError("solve needs --lambda, --mu and --nu");
  if (command == "verify" && explicit_metric) throw ConfigError("verify does not take an explicit metric; use solve or group");
  for (const auto& w : which)
    if (w != "table1" && w != "table2" && w != "table3" && w != "table4" && w != "table5") throw ConfigError("unknown table " + w);
}

Config default_config() {
  Config cfg;
  if (const char* s = std::getenv("HOMSTRUCT_SEED")) {
    try {
      std::size_t pos = 0;
      cfg.seed = std::stoull(s, &pos);
      if (pos != std::string(s).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(std::string("HOMSTRUCT_SEED is not an unsigned integer: ") + s);
    }
  }
  return cfg;
}

Config parse_config(int argc, const char* const* argv) {
  Config cfg = default_config();
  CLI::App app{"Exact verification of left-invariant homogeneous structures on H^3_1"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML/INI file with option values; flags override it");

  std::vector<std::string> cases;
  std::string lam, mu, nu, t, format = "json";
  std::vector<std::string> which;
  std::optional<std::uint64_t> seed;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed (default: HOMSTRUCT_SEED or 42)");
    sub->add_option("--out", cfg.output_path, "output file (default: stdout)");
    sub->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--samples", cfg.samples_per_case, "parameter samples per metric case");
    sub->add_option("--identity-samples", cfg.identity_sample_count, "samples for closed-form identities");
    sub->add_flag("--unsafe-low-samples", cfg.unsafe_low_samples, "allow fewer than 16 identity samples or points");
  };
  auto metric_opts = [&](CLI::App* sub) {
    sub->add_option("--lambda", lam, "metric coefficient lambda (p/q)");
    sub->add_option("--mu", mu, "metric coefficient mu (p/q)");
    sub->add_option("--nu", nu, "metric coefficient nu (p/q)");
    sub->add_option("--t", t, "family parameter t (p/q)");
  };

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  common(verify);
  verify->add_option("--case", cases, "metric case(s): generic, timelike, spacelike_nu, spacelike_mu, symmetric")->delimiter(',');
  verify->add_flag("--perfect-squares", cfg.perfect_square_only, "sample perfect squares only");

  auto* solve = app.add_subcommand("solve", "solve the Ambrose-Singer system at one metric");
  common(solve);
  metric_opts(solve);

  auto* tables = app.add_subcommand("tables", "reproduce selected tables");
  common(tables);
  tables->add_option("--which", which, "table1..table5")->delimiter(',');

  auto* group = app.add_subcommand("group", "group-model checks");
  common(group);
  metric_opts(group);
  group->add_option("--points", cfg.points, "sample points on SU(1,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (seed) cfg.seed = *seed;
  cfg.format = format == "markdown" ? Format::Markdown : Format::Json;
  for (const auto& c : cases) {
    auto mc = parse_case(c);
    if (!mc) throw ConfigError("unknown metric case: " + c);
    cfg.cases.push_back(*mc);
  }
  auto rat_opt = [](const std::string& s, const char* name) -> std::optional<Rational> {
    if (s.empty()) return std::nullopt;
    auto r = parse_rational(s);
    if (!r) throw ConfigError(std::string("malformed rational for ") + name + ": " + s);
    return r;
  };
  cfg.lambda = rat_opt(lam, "--lambda");
  cfg.mu = rat_opt(mu, "--mu");
  cfg.nu = rat_opt(nu, "--nu");
  cfg.t = rat_opt(t, "--t");
  cfg.which = which;
  cfg.validate();
  return cfg;
}

Json config_to_json(const Config& cfg) {
  Json j;
  j["command"] = cfg.command;
  if (cfg.command != "solve") {
    j["cases"] = Json::array();
    for (auto c : cfg.active_cases()) j["cases"].push_back(case_name(c));
  }
  j["samples_per_case"] = cfg.samples_per_case;
  j["identity_sample_count"] = cfg.identity_sample_count;
  j["seed"] = cfg.seed;
  j["perfect_square_only"] = cfg.perfect_square_only;
  j["unsafe_low_samples"] = cfg.unsafe_low_samples;
  if (cfg.command == "solve" || cfg.command == "group") {
    if (auto g = cfg.metric()) j["metric"] = Json::array({str(g->lambda), str(g->mu), str(g->nu)});
    if (cfg.t) j["t"] = str(*cfg.t);
  }
  if (cfg.command == "group") j["points"] = cfg.points;
  if (cfg.command == "tables") j["which"] = cfg.which;
  j["format"] = cfg.format == Format::Json ? "json" : "markdown";
  return j;
}

// ---------------------------------------------------------------------------
// suites

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"certificates", "constant_curvature", "contact",  "degenerations", "group_model", "holonomy",
                                            "lc_forms",     "lemma",              "mixed",    "table1",        "transvection"};
  return ids;
}

std::vector<SuiteRecord> run_suite_id(const std::string& id, const Config& cfg, Json& tables) {
  std::vector<SuiteRecord> out;
  auto per_case = [&](auto&& body, std::initializer_list<MetricCase> only = {}) {
    for (auto c : cfg.active_cases()) {
      if (only.size() && std::find(only.begin(), only.end(), c) == only.end()) continue;
      auto seed = derive_seed(cfg.seed, id, static_cast<int>(c) + 1);
      out.push_back(timed(id, case_name(c), [&](Rec& rec) { body(rec, c, seed); }));
    }
  };
  auto once = [&](auto&& body) {
    auto seed = derive_seed(cfg.seed, id);
    out.push_back(timed(id, "all", [&](Rec& rec) { body(rec, seed); }));
  };
  if (id == "lc_forms") {
    per_case([&](Rec& r, MetricCase c, std::uint64_t s) { lc_forms(r, cfg, c, s); });
  } else if (id == "constant_curvature") {
    once([&](Rec& r, std::uint64_t) { constant_curvature(r); });
  } else if (id == "table1") {
    per_case([&](Rec& r, MetricCase c, std::uint64_t s) { table1(r, cfg, c, s, tables); });
  } else if (id == "degenerations") {
    per_case([&](Rec& r, MetricCase c, std::uint64_t s) { degenerations(r, cfg, c, s); },
             {MetricCase::Timelike, MetricCase::SpacelikeNu, MetricCase::SpacelikeMu});
  } else if (id == "holonomy") {
    per_case([&](Rec& r, MetricCase c, std::uint64_t s) { holonomy(r, cfg, c, s); });
  } else if (id == "transvection") {
    per_case([&](Rec& r, MetricCase c, std::uint64_t s) { transvection(r, cfg, c, s, tables); });
  } else if (id == "lemma") {
    once([&](Rec& r, std::uint64_t) { lemma(r); });
  } else if (id == "certificates") {
    once([&](Rec& r, std::uint64_t s) { certificates(r, cfg, s); });
  } else if (id == "contact") {
    once([&](Rec& r, std::uint64_t s) { contact(r, cfg, s, tables); });
  } else if (id == "mixed") {
    once([&](Rec& r, std::uint64_t s) { mixed(r, cfg, s); });
  } else if (id == "group_model") {
    for (auto k : {ActionCase::Timelike, ActionCase::SpacelikeNu}) {
      MetricCase c = k == ActionCase::Timelike ? MetricCase::Timelike : MetricCase::SpacelikeNu;
      if (!case_active(cfg, c)) continue;
      auto seed = derive_seed(cfg.seed, id, static_cast<int>(c) + 1);
      out.push_back(timed(id, case_name(c), [&](Rec& rec) { group_model(rec, cfg, k, seed); }));
    }
    once([&](Rec& r, std::uint64_t s) { group_common(r, cfg, s); });
  } else {
    throw std::invalid_argument("unknown suite " + id);
  }
  return out;
}

namespace {

const std::vector<std::string>& corrections() {
  static const std::vector<std::string> c{
      "lemma case 2: bracket [w-, v+] = +2 v2 (printed -2 v2)",
      "lemma cases 1a/1b: generator normalised by sqrt|c0^2 - c1^2|",
      "S_mu transvection algebra: [U, X2] = 2 X0 (printed 2 X1)",
      "symmetric canonical curvature: two components carry corrected signs",
      "S_vol canonical curvature value -(mu-t)(mu+t)/mu^2 for general mu (the /mu form holds at mu = 1)",
      "Table 2 null rows: S_null^+ has c = -t/mu, S_null^- has c = +t/mu",
      "mixed 3-structure: phi0 = -1/2 U0",
      "timelike Killing expansion: g_t denominator (lambda-t+mu)|z2|^2 + mu|z1|^2",
      "timelike Killing expansion: h_2 overall sign",
      "spacelike Killing expansion: g_t has z2^2 in place of z2",
      "spacelike Killing expansion: g_2 numerator z1^2 - z2^2 - conj(z1)^2 + conj(z2)^2",
      "spacelike Killing expansion: h_0 cross term conj(z1) z2 in place of conj(z2) z1",
  };
  return c;
}

Report assemble(const Config& cfg, std::vector<SuiteRecord> recs, Json tables) {
  Report r;
  r.config = config_to_json(cfg);
  std::stable_sort(recs.begin(), recs.end(), [](const SuiteRecord& a, const SuiteRecord& b) { return a.id < b.id; });
  r.suites = std::move(recs);
  for (const char* k : {"table1", "table2", "table3", "table4", "table5"})
    if (tables.contains(k)) r.tables[k] = tables[k];
  for (auto& [k, v] : tables.items())
    if (!r.tables.contains(k)) r.tables[k] = v;
  r.corrections = corrections();
  return r;
}

}  // namespace

Report run_suite(const Config& cfg) {
  cfg.validate();
  Json tables = Json::object();
  std::vector<SuiteRecord> recs;
  for (const auto& id : suite_ids()) {
    auto part = run_suite_id(id, cfg, tables);
    recs.insert(recs.end(), part.begin(), part.end());
  }
  return assemble(cfg, std::move(recs), std::move(tables));
}

Report run_tables(const Config& cfg) {
  cfg.validate();
  std::vector<std::string> which = cfg.which;
  if (which.empty()) which = {"table1", "table2", "table3", "table4", "table5"};
  auto wants = [&](const char* t) { return std::find(which.begin(), which.end(), t) != which.end(); };
  Json tables = Json::object();
  std::vector<SuiteRecord> recs;
  auto add = [&](const std::vector<SuiteRecord>& p) { recs.insert(recs.end(), p.begin(), p.end()); };
  if (wants("table1")) add(run_suite_id("table1", cfg, tables));
  if (wants("table2")) {
    Config c = cfg;
    c.cases = {MetricCase::Symmetric};
    add(run_suite_id("transvection", c, tables));
  }
  if (wants("table3") || wants("table4") || wants("table5")) add(run_suite_id("contact", cfg, tables));
  Json kept = Json::object();
  for (const auto& w : which)
    if (tables.contains(w)) kept[w] = tables[w];
  return assemble(cfg, std::move(recs), std::move(kept));
}

Report run_solve(const Config& cfg) {
  cfg.validate();
  auto g = *cfg.metric();
  Json tables = Json::object();
  auto rec = timed("solve", "", [&](Rec& rec) {
    rec.metric(g);
    auto mc = g.metric_case();
    auto sys = build_as_system(g);
    auto res = branch_solve(sys, linear_stage(sys));
    auto rep = match_components(res.components, g, 3, cfg.seed);
    rec.expect(rep.ok, [&] { return rep.failure; });
    rec.sampled(rep.sampled_components);
    Json comps = Json::array();
    for (const auto& cm : rep.components) {
      Json j;
      j["base"] = describe(cm.component.affine.base);
      j["directions"] = Json::array();
      for (const auto& d : cm.component.affine.dirs) j["directions"].push_back(describe(d));
      j["certified"] = cm.component.certified;
      j["residual"] = Json::array();
      for (const auto& p : cm.component.residual) j["residual"].push_back(p.to_string());
      j["families"] = Json::array();
      for (auto f : cm.equal_families) j["families"].push_back(family_name(f));
      j["matched"] = cm.ok;
      comps.push_back(j);
    }
    tables["solve"]["metric_case"] = mc ? case_name(*mc) : "degenerate";
    tables["solve"]["components"] = comps;
    if (cfg.t && mc) {
      Json fams = Json::array();
      for (auto f : families_for(*mc)) {
        auto ex = excluded_t(f, g);
        Json j;
        j["family"] = family_name(f);
        auto s = catalog_family(f, g, f == Family::S0 ? Rational(0) : *cfg.t);
        j["coefficients"] = describe(s.vec());
        j["holonomy_dim"] = holonomy_algebra(g, s).dimension;
        j["excluded_t"] = ex ? str(*ex) : "none";
        fams.push_back(j);
      }
      tables["solve"]["families"] = fams;
    }
  });
  rec.metric_case = g.metric_case() ? case_name(*g.metric_case()) : "degenerate";
  return assemble(cfg, {rec}, tables);
}

Report run_group(const Config& cfg) {
  cfg.validate();
  Json tables = Json::object();
  if (auto g = cfg.metric()) {
    auto mc = g->metric_case();
    ActionCase k;
    if (mc == MetricCase::Timelike)
      k = ActionCase::Timelike;
    else if (mc == MetricCase::SpacelikeNu)
      k = ActionCase::SpacelikeNu;
    else
      throw ConfigError("group: the metric must satisfy -lambda != mu = nu or -lambda = nu != mu");
    Family f = k == ActionCase::Timelike ? Family::Slambda : Family::Smu;
    Rational t = cfg.t ? *cfg.t : t_values(f, *g, cfg.seed, 1)[0];
    if (auto ex = excluded_t(f, *g); ex && *ex == t) throw ConfigError("group: t is the excluded value " + str(*ex));
    auto pts = group_points(cfg, derive_seed(cfg.seed, "group_model"));
    std::vector<SuiteRecord> recs;
    recs.push_back(timed("group_model", case_name(*mc), [&](Rec& rec) {
      std::array<int, 9> printed{};
      group_case(rec, cfg, k, *g, t, pts, printed);
      std::string bad;
      for (std::size_t i = 0; i < 9; ++i)
        if (printed[i]) bad += (bad.empty() ? "" : ", ") + coefficient_names(k)[i];
      rec.note("printed closed forms that fail: " + (bad.empty() ? std::string("none") : bad));
    }));
    recs.push_back(timed("group_model", "all", [&](Rec& rec) { group_common(rec, cfg, derive_seed(cfg.seed, "group_model")); }));
    return assemble(cfg, std::move(recs), tables);
  }
  return assemble(cfg, run_suite_id("group_model", cfg, tables), tables);
}

Report run_command(const Config& cfg) {
  if (cfg.command == "solve") return run_solve(cfg);
  if (cfg.command == "tables") return run_tables(cfg);
  if (cfg.command == "group") return run_group(cfg);
  return run_suite(cfg);
}

bool Report::ok() const {
  for (const auto& s : suites)
    if (s.status == Status::Fail) return false;
  return !suites.empty();
}

std::vector<std::string> Report::sampled_components() const {
  std::vector<std::string> out;
  for (const auto& s : suites)
    if (s.status == Status::Sampled) out.push_back(s.id + "/" + s.metric_case);
  return out;
}

std::vector<std::string> Report::certified_components() const {
  std::vector<std::string> out;
  for (const auto& s : suites)
    if (s.status == Status::Pass) out.push_back(s.id + "/" + s.metric_case);
  return out;
}

// ---------------------------------------------------------------------------
// emission

Json to_json(const Report& r) {
  Json j;
  j["version"] = 1;
  j["config"] = r.config;
  j["status"] = r.ok() ? "PASS" : "FAIL";
  j["suites"] = Json::array();
  for (const auto& s : r.suites) {
    Json k;
    k["id"] = s.id;
    k["case"] = s.metric_case;
    k["params"] = s.params;
    k["status"] = status_name(s.status);
    k["details"] = s.details;
    j["suites"].push_back(k);
  }
  j["certified"] = r.certified_components();
  j["sampled"] = r.sampled_components();
  j["tables"] = r.tables;
  j["corrections"] = r.corrections;
  return j;
}

Report report_from_json(const Json& j) {
  if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported report version");
  Report r;
  r.config = j.at("config");
  for (const auto& k : j.at("suites")) {
    SuiteRecord s;
    s.id = k.at("id").get<std::string>();
    s.metric_case = k.at("case").get<std::string>();
    s.params = k.at("params").get<std::vector<std::string>>();
    s.status = parse_status(k.at("status").get<std::string>());
    s.details = k.at("details").get<std::vector<std::string>>();
    r.suites.push_back(std::move(s));
  }
  r.tables = j.at("tables");
  r.corrections = j.at("corrections").get<std::vector<std::string>>();
  return r;
}

namespace {

std::string badge(const std::string& s) { return "**" + s + "**"; }

std::string cell(const Json& j, const char* key) {
  if (!j.contains(key)) return "";
  const auto& v = j.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream o;
  o << "# homstruct report\n\n";
  o << "Overall: " << badge(r.ok() ? "PASS" : "FAIL") << "  \n";
  o << "Seed: " << r.config.value("seed", std::uint64_t{0}) << ", command: " << r.config.value("command", std::string()) << "\n\n";
  o << "## Suites\n\n| suite | case | status | details |\n|---|---|---|---|\n";
  for (const auto& s : r.suites) {
    std::string d;
    for (const auto& x : s.details) d += (d.empty() ? "" : "; ") + x;
    o << "| " << s.id << " | " << s.metric_case << " | " << badge(status_name(s.status)) << " | " << d << " |\n";
  }
  auto section = [&](const char* key, const char* title, std::vector<std::pair<const char*, const char*>> cols) {
    if (!r.tables.contains(key)) return;
    o << "\n## " << title << "\n\n|";
    for (const auto& c : cols) o << " " << c.second << " |";
    o << " status |\n|";
    for (std::size_t i = 0; i <= cols.size(); ++i) o << "---|";
    o << "\n";
    for (const auto& row : r.tables.at(key)) {
      o << "|";
      for (const auto& c : cols) o << " " << cell(row, c.first) << " |";
      o << " " << badge(cell(row, "status")) << " |\n";
    }
  };
  section("table1", "Table 1: coset representations by metric case", {{"metric_case", "metric case"}, {"families_text", "structures"}});
  section("table2", "Table 2: structures on the symmetric metric",
          {{"family", "structure"}, {"holonomy_dim", "holonomy dim"}, {"lemma_case", "lemma case"}, {"c", "c"}});
  section("table3", "Table 3: contact metric conditions", {{"triple", "triple"}, {"condition", "condition"}});
  section("table4", "Table 4: paracontact metric conditions", {{"triple", "triple"}, {"condition", "condition"}});
  section("table5", "Table 5: parallel (para)contact structures",
          {{"metric_case", "metric case"}, {"group", "group"}, {"family", "structure"}, {"triple", "triple"}});
  if (r.tables.contains("solve")) o << "\n## Solve\n\n```json\n" << r.tables.at("solve").dump(2) << "\n```\n";
  o << "\n## Corrections applied\n\n";
  for (const auto& c : r.corrections) o << "- " << c << "\n";
  return o.str();
}

std::string emit(const Report& r, Format f) { return f == Format::Json ? to_json(r).dump(2) + "\n" : to_markdown(r); }

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    cfg = parse_config(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Report rep;
  try {
    rep = run_command(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string text = emit(rep, cfg.format);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return 3;
    }
  }
  for (const auto& s : rep.suites)
    err << status_name(s.status) << " " << s.id << " [" << s.metric_case << "] " << std::to_string(s.seconds).substr(0, 5) << " s\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace homstruct::cli
