#pragma once

// The Ambrose-Singer system for constant-coefficient S, its exact
// branch-and-solve, and matching of the solution set against the catalog.

#include "poly.hpp"
#include "reductive.hpp"
#include "sampling.hpp"
#include "structure.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace homstruct {

struct ASSystem {
  DiagonalMetric metric;
  Mat<Rational> linear_a;  // 9 columns
  Vec<Rational> linear_b;
  std::vector<MultiPoly> quadratic;  // in coeff_names()
};

inline Tensor<MultiPoly> to_poly_tensor(const Tensor<Rational>& t) {
  Tensor<MultiPoly> p(t.rank);
  for (std::size_t f = 0; f < t.e.size(); ++f)
    if (!is_zero(t.e[f])) p.e[f] = MultiPoly::constant(coeff_names(), t.e[f]);
  return p;
}

inline Coeffs<MultiPoly> coeff_vars() {
  Coeffs<MultiPoly> x;
  for (std::size_t i = 0; i < kNumCoeffs; ++i) x[i] = MultiPoly::var(coeff_names(), i);
  return x;
}

inline ASSystem build_as_system(const DiagonalMetric& g) {
  ASSystem sys;
  sys.metric = g;
  const auto alg = StructureConstants::su11();
  auto lc = koszul_connection(alg, g);
  auto r = curvature(lc, alg);
  // nabla~ = nabla - S with unknown S.
  auto gamma = to_poly_tensor(lc.gamma);
  auto s12 = structure_tensor12(coeff_vars(), g);
  for (std::size_t f = 0; f < gamma.e.size(); ++f) gamma.e[f] = gamma.e[f] - s12.e[f];

  auto dr = covariant_derivative(gamma, to_poly_tensor(r), Layout::UpperLast);
  for (const auto& p : dr.e) {
    if (p.is_zero()) continue;
    if (p.degree() > 1) throw std::logic_error("build_as_system: nabla~R not affine");
    sys.linear_a.push_back(p.linear_coeffs());
    sys.linear_b.push_back(-p.constant_term());
  }
  auto ds = covariant_derivative(gamma, structure_tensor03(coeff_vars()), Layout::Covariant);
  std::set<std::string> seen;
  for (auto p : ds.e) {
    if (p.is_zero()) continue;
    detail::make_monic(p);
    if (seen.insert(p.to_string()).second) sys.quadratic.push_back(p);
  }
  return sys;
}

// Every equation evaluated at x; all zero iff x solves the system.
inline bool satisfies(const ASSystem& sys, const Vec<Rational>& x) {
  for (std::size_t i = 0; i < sys.linear_a.size(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < kNumCoeffs; ++j) s += sys.linear_a[i][j] * x[j];
    if (s != sys.linear_b[i]) return false;
  }
  for (const auto& q : sys.quadratic)
    if (!is_zero(q.eval(x))) return false;
  return true;
}

// Independent check straight from the tensors: nabla~g, nabla~R, nabla~S.
inline bool ambrose_singer_holds(const DiagonalMetric& g, const HomogeneousStructure& s) {
  const auto alg = StructureConstants::su11();
  auto lc = koszul_connection(alg, g);
  auto can = canonical_connection(g, s);
  if (!covariant_derivative(can, g.tensor(), Layout::Covariant).is_zero_tensor()) return false;
  if (!covariant_derivative(can, curvature(lc, alg), Layout::UpperLast).is_zero_tensor()) return false;
  return covariant_derivative(can, structure_tensor03(s.coeffs), Layout::Covariant).is_zero_tensor();
}

inline AffineSubspace<Rational> linear_stage(const ASSystem& sys) {
  auto s = rref_solve(sys.linear_a, sys.linear_b, std::size_t{kNumCoeffs});
  if (!s) throw std::logic_error("linear_stage: infeasible (S0 always solves the system)");
  return *s;
}

// ---------------------------------------------------------------------------
// Branch solver

inline std::vector<std::string> param_names(std::size_t d) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < d; ++i) n.push_back("u" + std::to_string(i));
  return n;
}

// x = base + sum u_i dirs_i, as polynomials in u.
inline std::vector<MultiPoly> param_images(const AffineSubspace<Rational>& a) {
  auto names = param_names(a.dim());
  std::vector<MultiPoly> imgs;
  for (std::size_t c = 0; c < a.n; ++c) {
    Vec<Rational> lin(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) lin[i] = a.dirs[i][c];
    imgs.push_back(MultiPoly::affine(names, lin, a.base[c]));
  }
  return imgs;
}

// Row-reduce a polynomial list over the monomial basis (quadratic monomials
// first, then linear, then constant). Returns a basis of its linear span.
inline std::vector<MultiPoly> reduce_span(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& names) {
  std::map<MultiPoly::Exponents, std::size_t, std::function<bool(const MultiPoly::Exponents&, const MultiPoly::Exponents&)>>
      index([](const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da > db;
        return a > b;
      });
  for (const auto& e : eqs)
    for (const auto& [ex, c] : e.terms()) index.emplace(ex, 0);
  std::vector<MultiPoly::Exponents> monos;
  for (auto& [ex, i] : index) {
    i = monos.size();
    monos.push_back(ex);
  }
  Mat<Rational> m;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    Vec<Rational> row(monos.size(), Rational(0));
    for (const auto& [ex, c] : e.terms()) row[index.at(ex)] = c;
    m.push_back(std::move(row));
  }
  rref(m);
  std::vector<MultiPoly> out;
  for (const auto& row : m) {
    MultiPoly p(names);
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], row[i]);
    out.push_back(std::move(p));
  }
  return out;
}

struct SolutionComponent {
  AffineSubspace<Rational> affine;  // canonical
  std::vector<MultiPoly> residual;  // in u-coordinates of `affine`, reduced
  bool certified = true;            // no residual equations remain
  std::vector<std::string> branch_trace;

  std::string key() const {
    std::string k;
    for (const auto& x : affine.base) k += to_string(x) + ",";
    k += "|";
    for (const auto& d : affine.dirs)
      for (const auto& x : d) k += to_string(x) + ",";
    k += "|";
    for (const auto& r : residual) k += r.to_string() + ";";
    return k;
  }
};

struct BranchResult {
  std::vector<SolutionComponent> components;
  std::size_t nodes = 0;
  std::size_t infeasible_leaves = 0;
};

class BranchSolver {
 public:
  static constexpr int kMaxDepth = 32;

  BranchResult solve(const ASSystem& sys, const AffineSubspace<Rational>& sub) {
    result_ = {};
    auto eqs = compose_all(sys.quadratic, sub);
    recurse(sub, eqs, {}, 0);
    finalize();
    return result_;
  }

 private:
  static std::vector<MultiPoly> compose_all(const std::vector<MultiPoly>& eqs, const AffineSubspace<Rational>& a) {
    auto imgs = param_images(a);
    std::vector<MultiPoly> out;
    for (const auto& e : eqs) {
      if (imgs.empty()) {
        out.push_back(MultiPoly::constant({}, e.eval(a.base)));
      } else {
        out.push_back(e.compose(imgs));
      }
    }
    return out;
  }

  // Restrict (param, eqs) to the affine solution set of `lin` (in u-space).
  static void restrict_to(AffineSubspace<Rational>& param, std::vector<MultiPoly>& eqs,
                          const AffineSubspace<Rational>& lin) {
    AffineSubspace<Rational> next;
    next.n = param.n;
    next.base = param.point(lin.base);
    for (const auto& d : lin.dirs) {
      Vec<Rational> v(param.n, Rational(0));
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t c = 0; c < param.n; ++c) v[c] += d[i] * param.dirs[i][c];
      next.dirs.push_back(v);
    }
    auto imgs = param_images(lin);
    std::vector<MultiPoly> out;
    for (const auto& e : eqs) {
      if (imgs.empty() || lin.dim() == 0) {
        out.push_back(MultiPoly::constant(param_names(0), e.eval(lin.base)));
      } else {
        out.push_back(e.compose(imgs));
      }
    }
    param = std::move(next);
    eqs = std::move(out);
  }

  void recurse(AffineSubspace<Rational> param, std::vector<MultiPoly> eqs, std::vector<std::string> trace, int depth) {
    ++result_.nodes;
    if (depth > kMaxDepth) throw std::runtime_error("branch_solve: recursion depth exceeded");
    for (;;) {
      auto names = param_names(param.dim());
      for (auto& e : eqs)
        if (e.nvars() != names.size()) e = MultiPoly::constant(names, e.constant_term());
      auto rows = reduce_span(eqs, names);
      Mat<Rational> lin_a;
      Vec<Rational> lin_b;
      std::vector<MultiPoly> quads;
      for (const auto& r : rows) {
        if (r.degree() == 0) {
          ++result_.infeasible_leaves;
          return;
        }
        if (r.degree() == 1) {
          lin_a.push_back(r.linear_coeffs());
          lin_b.push_back(-r.constant_term());
        } else {
          quads.push_back(r);
        }
      }
      if (!lin_a.empty()) {
        auto sol = rref_solve(lin_a, lin_b, param.dim());
        if (!sol) {
          ++result_.infeasible_leaves;
          return;
        }
        restrict_to(param, rows, *sol);
        eqs = std::move(rows);
        continue;
      }
      if (quads.empty()) {
        emit(param, {}, trace);
        return;
      }
      for (const auto& q : quads) {
        auto f = factor_affine(q);
        if (!f) continue;
        std::vector<MultiPoly> distinct;
        for (const auto& fac : f->factors)
          if (std::none_of(distinct.begin(), distinct.end(), [&](const MultiPoly& d) { return d == fac; }))
            distinct.push_back(fac);
        for (const auto& fac : distinct) {
          auto child = quads;
          child.push_back(fac);
          auto t = trace;
          t.push_back(fac.to_string() + " = 0  (factor of " + q.to_string() + ")");
          recurse(param, child, t, depth + 1);
        }
        return;
      }
      emit(param, quads, trace);
      return;
    }
  }

  void emit(const AffineSubspace<Rational>& param, const std::vector<MultiPoly>& residual,
            const std::vector<std::string>& trace) {
    SolutionComponent c;
    c.affine = param;
    c.affine.canonicalize();
    c.branch_trace = trace;
    if (!residual.empty()) {
      // Re-express residuals in the canonical coordinates.
      auto names = param_names(c.affine.dim());
      auto u0 = *param.coords(c.affine.base);
      std::vector<MultiPoly> imgs;
      std::vector<Vec<Rational>> cols;
      for (const auto& d : c.affine.dirs) {
        Vec<Rational> p = c.affine.base;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += d[i];
        auto ui = *param.coords(p);
        for (std::size_t k = 0; k < ui.size(); ++k) ui[k] -= u0[k];
        cols.push_back(ui);
      }
      for (std::size_t k = 0; k < param.dim(); ++k) {
        Vec<Rational> lin(c.affine.dim());
        for (std::size_t j = 0; j < c.affine.dim(); ++j) lin[j] = cols[j][k];
        imgs.push_back(MultiPoly::affine(names, lin, u0[k]));
      }
      std::vector<MultiPoly> res;
      for (const auto& r : residual) res.push_back(r.compose(imgs));
      c.residual = reduce_span(res, names);
    }
    c.certified = c.residual.empty();
    result_.components.push_back(std::move(c));
  }

  // Residuals of `big`, restricted to `small`'s affine set, lie in the span of
  // `small`'s residuals: then small's variety is inside big's.
  static bool contained(const SolutionComponent& small, const SolutionComponent& big) {
    if (!big.affine.contains(small.affine)) return false;
    if (big.residual.empty()) return true;
    auto names = param_names(small.affine.dim());
    auto u0 = *big.affine.coords(small.affine.base);
    std::vector<Vec<Rational>> cols;
    for (const auto& d : small.affine.dirs) {
      Vec<Rational> p = small.affine.base;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += d[i];
      auto ui = *big.affine.coords(p);
      for (std::size_t k = 0; k < ui.size(); ++k) ui[k] -= u0[k];
      cols.push_back(ui);
    }
    std::vector<MultiPoly> imgs;
    for (std::size_t k = 0; k < big.affine.dim(); ++k) {
      Vec<Rational> lin(small.affine.dim());
      for (std::size_t j = 0; j < small.affine.dim(); ++j) lin[j] = cols[j][k];
      imgs.push_back(MultiPoly::affine(names, lin, u0[k]));
    }
    auto base_span = reduce_span(small.residual, names);
    for (const auto& r : big.residual) {
      MultiPoly rr = small.affine.dim() == 0 ? MultiPoly::constant(names, r.eval(u0)) : r.compose(imgs);
      if (rr.is_zero()) continue;
      auto with = base_span;
      with.push_back(rr);
      if (reduce_span(with, names).size() != base_span.size()) return false;
    }
    return true;
  }

  void finalize() {
    auto& cs = result_.components;
    std::map<std::string, SolutionComponent> uniq;
    for (auto& c : cs) uniq.emplace(c.key(), c);
    std::vector<SolutionComponent> v;
    for (auto& [k, c] : uniq) v.push_back(c);
    std::stable_sort(v.begin(), v.end(), [](const SolutionComponent& a, const SolutionComponent& b) {
      if (a.affine.dim() != b.affine.dim()) return a.affine.dim() > b.affine.dim();
      if (a.residual.size() != b.residual.size()) return a.residual.size() < b.residual.size();
      return a.key() < b.key();
    });
    std::vector<SolutionComponent> kept;
    for (auto& c : v) {
      bool redundant = false;
      // Certified pieces stay listed even inside a sampled variety.
      for (const auto& k : kept)
        if ((k.certified || !c.certified) && contained(c, k)) redundant = true;
      if (!redundant) kept.push_back(c);
    }
    cs = std::move(kept);
  }

  BranchResult result_;
};

inline BranchResult branch_solve(const ASSystem& sys, const AffineSubspace<Rational>& sub) {
  return BranchSolver().solve(sys, sub);
}

// ---------------------------------------------------------------------------
// Sampling points on a component

struct ComponentSample {
  Vec<Rational> point;       // in S-coefficients
  std::size_t seeded = 0;    // how many coordinates were drawn at random
  std::size_t local_dim = 0; // dim - rank of the residual Jacobian at the point
};

namespace detail {
inline std::optional<Vec<Rational>> propagate(const std::vector<MultiPoly>& residual, std::size_t d,
                                              const std::vector<std::size_t>& seeds, RationalSampler& rs) {
  // Track u = base + D v over the still-free coordinates v.
  AffineSubspace<Rational> cur;
  cur.n = d;
  cur.base.assign(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    Vec<Rational> e(d, Rational(0));
    e[i] = 1;
    cur.dirs.push_back(e);
  }
  // Fix the seeded coordinates.
  {
    Mat<Rational> a;
    Vec<Rational> b;
    for (auto s : seeds) {
      Vec<Rational> row(d, Rational(0));
      row[s] = 1;
      a.push_back(row);
      b.push_back(rs.any());
    }
    if (!a.empty()) {
      auto sol = rref_solve(a, b);
      cur = *sol;
    }
  }
  for (int guard = 0; guard < 64; ++guard) {
    auto names = param_names(cur.dim());
    auto imgs = param_images(cur);
    std::vector<MultiPoly> eqs;
    for (const auto& r : residual)
      eqs.push_back(cur.dim() == 0 ? MultiPoly::constant(names, r.eval(cur.base)) : r.compose(imgs));
    auto rows = reduce_span(eqs, names);
    if (rows.empty()) {
      Vec<Rational> c(cur.dim());
      for (auto& x : c) x = rs.any();
      return cur.point(c);
    }
    Mat<Rational> a;
    Vec<Rational> b;
    for (const auto& r : rows) {
      if (r.degree() == 0) return std::nullopt;
      if (r.degree() == 1) {
        a.push_back(r.linear_coeffs());
        b.push_back(-r.constant_term());
      }
    }
    if (a.empty()) return std::nullopt;
    auto sol = rref_solve(a, b, cur.dim());
    if (!sol) return std::nullopt;
    AffineSubspace<Rational> next;
    next.n = d;
    next.base = cur.point(sol->base);
    for (const auto& dv : sol->dirs) {
      Vec<Rational> v(d, Rational(0));
      for (std::size_t i = 0; i < dv.size(); ++i)
        for (std::size_t c = 0; c < d; ++c) v[c] += dv[i] * cur.dirs[i][c];
      next.dirs.push_back(v);
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

inline std::size_t jacobian_rank(const std::vector<MultiPoly>& residual, const Vec<Rational>& u) {
  Mat<Rational> j;
  for (const auto& r : residual) {
    Vec<Rational> row(u.size(), Rational(0));
    for (const auto& [ex, c] : r.terms())
      for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] == 0) continue;
        Rational t = c * ex[i];
        for (std::size_t k = 0; k < ex.size(); ++k) {
          int p = ex[k] - (k == i ? 1 : 0);
          for (int q = 0; q < p; ++q) t *= u[k];
        }
        row[i] += t;
      }
    j.push_back(row);
  }
  return j.empty() ? 0 : rank(j);
}
}  // namespace detail

// Exact rational points on a component. Certified components are sampled
// directly; residual varieties by drawing some coordinates at random and
// solving whatever becomes affine, trying seed sets of increasing size.
inline std::vector<ComponentSample> sample_component(const SolutionComponent& c, std::size_t count, std::uint64_t seed) {
  RationalSampler rs(seed);
  std::vector<ComponentSample> out;
  const std::size_t d = c.affine.dim();
  if (c.residual.empty()) {
    for (std::size_t k = 0; k < count; ++k) {
      Vec<Rational> u(d);
      for (auto& x : u) x = rs.any();
      out.push_back({c.affine.point(u), d, d});
    }
    return out;
  }
  for (std::size_t size = 0; size <= d && out.size() < count; ++size) {
    // subsets of {0..d-1} of this size, lexicographic
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (bool more = true; more && out.size() < count;) {
      for (int trial = 0; trial < 3 && out.size() < count; ++trial) {
        auto u = detail::propagate(c.residual, d, idx, rs);
        if (!u) continue;
        bool ok = true;
        for (const auto& r : c.residual) ok = ok && is_zero(r.eval(*u));
        if (!ok) continue;
        out.push_back({c.affine.point(*u), size, d - detail::jacobian_rank(c.residual, *u)});
      }
      // next subset
      more = false;
      for (std::size_t i = size; i-- > 0;) {
        if (idx[i] < d - size + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching against the catalog

struct Certificate {
  Family target = Family::Raw;
  Rational target_t;
  std::string kind;   // "rotation+boost", "rotation", ...
  std::string field;  // radicands adjoined
  CheckResult check;
};

struct PointMatch {
  Vec<Rational> point;
  std::optional<Family> family;  // direct membership
  std::optional<Rational> t;
  std::optional<Certificate> certificate;
  bool matched() const { return family.has_value() || (certificate && certificate->check.ok); }
};

struct ComponentMatch {
  SolutionComponent component;
  std::vector<Family> equal_families;  // families whose affine set equals the component's
  std::vector<PointMatch> samples;
  bool ok = false;
};

struct MatchReport {
  DiagonalMetric metric;
  MetricCase metric_case = MetricCase::Generic;
  std::vector<ComponentMatch> components;
  std::vector<std::pair<Family, bool>> family_covered;
  bool ok = false;
  std::string failure;
  std::size_t sampled_components = 0;
};

// Symmetric case: write S - mu*vol as an endomorphism M with M(X_i) =
// (sigma_i, tau_i, rho_i) shifted by mu on the diagonal. Solutions have
// M = c*id or M = s y y^flat.
struct SymmetricShape {
  Mat<Rational> m;
  std::optional<Rational> scalar;  // M = c id
  std::optional<Vec<Rational>> y;  // M = s y y^flat
  Rational s;
};

inline SymmetricShape symmetric_shape(const Vec<Rational>& x, const DiagonalMetric& g) {
  SymmetricShape sh;
  sh.m = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    sh.m[0][i] = x[kSig0 + i];
    sh.m[1][i] = x[kTau0 + i];
    sh.m[2][i] = x[kRho0 + i];
  }
  sh.m[0][0] -= g.mu;
  sh.m[1][1] -= g.mu;
  sh.m[2][2] -= g.mu;
  bool diag = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if ((i != j && !is_zero(sh.m[i][j])) || (i == j && sh.m[i][i] != sh.m[0][0])) diag = false;
  if (diag) {
    sh.scalar = sh.m[0][0];
    return sh;
  }
  if (rank(sh.m) != 1) return sh;
  std::size_t col = 0;
  while (is_zero_vec(Vec<Rational>{sh.m[0][col], sh.m[1][col], sh.m[2][col]})) ++col;
  Vec<Rational> y{sh.m[0][col], sh.m[1][col], sh.m[2][col]};
  // M[k][i] = s y_k g_i y_i
  if (is_zero(y[col])) return sh;
  Rational s = 1 / (g.g(static_cast<int>(col)) * y[col]);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      if (sh.m[k][i] != s * y[k] * g.g(static_cast<int>(i)) * y[i]) return sh;
  sh.y = y;
  sh.s = s;
  return sh;
}

namespace detail {
using K = Quad2;

inline Mat<K> to_k(const Mat<Rational>& m) {
  Mat<K> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) r[i].push_back(K(x));
  return r;
}

// Frame isometry taking y to a coordinate axis (X0 if timelike, X1 if
// spacelike, X0 - X1 direction if null). Entries live in Q(sqrt d1)(sqrt d2).
struct AxisMap {
  Mat<K> phi;
  std::string field;
  int axis_kind = 0;  // -1 timelike, +1 spacelike, 0 null
};

inline AxisMap axis_map(Vec<Rational> y, const DiagonalMetric& g) {
  AxisMap am;
  Rational n = g.g(0) * y[0] * y[0] + g.g(1) * y[1] * y[1] + g.g(2) * y[2] * y[2];
  am.axis_kind = sgn(n);
  if (am.axis_kind <= 0 && sgn(y[0]) < 0)
    for (auto& v : y) v = -v;
  Rational d1 = y[1] * y[1] + y[2] * y[2];
  // Rotation about X0 taking (y1, y2) to (r, 0).
  auto rot = identity_matrix<K>(3);
  K r(0);
  if (!is_zero(d1)) {
    r = K(sqrt_adjoin(d1));
    K rinv = K(1) / r;
    rot[1][1] = K(y[1]) * rinv;
    rot[1][2] = K(y[2]) * rinv;
    rot[2][1] = K(-y[2]) * rinv;
    rot[2][2] = K(y[1]) * rinv;
    if (!exact_sqrt(d1)) am.field = "sqrt(" + to_pretty(d1) + ")";
  }
  Rational d2 = abs(Rational(y[0] * y[0] - d1));
  // sqrt(d2) in Q(sqrt d1) when it already lies there, else adjoined on top.
  auto root_d2 = [&]() {
    Quad1 d2k(d2, Rational(0), exact_sqrt(d1) ? Rational(0) : d1);
    if (auto s = try_sqrt(d2k)) return K(*s);
    am.field += (am.field.empty() ? "" : ", ") + std::string("sqrt(") + to_pretty(d2) + ")";
    return K::root(d2k);
  };
  auto boost = identity_matrix<K>(3);
  if (am.axis_kind < 0) {
    if (is_zero(d1)) {
      am.phi = rot;
      return am;
    }
    // (y0, r) -> (q, 0)
    K qi = K(1) / root_d2();
    boost[0][0] = K(y[0]) * qi;
    boost[0][1] = -r * qi;
    boost[1][0] = -r * qi;
    boost[1][1] = K(y[0]) * qi;
  } else if (am.axis_kind > 0) {
    // (y0, r) -> (0, q)
    K qi = K(1) / root_d2();
    boost[0][0] = r * qi;
    boost[0][1] = K(-y[0]) * qi;
    boost[1][0] = K(-y[0]) * qi;
    boost[1][1] = r * qi;
  } else {
    // null: after the rotation y ~ X0 + X1; flip to X0 - X1.
    boost[1][1] = K(-1);
    boost[2][2] = K(-1);
  }
  am.phi = matmul(boost, rot);
  return am;
}

inline std::optional<Vec<Rational>> rational_coeffs(const Coeffs<K>& c) {
  Vec<Rational> v;
  for (const auto& x : c) {
    auto r = as_rational(x);
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  return v;
}
}  // namespace detail

// Certificate for a symmetric-case point: a metric automorphism phi with
// phi_* S in a catalog family, checked on the transvection algebras.
inline std::optional<Certificate> symmetric_certificate(const Vec<Rational>& x, const DiagonalMetric& g) {
  using detail::K;
  auto sh = symmetric_shape(x, g);
  if (!sh.y) return std::nullopt;
  auto am = detail::axis_map(*sh.y, g);
  if (!is_metric_automorphism(am.phi, g)) return std::nullopt;
  Coeffs<K> src;
  for (std::size_t i = 0; i < kNumCoeffs; ++i) src[i] = K(x[i]);
  auto pushed = push_forward(src, am.phi);
  if (!pushed) return std::nullopt;
  auto pr = detail::rational_coeffs(*pushed);
  if (!pr) return std::nullopt;
  Certificate cert;
  cert.kind = am.axis_kind < 0 ? "rotation+boost to X0" : (am.axis_kind > 0 ? "rotation+boost to X1" : "rotation to X0-X1");
  cert.field = am.field.empty() ? "Q" : "Q(" + am.field + ")";
  const std::vector<Family> candidates = am.axis_kind < 0   ? std::vector<Family>{Family::Slambda}
                                         : am.axis_kind > 0 ? std::vector<Family>{Family::Smu}
                                                            : std::vector<Family>{Family::SnullMinus};
  for (auto f : candidates) {
    auto t = family_parameter(f, g, *pr);
    if (!t) continue;
    cert.target = f;
    cert.target_t = *t;
    auto target = catalog_family(f, g, *t);
    auto ts = build_transvection_algebra<K>(g, src);
    auto tt = build_transvection_algebra<K>(g, coeffs_as<K>(target));
    auto psi = induced_map(ts, tt, am.phi);
    if (!psi) {
      cert.check = CheckResult::fail("holonomy not carried to holonomy");
      return cert;
    }
    cert.check = verify_isomorphism(ts.alg, tt.alg, *psi);
    return cert;
  }
  return std::nullopt;
}

inline std::vector<Family> maximal_families(MetricCase c, const DiagonalMetric& g) {
  auto fams = families_for(c);
  std::vector<Family> out;
  for (auto f : fams) {
    auto af = family_affine_set(f, g);
    bool inside = false;
    for (auto h : fams)
      if (h != f && family_affine_set(h, g).contains(af) && !(family_affine_set(h, g) == af)) inside = true;
    if (!inside) out.push_back(f);
  }
  return out;
}

// Does the component contain the family's whole affine set?
inline bool component_contains_family(const SolutionComponent& c, Family f, const DiagonalMetric& g) {
  auto af = family_affine_set(f, g);
  if (!c.affine.contains(af)) return false;
  if (c.residual.empty()) return true;
  // Residuals along the family line must vanish identically.
  auto names = std::vector<std::string>{"t"};
  auto u0 = *c.affine.coords(af.base);
  std::vector<MultiPoly> imgs;
  Vec<Rational> du(c.affine.dim(), Rational(0));
  if (!af.dirs.empty()) {
    Vec<Rational> p = af.base;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += af.dirs[0][i];
    auto u1 = *c.affine.coords(p);
    for (std::size_t k = 0; k < du.size(); ++k) du[k] = u1[k] - u0[k];
  }
  for (std::size_t k = 0; k < c.affine.dim(); ++k) imgs.push_back(MultiPoly::affine(names, {du[k]}, u0[k]));
  for (const auto& r : c.residual)
    if (!(c.affine.dim() == 0 ? is_zero(r.eval(u0)) : r.compose(imgs).is_zero())) return false;
  return true;
}

inline MatchReport match_components(const std::vector<SolutionComponent>& comps, const DiagonalMetric& g,
                                    std::size_t samples_per_component = 3, std::uint64_t seed = 1) {
  MatchReport rep;
  rep.metric = g;
  auto mc = g.metric_case();
  if (!mc) throw std::invalid_argument("match_components: degenerate metric");
  rep.metric_case = *mc;
  auto note = [&](const std::string& msg) { rep.failure += (rep.failure.empty() ? "" : "; ") + msg; };
  auto fams = families_for(*mc);
  for (auto f : fams) {
    bool cov = false;
    for (const auto& c : comps) cov = cov || component_contains_family(c, f, g);
    rep.family_covered.emplace_back(f, cov);
    if (!cov) note("family " + family_name(f) + " not contained in any component");
  }
  std::uint64_t k = 0;
  for (const auto& c : comps) {
    ComponentMatch cm;
    cm.component = c;
    if (!c.certified) ++rep.sampled_components;
    for (auto f : fams)
      if (c.certified && family_affine_set(f, g) == c.affine) cm.equal_families.push_back(f);
    for (const auto& smp : sample_component(c, samples_per_component, seed * 7919 + (k++))) {
      PointMatch pm;
      pm.point = smp.point;
      for (auto f : fams)
        if (auto t = family_parameter(f, g, smp.point)) {
          pm.family = f;
          pm.t = t;
          break;
        }
      if (!pm.family && *mc == MetricCase::Symmetric) pm.certificate = symmetric_certificate(smp.point, g);
      cm.samples.push_back(std::move(pm));
    }
    if (*mc == MetricCase::Symmetric) {
      cm.ok = !cm.samples.empty();
      for (const auto& s : cm.samples) cm.ok = cm.ok && s.matched();
      if (!cm.ok) {
        std::string at = cm.samples.empty() ? std::string("no sample found") : describe(cm.samples.front().point);
        for (const auto& s : cm.samples)
          if (!s.matched()) at = describe(s.point) + (s.certificate ? " (" + s.certificate->check.detail + ")" : "");
        note("unmatched component point " + at);
      }
    } else {
      cm.ok = c.certified && !cm.equal_families.empty();
      if (!cm.ok) note("component with base " + describe(c.affine.base) + " is not a catalog family");
    }
    rep.components.push_back(std::move(cm));
  }
  if (*mc != MetricCase::Symmetric) {
    // Set equality with the maximal families.
    for (auto f : maximal_families(*mc, g)) {
      bool hit = false;
      for (const auto& cm : rep.components)
        hit = hit || std::find(cm.equal_families.begin(), cm.equal_families.end(), f) != cm.equal_families.end();
      if (!hit) note("family " + family_name(f) + " is not a solver component");
    }
  }
  rep.ok = rep.failure.empty();
  return rep;
}

}  // namespace homstruct
