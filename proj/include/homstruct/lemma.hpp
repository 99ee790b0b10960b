#pragma once

// so(2,2) = su(1,1)_L (+) su(1,1)_R, the reductive decompositions of the
// symmetric case, and the explicit bases of the non-symmetric theorems.

#include "decomposition.hpp"
#include "field.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homstruct {

using K1 = Quad1;

// Basis B0, B1, B2 (left copy), D0, D1, D2 (right copy).
template <class F>
LieAlgebraPresentation<F> so22() {
  auto p = LieAlgebraPresentation<F>::zero({"B0", "B1", "B2", "D0", "D1", "D2"});
  auto alg = StructureConstants::su11();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vec<F> l(6, F(0)), r(6, F(0));
      for (std::size_t k = 0; k < 3; ++k) {
        l[k] = from_rational<F>(alg.c(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)));
        r[3 + k] = l[k];
      }
      p.set(i, j, l);
      p.set(3 + i, 3 + j, r);
    }
  return p;
}

namespace so22_basis {
// X_i^dagger = eps_i X_i in the matrix model.
inline int eps(int i) { return i == 0 ? -1 : 1; }

template <class F>
Vec<F> B(int i) {
  Vec<F> v(6, F(0));
  v[static_cast<std::size_t>(i)] = F(1);
  return v;
}
template <class F>
Vec<F> D(int i) {
  Vec<F> v(6, F(0));
  v[static_cast<std::size_t>(3 + i)] = F(1);
  return v;
}
// U_0 = (X_0, X_0), U_i = (X_i, -X_i) for i = 1, 2: the stabilizer of o.
template <class F>
Vec<F> U(int i) {
  auto v = B<F>(i);
  v[static_cast<std::size_t>(3 + i)] = F(-eps(i));
  return v;
}
// tau(a, b) = a + b^dagger.
template <class F>
Mat<F> tau() {
  auto t = zero_matrix<F>(3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    t[i][i] = F(1);
    t[i][3 + i] = F(eps(static_cast<int>(i)));
  }
  return t;
}
}  // namespace so22_basis

// su(1,1) (+) R with a central generator, basis X0, X1, X2, Z.
template <class F>
LieAlgebraPresentation<F> su11_plus_center(const std::string& z = "Z") {
  auto p = LieAlgebraPresentation<F>::zero({"X0", "X1", "X2", z});
  auto alg = StructureConstants::su11();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vec<F> v(4, F(0));
      for (std::size_t k = 0; k < 3; ++k)
        v[k] = from_rational<F>(alg.c(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)));
      p.set(i, j, v);
    }
  return p;
}

inline const DiagonalMetric& unit_ads_metric() {
  static const DiagonalMetric g(rat(-1), rat(1), rat(1));
  return g;
}

// ---------------------------------------------------------------------------
// Lemma cases

struct LemmaParams {
  Rational c{0}, c0{0}, c1{0}, c2{0};
};

struct RelationCheck {
  std::string text;
  bool ok = false;
  std::string got;
};

struct LemmaCaseReport {
  std::string id;
  std::string quote;  // anchor text of the displayed relations
  std::vector<RelationCheck> relations;
  std::vector<RelationCheck> printed_errata;  // printed forms that fail, replaced by the corrected entries
  std::optional<DecompositionReport> decomposition;
  CheckResult extra = CheckResult::pass();
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& r : relations)
      if (!r.ok) return false;
    for (const auto& r : printed_errata)
      if (r.ok) return false;
    if (decomposition && !decomposition->ok()) return false;
    return extra.ok;
  }
};

inline std::vector<std::string> lemma_case_ids() {
  return {"1-reduce", "1a", "1b", "1c-plus", "1c-minus", "1c-iso", "2", "3", "i", "ii", "iii", "iv", "v"};
}

namespace detail {

inline Rational exact_root_or_throw(const Rational& x, const std::string& what) {
  if (sgn(x) <= 0) throw std::invalid_argument(what + " must be positive");
  auto r = exact_sqrt(x);
  if (!r)
    throw std::invalid_argument(what + " = " + to_pretty(x) +
                                " is not a rational square; pick parameters such as (3,4) or (5,3) so the root is exact");
  return *r;
}

inline Vec<K1> comb(std::initializer_list<std::pair<K1, Vec<K1>>> terms) {
  return lincomb<K1>(std::vector<std::pair<K1, Vec<K1>>>(terms));
}

struct Rel {
  std::string text;
  Vec<K1> a, b, rhs;
};

inline RelationCheck eval(const LieAlgebraPresentation<K1>& p, const Rel& r) {
  auto got = p.bracket(r.a, r.b);
  return {r.text, got == r.rhs, p.show(got)};
}

inline K1 k(const Rational& x) { return K1(x); }

}  // namespace detail

// Decompositions (i)-(v) of the lemma inside so(2,2).
inline Decomposition<K1> lemma_decomposition(const std::string& id, const Rational& c) {
  using namespace so22_basis;
  using detail::comb;
  const K1 s2 = K1::root(rat(2)), is2 = K1(1) / s2, kc(c);
  auto Bp = comb({{is2, B<K1>(0)}, {is2, B<K1>(1)}});
  auto Bm = comb({{is2, B<K1>(0)}, {-is2, B<K1>(1)}});
  auto Up = comb({{is2, U<K1>(0)}, {is2, U<K1>(1)}});
  Decomposition<K1> d;
  d.id = id;
  d.ambient = so22<K1>();
  d.tau = tau<K1>();
  if (id == "i") {
    d.m = {comb({{K1(1), B<K1>(0)}, {kc, U<K1>(0)}}), B<K1>(1), B<K1>(2)};
    d.h = {U<K1>(0)};
    d.m_names = {"B0+cU0", "B1", "B2"};
    d.h_names = {"U0"};
  } else if (id == "ii") {
    d.m = {B<K1>(0), comb({{K1(1), B<K1>(1)}, {kc, U<K1>(1)}}), B<K1>(2)};
    d.h = {U<K1>(1)};
    d.m_names = {"B0", "B1+cU1", "B2"};
    d.h_names = {"U1"};
  } else if (id == "iii") {
    d.m = {Bp, comb({{K1(1), Bm}, {kc, Up}}), B<K1>(2)};
    d.h = {Up};
    d.m_names = {"B+", "B-+cU+", "B2"};
    d.h_names = {"U+"};
  } else if (id == "iii-minus") {
    // The mirror form of (iii), isomorphic to it through the 1c-iso map.
    auto Um = comb({{is2, U<K1>(0)}, {-is2, U<K1>(1)}});
    d.m = {comb({{K1(1), Bp}, {kc, Um}}), Bm, B<K1>(2)};
    d.h = {Um};
    d.m_names = {"B++cU-", "B-", "B2"};
    d.h_names = {"U-"};
  } else if (id == "iv") {
    d.m = {Bp, Bm, B<K1>(2)};
    d.h = {Up, U<K1>(2)};
    d.m_names = {"B+", "B-", "B2"};
    d.h_names = {"U+", "U2"};
  } else if (id == "v") {
    for (int i = 0; i < 3; ++i) {
      d.m.push_back(comb({{K1(1), B<K1>(i)}, {kc, U<K1>(i)}}));
      d.h.push_back(U<K1>(i));
      d.m_names.push_back("B" + std::to_string(i) + "+cU" + std::to_string(i));
      d.h_names.push_back("U" + std::to_string(i));
    }
  } else {
    throw std::invalid_argument("lemma_decomposition: unknown case '" + id + "' (expected i, ii, iii, iii-minus, iv or v)");
  }
  return d;
}

// Linear maps phi: span{B} -> h_o with span{B_i + phi(B_i)} invariant under
// h_o. Returns the dimension of that solution space.
inline std::size_t invariant_graph_dimension() {
  using namespace so22_basis;
  auto p = so22<Rational>();
  // Unknown phi[a][i] = U_a-coefficient of phi(B_i), index 3a + i.
  // For each j, i: phi([U_j, B_i]) - [U_j, phi(B_i)] = 0 in h_o coordinates.
  std::vector<Vec<Rational>> hbasis = {U<Rational>(0), U<Rational>(1), U<Rational>(2)};
  Mat<Rational> rows;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      auto bij = p.bracket(U<Rational>(j), B<Rational>(i));  // in span B
      // phi(bij): coefficient of U_a is sum_l bij[l] phi[a][l].
      // [U_j, phi(B_i)]: sum_b phi[b][i] [U_j, U_b] in h_o coordinates.
      std::vector<Vec<Rational>> ad(3);
      for (int b = 0; b < 3; ++b) {
        auto c = express_in_span(hbasis, p.bracket(U<Rational>(j), U<Rational>(b)));
        if (!c) throw std::logic_error("h_o not closed");
        ad[static_cast<std::size_t>(b)] = *c;
      }
      for (int a = 0; a < 3; ++a) {
        Vec<Rational> row(9, Rational(0));
        for (int l = 0; l < 3; ++l) row[static_cast<std::size_t>(3 * a + l)] += bij[static_cast<std::size_t>(l)];
        for (int b = 0; b < 3; ++b) row[static_cast<std::size_t>(3 * b + i)] -= ad[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        rows.push_back(row);
      }
    }
  return 9 - rank(rows);
}

inline LemmaCaseReport verify_decomposition_case(const std::string& id, const LemmaParams& prm) {
  using namespace so22_basis;
  using detail::comb;
  using detail::k;
  using detail::Rel;
  const auto& g = unit_ads_metric();
  auto p = so22<K1>();
  const K1 s2 = K1::root(rat(2)), is2 = K1(1) / s2;
  auto b = [](int i) { return B<K1>(i); };
  auto u = [](int i) { return U<K1>(i); };
  auto Bp = comb({{is2, b(0)}, {is2, b(1)}});
  auto Bm = comb({{is2, b(0)}, {-is2, b(1)}});
  auto Up = comb({{is2, u(0)}, {is2, u(1)}});
  auto Um = comb({{is2, u(0)}, {-is2, u(1)}});
  auto zero = Vec<K1>(6, K1(0));

  LemmaCaseReport rep;
  rep.id = id;
  std::vector<Rel> rels;
  auto run = [&] {
    for (const auto& r : rels) rep.relations.push_back(detail::eval(p, r));
  };
  auto decomp = [&](std::vector<Vec<K1>> m, std::vector<Vec<K1>> h, std::string did) {
    Decomposition<K1> d;
    d.id = std::move(did);
    d.ambient = p;
    d.tau = tau<K1>();
    d.m = std::move(m);
    d.h = std::move(h);
    rep.decomposition = check_decomposition(d, g);
  };

  if (id == "1-reduce") {
    if (sgn(prm.c1) == 0 || sgn(prm.c2) == 0) throw std::invalid_argument("case 1-reduce needs c1 c2 != 0");
    Rational s = detail::exact_root_or_throw(prm.c1 * prm.c1 + prm.c2 * prm.c2, "c1^2 + c2^2");
    rep.quote = "[w,B_0] = 2 sqrt(c1^2+c2^2) v1";
    auto w = comb({{k(prm.c0), u(0)}, {k(prm.c1), u(1)}, {k(prm.c2), u(2)}});
    auto v1 = comb({{k(prm.c2 / s), b(1)}, {k(-prm.c1 / s), b(2)}});
    auto v2 = comb({{k(prm.c1 / s), b(1)}, {k(prm.c2 / s), b(2)}});
    rels = {{"[w,B0] = 2s v1", w, b(0), comb({{k(2 * s), v1}})},
            {"[w,v1] = 2s B0 + 2c0 v2", w, v1, comb({{k(2 * s), b(0)}, {k(2 * prm.c0), v2}})},
            {"[w,v2] = -2c0 v1", w, v2, comb({{k(-2 * prm.c0), v1}})},
            {"[B0,v1] = 2v2", b(0), v1, comb({{K1(2), v2}})},
            {"[v1,v2] = -2B0", v1, v2, comb({{K1(-2), b(0)}})},
            {"[v2,B0] = 2v1", v2, b(0), comb({{K1(2), v1}})}};
    run();
  } else if (id == "1a" || id == "1b") {
    if (sgn(prm.c0) == 0 || sgn(prm.c1) == 0) throw std::invalid_argument("case " + id + " needs c0 c1 != 0");
    bool a = id == "1a";
    Rational disc = a ? prm.c0 * prm.c0 - prm.c1 * prm.c1 : prm.c1 * prm.c1 - prm.c0 * prm.c0;
    Rational s = detail::exact_root_or_throw(disc, a ? "c0^2 - c1^2" : "c1^2 - c0^2");
    // The relations hold for the unit generator w / s.
    auto w = comb({{k(prm.c0 / s), u(0)}, {k(prm.c1 / s), u(1)}});
    rep.notes.push_back("generator normalised: w = (c0 U0 + c1 U1) / " + to_pretty(s));
    if (a) {
      rep.quote = "[w,v_0] = 0, [w,v_1] = 2B_2";
      auto v0 = comb({{k(prm.c1 / s), b(1)}, {k(prm.c0 / s), b(0)}});
      auto v1 = comb({{k(prm.c0 / s), b(1)}, {k(prm.c1 / s), b(0)}});
      rels = {{"[w,v0] = 0", w, v0, zero},
              {"[w,v1] = 2B2", w, v1, comb({{K1(2), b(2)}})},
              {"[w,B2] = -2v1", w, b(2), comb({{K1(-2), v1}})},
              {"[v0,v1] = 2B2", v0, v1, comb({{K1(2), b(2)}})},
              {"[v1,B2] = -2v0", v1, b(2), comb({{K1(-2), v0}})},
              {"[B2,v0] = 2v1", b(2), v0, comb({{K1(2), v1}})}};
      run();
      decomp({comb({{K1(1), v0}, {k(prm.c), w}}), v1, b(2)}, {w}, "1a");
    } else {
      rep.quote = "[w,v_0] = -2B_2, [w,v_1] = 0";
      auto v0 = comb({{k(prm.c0 / s), b(1)}, {k(prm.c1 / s), b(0)}});
      auto v1 = comb({{k(prm.c1 / s), b(1)}, {k(prm.c0 / s), b(0)}});
      rels = {{"[w,v0] = -2B2", w, v0, comb({{K1(-2), b(2)}})},
              {"[w,v1] = 0", w, v1, zero},
              {"[w,B2] = -2v0", w, b(2), comb({{K1(-2), v0}})},
              {"[v0,v1] = 2B2", v0, v1, comb({{K1(2), b(2)}})},
              {"[v1,B2] = -2v0", v1, b(2), comb({{K1(-2), v0}})},
              {"[B2,v0] = 2v1", b(2), v0, comb({{K1(2), v1}})}};
      run();
      decomp({v0, comb({{K1(1), v1}, {k(prm.c), w}}), b(2)}, {w}, "1b");
    }
  } else if (id == "1c-plus" || id == "1c-minus") {
    bool plus = id == "1c-plus";
    auto common = std::vector<Rel>{{"[v+,v-] = -2B2", Bp, Bm, comb({{K1(-2), b(2)}})},
                                   {"[v+,B2] = -2v+", Bp, b(2), comb({{K1(-2), Bp}})},
                                   {"[v-,B2] = 2v-", Bm, b(2), comb({{K1(2), Bm}})}};
    if (plus) {
      rep.quote = "[w_+,v_+] = 0, [w_+,v_-] = -2B_2";
      rels = {{"[w+,v+] = 0", Up, Bp, zero},
              {"[w+,v-] = -2B2", Up, Bm, comb({{K1(-2), b(2)}})},
              {"[w+,B2] = -2v+", Up, b(2), comb({{K1(-2), Bp}})}};
      rels.insert(rels.end(), common.begin(), common.end());
      run();
      decomp({Bp, comb({{K1(1), Bm}, {k(prm.c), Up}}), b(2)}, {Up}, "1c-plus");
    } else {
      rep.quote = "[w_-,v_+] = 2B_2, [w_-,v_-] = 0";
      rels = {{"[w-,v+] = 2B2", Um, Bp, comb({{K1(2), b(2)}})},
              {"[w-,v-] = 0", Um, Bm, zero},
              {"[w-,B2] = 2v-", Um, b(2), comb({{K1(2), Bm}})}};
      rels.insert(rels.end(), common.begin(), common.end());
      run();
      decomp({comb({{K1(1), Bp}, {k(prm.c), Um}}), Bm, b(2)}, {Um}, "1c-minus");
    }
  } else if (id == "1c-iso") {
    rep.quote = "phi(w_+) = w_-, phi(v_+) = v_-";
    Decomposition<K1> src, dst;
    src.ambient = dst.ambient = p;
    src.tau = dst.tau = tau<K1>();
    src.id = "m+";
    dst.id = "m-";
    src.h = {Up};
    src.m = {Bp, comb({{K1(1), Bm}, {k(prm.c), Up}}), b(2)};
    dst.h = {Um};
    dst.m = {Bm, comb({{K1(1), Bp}, {k(prm.c), Um}}), b(2)};
    src.h_names = {"w+"};
    src.m_names = {"v+", "v-+cw+", "B2"};
    dst.h_names = {"w-"};
    dst.m_names = {"v-", "v++cw-", "B2"};
    auto ps = realize(src, g), pd = realize(dst, g);
    if (!ps || !pd) {
      rep.extra = CheckResult::fail("decompositions not closed");
    } else {
      std::vector<Vec<K1>> psi = identity_matrix<K1>(4);
      psi[3][3] = K1(-1);
      rep.extra = verify_isomorphism(*ps, *pd, psi);
    }
  } else if (id == "2") {
    rep.quote = "[w_2, v_+] = 2v_+, [w_2, v_-] = -2v_-";
    auto w2 = u(2), v2 = b(2);
    rels = {{"[w2,v+] = 2v+", w2, Bp, comb({{K1(2), Bp}})},
            {"[w2,v-] = -2v-", w2, Bm, comb({{K1(-2), Bm}})},
            {"[w2,v2] = 0", w2, v2, zero},
            {"[w+,v+] = 0", Up, Bp, zero},
            {"[w+,v-] = -2v2", Up, Bm, comb({{K1(-2), v2}})},
            {"[w+,v2] = -2v+", Up, v2, comb({{K1(-2), Bp}})},
            {"[w-,v+] = 2v2", Um, Bp, comb({{K1(2), v2}})},
            {"[w-,v-] = 0", Um, Bm, zero},
            {"[w-,v2] = 2v-", Um, v2, comb({{K1(2), Bm}})}};
    run();
    rep.printed_errata.push_back(detail::eval(p, {"[w-,v+] = -2v2 (printed)", Um, Bp, comb({{K1(-2), v2}})}));
    // The printed table cannot hold in any basis: read as 3x3 actions on
    // (v+, v-, v2), [A+, A-] must lie in span{A2, A+, A-}.
    auto act = [](std::vector<std::pair<int, std::pair<int, int>>> entries) {
      auto m = zero_matrix<Rational>(3, 3);
      for (auto [col, rv] : entries) m[static_cast<std::size_t>(rv.second)][static_cast<std::size_t>(col)] = Rational(rv.first);
      return m;
    };
    // Columns: image of v+ (0), v- (1), v2 (2); entries (coef, target).
    auto a2 = act({{0, {2, 0}}, {1, {-2, 1}}});
    auto ap = act({{1, {-2, 2}}, {2, {-2, 0}}});
    auto am_printed = act({{0, {-2, 2}}, {2, {2, 1}}});
    auto am_fixed = act({{0, {2, 2}}, {2, {2, 1}}});
    auto closes = [&](const Mat<Rational>& am) {
      auto br = endo_add(matmul(ap, am), matmul(am, ap), Rational(-1));
      return express_in_span<Rational>({flatten(a2), flatten(ap), flatten(am)}, flatten(br)).has_value();
    };
    if (closes(am_printed)) rep.extra = CheckResult::fail("printed table unexpectedly consistent");
    else if (!closes(am_fixed)) rep.extra = CheckResult::fail("corrected table not a representation");
    else rep.notes.push_back("printed [w-,v+] = -2v2 is inconsistent with the Jacobi identity; sign corrected");
    decomp({Bp, Bm, v2}, {Up, u(2)}, "iv");
  } else if (id == "3") {
    rep.quote = "m = span{B_i + phi(B_i)}";
    auto dim = invariant_graph_dimension();
    if (dim != 1) rep.extra = CheckResult::fail("invariant graphs form a space of dimension " + std::to_string(dim));
    else rep.notes.push_back("h_o-invariant complements of the form span{B_i + phi(B_i)} are exactly phi = c (B_i -> U_i)");
    std::vector<Vec<K1>> m, h;
    for (int i = 0; i < 3; ++i) {
      m.push_back(comb({{K1(1), b(i)}, {k(prm.c), u(i)}}));
      h.push_back(u(i));
    }
    decomp(m, h, "v");
  } else if (id == "i" || id == "ii" || id == "iii" || id == "iv" || id == "v") {
    auto d = lemma_decomposition(id, prm.c);
    rep.quote = "reductive decomposition (" + id + ")";
    rep.decomposition = check_decomposition(d, g);
    const auto& dr = *rep.decomposition;
    if (id == "iv") {
      // No homogeneous structure: h would have to be spanned by the
      // curvature part of [m, m], which vanishes here.
      if (dr.h_generated != 0) rep.extra = CheckResult::fail("[m,m] has an h-part");
      else rep.notes.push_back("[m,m] has no h-part: no canonical connection has this holonomy");
    } else if (sgn(prm.c) != 0 && dr.h_generated != dr.dim_h) {
      rep.extra = CheckResult::fail("h is not generated by [m,m]_h");
    } else if (sgn(prm.c) == 0 && dr.h_generated != 0) {
      rep.extra = CheckResult::fail("c = 0 should give a flat canonical connection");
    }
  } else {
    throw std::invalid_argument("unknown lemma case '" + id + "'");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Table 2: lemma case and parameter c for each family on -lambda = mu = nu.

struct TableTwoRow {
  Family family;
  std::string lemma_case;
  std::function<Rational(const Rational& mu, const Rational& t)> c;
};

inline std::vector<TableTwoRow> table_two() {
  auto half = [](const Rational& mu, const Rational& t) { return Rational((t - mu) / (2 * mu)); };
  return {{Family::Svol, "v", half},
          {Family::Slambda, "i", half},
          {Family::Smu, "ii", half},
          {Family::SnullMinus, "iii-minus", [](const Rational& mu, const Rational& t) { return Rational(t / mu); }},
          {Family::SnullPlus, "iii", [](const Rational& mu, const Rational& t) { return Rational(-t / mu); }}};
}

}  // namespace homstruct
