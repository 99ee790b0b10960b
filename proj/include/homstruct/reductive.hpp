#pragma once

// Holonomy of canonical connections and the transvection algebra h (+) m
// rebuilt from (S, R~).

#include "presentation.hpp"
#include "structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homstruct {

// Endomorphisms of the frame span: E[l][k] = X_l-component of E(X_k).
template <class F>
using Endo = Mat<F>;

// theta^a (x) X_b, i.e. Z -> theta^a(Z) X_b.
template <class F>
Endo<F> theta_x(int a, int b) {
  auto e = zero_matrix<F>(3, 3);
  e[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = F(1);
  return e;
}

template <class F>
Endo<F> endo_add(const Endo<F>& x, const Endo<F>& y, const F& c = F(1)) {
  auto r = x;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] += c * y[i][j];
  return r;
}

template <class F>
Endo<F> endo_scale(const Endo<F>& x, const F& c) {
  auto r = x;
  for (auto& row : r)
    for (auto& v : row) v = v * c;
  return r;
}

template <class F>
Vec<F> flatten(const Endo<F>& e) {
  Vec<F> v;
  for (const auto& row : e)
    for (const auto& x : row) v.push_back(x);
  return v;
}

template <class F>
Endo<F> unflatten(const Vec<F>& v) {
  auto e = zero_matrix<F>(3, 3);
  for (std::size_t i = 0; i < 9; ++i) e[i / 3][i % 3] = v[i];
  return e;
}

template <class F>
Endo<F> commutator(const Endo<F>& a, const Endo<F>& b) {
  auto ab = matmul(a, b), ba = matmul(b, a);
  return endo_add(ab, ba, F(-1));
}

// R~(X_i, X_j) as an endomorphism.
template <class F>
Endo<F> curvature_endo(const Tensor<F>& r, int i, int j) {
  auto e = zero_matrix<F>(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) e[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = r(i, j, k, l);
  return e;
}

// g-skewness: g(E x, y) + g(x, E y) = 0.
template <class F>
bool is_g_skew(const Endo<F>& e, const DiagonalMetric& g) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      F s = e[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] * from_rational<F>(g.g(b)) +
            e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * from_rational<F>(g.g(a));
      if (!is_zero(s)) return false;
    }
  return true;
}

template <class F>
struct HolonomySpan {
  std::vector<Endo<F>> generators;  // R~(X0,X1), R~(X1,X2), R~(X2,X0)
  std::vector<Endo<F>> basis;       // RREF basis of their span
  std::size_t dimension = 0;
  bool closed = false;              // span closed under commutators
  bool skew = false;                // every generator g-skew
};

template <class F>
std::optional<Vec<F>> coords_in(const std::vector<Endo<F>>& basis, const Endo<F>& e) {
  std::vector<Vec<F>> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  return express_in_span(flat, flatten(e));
}

template <class F>
HolonomySpan<F> holonomy_from_curvature(const Tensor<F>& rt, const DiagonalMetric& g) {
  HolonomySpan<F> h;
  const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  Mat<F> rows;
  for (const auto& p : pairs) {
    h.generators.push_back(curvature_endo(rt, p[0], p[1]));
    rows.push_back(flatten(h.generators.back()));
  }
  rref(rows);
  for (const auto& r : rows) h.basis.push_back(unflatten(r));
  h.dimension = h.basis.size();
  h.skew = true;
  for (const auto& e : h.generators) h.skew = h.skew && is_g_skew(e, g);
  h.closed = true;
  for (const auto& a : h.basis)
    for (const auto& b : h.basis)
      if (!coords_in(h.basis, commutator(a, b))) h.closed = false;
  return h;
}

template <class F = Rational>
HolonomySpan<F> holonomy_algebra(const DiagonalMetric& g, const HomogeneousStructure& s) {
  auto conn = canonical_connection<F>(g, s);
  return holonomy_from_curvature(curvature(conn, StructureConstants::su11()), g);
}

template <class F>
struct TransvectionAlgebra {
  LieAlgebraPresentation<F> alg;  // basis: h generators, then X0, X1, X2
  std::vector<Endo<F>> h_basis;
  Connection<F> canonical;
  Tensor<F> curvature{4};
  Tensor<F> s12{3};
};

// h_basis, if given, must span the holonomy algebra; otherwise the RREF
// basis is used.
template <class F = Rational>
TransvectionAlgebra<F> build_transvection_algebra(const DiagonalMetric& g, const Coeffs<F>& coeffs,
                                                  std::optional<std::vector<Endo<F>>> h_basis = std::nullopt,
                                                  std::vector<std::string> h_names = {}) {
  TransvectionAlgebra<F> out;
  auto lc = koszul_connection(StructureConstants::su11(), g);
  out.s12 = structure_tensor12(coeffs, g);
  for (std::size_t f = 0; f < out.canonical.gamma.e.size(); ++f)
    out.canonical.gamma.e[f] = from_rational<F>(lc.gamma.e[f]) - out.s12.e[f];
  out.curvature = curvature(out.canonical, StructureConstants::su11());
  auto hol = holonomy_from_curvature(out.curvature, g);
  if (!hol.closed) throw std::logic_error("transvection algebra: holonomy span not closed under brackets");
  if (h_basis) {
    if (h_basis->size() != hol.dimension) throw std::invalid_argument("transvection algebra: h basis has wrong size");
    std::vector<Vec<F>> flat;
    for (const auto& e : *h_basis) flat.push_back(flatten(e));
    if (rank(Mat<F>(flat)) != hol.dimension) throw std::invalid_argument("transvection algebra: h basis dependent");
    for (const auto& e : hol.basis)
      if (!coords_in(*h_basis, e)) throw std::invalid_argument("transvection algebra: h basis misses holonomy");
    out.h_basis = *h_basis;
  } else {
    out.h_basis = hol.basis;
  }
  const std::size_t r = out.h_basis.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < r; ++a) names.push_back(a < h_names.size() ? h_names[a] : "U" + std::to_string(a));
  names.insert(names.end(), {"X0", "X1", "X2"});
  auto p = LieAlgebraPresentation<F>::zero(names);
  const std::size_t n = r + 3;
  auto hvec = [&](const Endo<F>& e) {
    auto c = coords_in(out.h_basis, e);
    if (!c) throw std::logic_error("transvection algebra: endomorphism outside h");
    Vec<F> v(n, F(0));
    for (std::size_t a = 0; a < r; ++a) v[a] = (*c)[a];
    return v;
  };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) p.set(a, b, hvec(commutator(out.h_basis[a], out.h_basis[b])));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec<F> v(n, F(0));
      for (std::size_t l = 0; l < 3; ++l) v[r + l] = out.h_basis[a][l][j];
      p.set(a, r + j, v);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec<F> v = hvec(curvature_endo(out.curvature, i, j));
      for (auto& x : v) x = -x;
      for (int k = 0; k < 3; ++k) v[r + static_cast<std::size_t>(k)] += out.s12(i, j, k) - out.s12(j, i, k);
      p.set(r + static_cast<std::size_t>(i), r + static_cast<std::size_t>(j), v);
    }
  for (std::size_t a = 0; a < r; ++a) p.h_indices.push_back(a);
  for (std::size_t j = 0; j < 3; ++j) p.m_indices.push_back(r + j);
  p.metric_on_m = zero_matrix<F>(3, 3);
  for (int i = 0; i < 3; ++i) p.metric_on_m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = from_rational<F>(g.g(i));
  out.alg = std::move(p);
  return out;
}

template <class F = Rational>
TransvectionAlgebra<F> build_transvection_algebra(const DiagonalMetric& g, const HomogeneousStructure& s) {
  return build_transvection_algebra<F>(g, coeffs_as<F>(s));
}

// Torsion of nabla~ against the m-part of the bracket: T~(X,Y) = -[X,Y]_m.
template <class F>
CheckResult check_torsion_reconstruction(const TransvectionAlgebra<F>& t) {
  const auto& p = t.alg;
  const std::size_t r = p.h_indices.size();
  auto tor = torsion(t.canonical, StructureConstants::su11());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& b = p.table[r + static_cast<std::size_t>(i)][r + static_cast<std::size_t>(j)];
      for (int k = 0; k < 3; ++k)
        if (tor(i, j, k) != -b[r + static_cast<std::size_t>(k)])
          return CheckResult::fail("torsion mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return CheckResult::pass();
}

// Lie algebra map psi for a frame isometry phi (phi[l][k] = X_l-component of
// phi(X_k)) between two transvection algebras: phi on m, conjugation on h.
template <class F>
std::optional<std::vector<Vec<F>>> induced_map(const TransvectionAlgebra<F>& src, const TransvectionAlgebra<F>& dst,
                                               const Mat<F>& phi) {
  auto inv = inverse(phi);
  if (!inv) return std::nullopt;
  const std::size_t rs = src.h_basis.size(), rd = dst.h_basis.size();
  if (rs != rd) return std::nullopt;
  const std::size_t n = rs + 3;
  std::vector<Vec<F>> psi;
  for (std::size_t a = 0; a < rs; ++a) {
    auto conj = matmul(matmul(phi, src.h_basis[a]), *inv);
    auto c = coords_in(dst.h_basis, conj);
    if (!c) return std::nullopt;
    Vec<F> v(n, F(0));
    for (std::size_t b = 0; b < rd; ++b) v[b] = (*c)[b];
    psi.push_back(v);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    Vec<F> v(n, F(0));
    for (std::size_t l = 0; l < 3; ++l) v[rd + l] = phi[l][k];
    psi.push_back(v);
  }
  return psi;
}

// (phi_* S)(X,Y,Z) = S(phi^-1 X, phi^-1 Y, phi^-1 Z), back in coefficient form.
template <class F>
std::optional<Coeffs<F>> push_forward(const Coeffs<F>& s, const Mat<F>& phi) {
  auto inv = inverse(phi);
  if (!inv) return std::nullopt;
  auto t = structure_tensor03(s);
  Tensor<F> u(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        F v(0);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              const F& x = t(i, j, k);
              if (is_zero(x)) continue;
              v += x * (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                   (*inv)[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] *
                   (*inv)[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            }
        u(a, b, c) = v;
      }
  // Read back rho, sigma, tau from the (0,1), (1,2), (2,0) slots.
  Coeffs<F> out;
  const int pa[3] = {0, 1, 2}, pb[3] = {1, 2, 0};
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(3 * block + i)] = u(i, pa[block], pb[block]);
  if (!(structure_tensor03(out) == u)) return std::nullopt;  // not skew in the last slots
  return out;
}

// A frame map is a metric Lie algebra automorphism of (su(1,1), g).
template <class F>
bool is_metric_automorphism(const Mat<F>& phi, const DiagonalMetric& g) {
  auto alg = StructureConstants::su11();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // phi([X_i, X_j]) vs [phi X_i, phi X_j]
      for (int k = 0; k < 3; ++k) {
        F lhs(0), rhs(0);
        for (int m = 0; m < 3; ++m)
          lhs += from_rational<F>(alg.c(i, j, m)) * phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            const F& pa = phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            const F& pb = phi[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
            if (is_zero(pa) || is_zero(pb)) continue;
            rhs += pa * pb * from_rational<F>(alg.c(a, b, k));
          }
        if (lhs != rhs) return false;
      }
      F gij(0);
      for (int a = 0; a < 3; ++a)
        gij += phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
               phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] * from_rational<F>(g.g(a));
      if (gij != (i == j ? from_rational<F>(g.g(i)) : F(0))) return false;
    }
  return true;
}

}  // namespace homstruct
