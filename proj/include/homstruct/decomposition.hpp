#pragma once

// Reductive decompositions h (+) m realised inside an ambient Lie algebra,
// identified with the tangent space at o through a linear map tau, and the
// matching of a transvection algebra against such a decomposition.

#include "reductive.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homstruct {

template <class F>
struct Decomposition {
  std::string id;
  LieAlgebraPresentation<F> ambient;
  std::vector<Vec<F>> h, m;  // ambient coordinates
  std::vector<std::string> h_names, m_names;
  Mat<F> tau;  // 3 x dim(ambient); tau(v) = X-coordinates of v^*|_o
};

template <class F>
Vec<F> apply_tau(const Mat<F>& tau, const Vec<F>& v) {
  return matvec(tau, v);
}

// Presentation on the basis h ++ m, with metric on m pulled back through
// tau. Nullopt when h ++ m is not a basis of a subalgebra.
template <class F>
std::optional<LieAlgebraPresentation<F>> realize(const Decomposition<F>& d, const DiagonalMetric& g) {
  std::vector<Vec<F>> basis = d.h;
  basis.insert(basis.end(), d.m.begin(), d.m.end());
  if (rank(Mat<F>(basis)) != basis.size()) return std::nullopt;
  std::vector<std::string> names = d.h_names;
  names.insert(names.end(), d.m_names.begin(), d.m_names.end());
  names.resize(basis.size(), "");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i].empty()) names[i] = "e" + std::to_string(i);
  auto p = LieAlgebraPresentation<F>::zero(names);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = express_in_span(basis, d.ambient.bracket(basis[i], basis[j]));
      if (!c) return std::nullopt;
      p.table[i][j] = *c;
    }
  const std::size_t r = d.h.size();
  for (std::size_t a = 0; a < r; ++a) p.h_indices.push_back(a);
  for (std::size_t a = 0; a < d.m.size(); ++a) p.m_indices.push_back(r + a);
  p.metric_on_m = zero_matrix<F>(d.m.size(), d.m.size());
  for (std::size_t a = 0; a < d.m.size(); ++a)
    for (std::size_t b = 0; b < d.m.size(); ++b) {
      auto x = apply_tau(d.tau, d.m[a]), y = apply_tau(d.tau, d.m[b]);
      F s(0);
      for (int i = 0; i < 3; ++i) s += x[static_cast<std::size_t>(i)] * from_rational<F>(g.g(i)) * y[static_cast<std::size_t>(i)];
      p.metric_on_m[a][b] = s;
    }
  return p;
}

// Rank of the h-parts of [m, m]. Equal to dim h exactly when h is spanned
// by curvature-type brackets, as it must be for a decomposition coming from
// a homogeneous structure.
template <class F>
std::size_t h_generation_rank(const LieAlgebraPresentation<F>& p) {
  std::vector<Vec<F>> rows;
  for (std::size_t a = 0; a < p.m_indices.size(); ++a)
    for (std::size_t b = a + 1; b < p.m_indices.size(); ++b) {
      const auto& br = p.table[p.m_indices[a]][p.m_indices[b]];
      Vec<F> v;
      for (auto u : p.h_indices) v.push_back(br[u]);
      rows.push_back(v);
    }
  if (rows.empty() || p.h_indices.empty()) return 0;
  return rank(Mat<F>(rows));
}

struct DecompositionReport {
  std::string id;
  CheckResult closure, jacobi, reductive;
  std::size_t dim_h = 0, h_generated = 0;
  bool ok() const { return closure.ok && jacobi.ok && reductive.ok; }
};

template <class F>
DecompositionReport check_decomposition(const Decomposition<F>& d, const DiagonalMetric& g) {
  DecompositionReport r;
  r.id = d.id;
  r.dim_h = d.h.size();
  auto p = realize(d, g);
  if (!p) {
    r.closure = CheckResult::fail("h + m is not a subalgebra of the ambient algebra");
    r.jacobi = r.reductive = CheckResult::fail("not evaluated");
    return r;
  }
  r.jacobi = check_jacobi(*p);
  r.reductive = check_reductive(*p);
  r.h_generated = h_generation_rank(*p);
  return r;
}

// Lie algebra map from a transvection algebra onto a decomposition:
// psi(X_k) = tau^-1(Phi X_k) inside m, and psi on h fixed by matching the
// action on m. `phi` defaults to the identity frame map.
template <class F>
std::optional<std::vector<Vec<F>>> decomposition_map(const TransvectionAlgebra<F>& src, const LieAlgebraPresentation<F>& dst,
                                                     const Decomposition<F>& d, const std::optional<Mat<F>>& phi = std::nullopt) {
  const std::size_t r = d.h.size(), n = r + 3;
  if (d.m.size() != 3 || src.h_basis.size() != r) return std::nullopt;
  Mat<F> p = zero_matrix<F>(3, 3);  // columns tau(m_j)
  for (std::size_t j = 0; j < 3; ++j) {
    auto t = apply_tau(d.tau, d.m[j]);
    for (std::size_t i = 0; i < 3; ++i) p[i][j] = t[i];
  }
  auto pinv = inverse(p);
  if (!pinv) return std::nullopt;
  Mat<F> f = phi ? *phi : identity_matrix<F>(3);
  auto finv = inverse(f);
  if (!finv) return std::nullopt;
  auto to_m = matmul(*pinv, f);  // X-coords -> m-coords
  std::vector<Vec<F>> psi(n, Vec<F>(n, F(0)));
  // Action of target h on X-coordinates.
  std::vector<Vec<F>> acts;
  for (std::size_t b = 0; b < r; ++b) {
    Mat<F> mb = zero_matrix<F>(3, 3);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) mb[j][k] = dst.table[b][r + k][r + j];
    acts.push_back(flatten(matmul(matmul(p, mb), *pinv)));
  }
  for (std::size_t a = 0; a < r; ++a) {
    auto want = matmul(matmul(f, src.h_basis[a]), *finv);
    auto y = express_in_span(acts, flatten(want));
    if (!y) return std::nullopt;
    for (std::size_t b = 0; b < r; ++b) psi[a][b] = (*y)[b];
  }
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j) psi[r + k][r + j] = to_m[j][k];
  return psi;
}

// Full certificate: the map exists and is an isomorphism of reductive
// decompositions that is isometric on m.
template <class F>
CheckResult match_decomposition(const TransvectionAlgebra<F>& src, const Decomposition<F>& d, const DiagonalMetric& g,
                                const std::optional<Mat<F>>& phi = std::nullopt) {
  auto dst = realize(d, g);
  if (!dst) return CheckResult::fail(d.id + ": not a subalgebra");
  if (auto red = check_reductive(*dst); !red) return CheckResult::fail(d.id + ": " + red.detail);
  auto psi = decomposition_map(src, *dst, d, phi);
  if (!psi) return CheckResult::fail(d.id + ": holonomy does not act as the target h");
  auto res = verify_isomorphism(src.alg, *dst, *psi);
  if (!res) res.detail = d.id + ": " + res.detail;
  return res;
}

}  // namespace homstruct
