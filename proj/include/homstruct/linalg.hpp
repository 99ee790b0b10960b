#pragma once

// Dense exact linear algebra over any field type from field.hpp.

#include "field.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homstruct {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Mat<F>(rows, Vec<F>(cols, F(0)));
}

template <class F>
Mat<F> identity_matrix(std::size_t n) {
  auto m = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Mat<F> matmul(const Mat<F>& a, const Mat<F>& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("matmul: shape mismatch");
  auto r = zero_matrix<F>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

template <class F>
Vec<F> matvec(const Mat<F>& a, const Vec<F>& v) {
  Vec<F> r(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  if (a.empty()) return {};
  auto r = zero_matrix<F>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

// In-place reduced row echelon form. Only the first `ncols` columns are
// eligible as pivots (default: all). Zero rows are dropped. Returns the pivot
// columns in row order.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m, std::size_t ncols = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t width = m[0].size();
  std::size_t limit = std::min(width, ncols);
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    F inv = F(1) / m[row][col];
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      F f = m[r][col];
      for (std::size_t c = col; c < width; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  // Rows past `row` are zero in the pivot-eligible columns; keep those that
  // are nonzero elsewhere (they signal inconsistency in augmented systems).
  Mat<F> kept(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(row));
  for (std::size_t r = row; r < m.size(); ++r)
    if (!is_zero_vec(m[r])) kept.push_back(m[r]);
  m = std::move(kept);
  return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
  return rref(m).size();
}

// Affine set {base + sum c_i dirs[i]} in canonical form: dirs in RREF, base
// zero at every pivot column of dirs. Two equal sets have equal canonical
// forms, so equality is plain member comparison.
template <class F>
struct AffineSubspace {
  std::size_t n = 0;
  Vec<F> base;
  std::vector<Vec<F>> dirs;

  std::size_t dim() const { return dirs.size(); }

  void canonicalize() {
    Mat<F> d = dirs;
    auto piv = rref(d);
    dirs = d;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      F f = base[piv[r]];
      if (is_zero(f)) continue;
      for (std::size_t c = 0; c < n; ++c) base[c] = base[c] - f * dirs[r][c];
    }
  }

  Vec<F> point(const Vec<F>& coeffs) const {
    if (coeffs.size() != dirs.size()) throw std::invalid_argument("AffineSubspace::point: arity");
    Vec<F> x = base;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t c = 0; c < n; ++c) x[c] += coeffs[i] * dirs[i][c];
    return x;
  }

  // Coordinates of x in this parametrization, or nullopt if x is not in the set.
  std::optional<Vec<F>> coords(const Vec<F>& x) const;

  bool contains(const Vec<F>& x) const { return coords(x).has_value(); }

  bool contains(const AffineSubspace& other) const {
    if (!contains(other.base)) return false;
    for (const auto& d : other.dirs) {
      Vec<F> p = other.base;
      for (std::size_t c = 0; c < n; ++c) p[c] += d[c];
      if (!contains(p)) return false;
    }
    return true;
  }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.n == b.n && a.base == b.base && a.dirs == b.dirs;
  }
};

// Coefficients of v in the span of `basis` (rows), or nullopt.
template <class F>
std::optional<Vec<F>> express_in_span(const std::vector<Vec<F>>& basis, const Vec<F>& v) {
  std::size_t k = basis.size(), n = v.size();
  // Columns are basis vectors; augmented with v.
  auto m = zero_matrix<F>(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  auto piv = rref(m, k);
  for (const auto& row : m) {
    bool lhs_zero = true;
    for (std::size_t j = 0; j < k; ++j)
      if (!is_zero(row[j])) lhs_zero = false;
    if (lhs_zero && !is_zero(row[k])) return std::nullopt;
  }
  // With a dependent basis the free coefficients are set to zero.
  Vec<F> c(k, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = m[r][k];
  return c;
}

template <class F>
std::optional<Vec<F>> AffineSubspace<F>::coords(const Vec<F>& x) const {
  Vec<F> diff(n, F(0));
  for (std::size_t c = 0; c < n; ++c) diff[c] = x[c] - base[c];
  return express_in_span(dirs, diff);
}

struct Infeasible {};

// Exact solution set of A x = b.
// `ncols` fixes the number of unknowns when A has no rows.
template <class F>
std::optional<AffineSubspace<F>> rref_solve(const Mat<F>& a, const Vec<F>& b, std::optional<std::size_t> ncols = std::nullopt) {
  if (a.size() != b.size()) throw std::invalid_argument("rref_solve: row count mismatch");
  std::size_t n = a.empty() ? ncols.value_or(0) : a[0].size();
  if (ncols && *ncols != n) throw std::invalid_argument("rref_solve: column count mismatch");
  Mat<F> aug;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec<F> row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto piv = rref(aug, n);
  if (aug.size() > piv.size()) return std::nullopt;  // a row 0 = nonzero
  AffineSubspace<F> s;
  s.n = n;
  s.base.assign(n, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) s.base[piv[r]] = aug[r][n];
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<F> d(n, F(0));
    d[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) d[piv[r]] = -aug[r][f];
    s.dirs.push_back(std::move(d));
  }
  s.canonicalize();
  return s;
}

// Unique solution of a square system, nullopt if singular or inconsistent.
template <class F>
std::optional<Vec<F>> solve_unique(const Mat<F>& a, const Vec<F>& b) {
  auto s = rref_solve(a, b);
  if (!s || s->dim() != 0) return std::nullopt;
  return s->base;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  std::size_t n = a.size();
  Mat<F> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> row = a[i];
    for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? F(1) : F(0));
    aug.push_back(std::move(row));
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) return std::nullopt;
  Mat<F> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec<F>(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return inv;
}

template <class F>
F determinant(Mat<F> a) {
  std::size_t n = a.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    F inv = F(1) / a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      F f = a[r][c] * inv;
      if (is_zero(f)) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

}  // namespace homstruct
