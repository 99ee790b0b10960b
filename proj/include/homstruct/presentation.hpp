#pragma once

// Finite-dimensional Lie algebras given by an exact bracket table, split as
// h (+) m, with a metric on m. Used for transvection algebras, so(2,2) and
// isomorphism certificates.

#include "linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace homstruct {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first violation, empty when ok

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string d) { return {false, std::move(d)}; }
  explicit operator bool() const { return ok; }
};

template <class F>
struct LieAlgebraPresentation {
  std::vector<std::string> names;
  // table[i][j] = coordinates of [e_i, e_j]
  std::vector<std::vector<Vec<F>>> table;
  std::vector<std::size_t> h_indices, m_indices;
  Mat<F> metric_on_m;  // in the order of m_indices

  std::size_t dim() const { return names.size(); }

  static LieAlgebraPresentation zero(std::vector<std::string> n) {
    LieAlgebraPresentation p;
    p.names = std::move(n);
    std::size_t d = p.names.size();
    p.table.assign(d, std::vector<Vec<F>>(d, Vec<F>(d, F(0))));
    return p;
  }

  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set(std::size_t i, std::size_t j, const Vec<F>& v) {
    table[i][j] = v;
    Vec<F> w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = -v[k];
    table[j][i] = w;
  }

  Vec<F> unit(std::size_t i) const {
    Vec<F> v(dim(), F(0));
    v[i] = F(1);
    return v;
  }

  Vec<F> bracket(const Vec<F>& a, const Vec<F>& b) const {
    Vec<F> r(dim(), F(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(b[j])) continue;
        F c = a[i] * b[j];
        const auto& t = table[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!is_zero(t[k])) r[k] += c * t[k];
      }
    }
    return r;
  }

  std::string show(const Vec<F>& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      if (!first) os << " + ";
      os << to_pretty(v[i]) << "*" << names[i];
      first = false;
    }
    return first ? "0" : os.str();
  }
};

template <class F>
Vec<F> lincomb(const std::vector<std::pair<F, Vec<F>>>& terms) {
  Vec<F> r;
  for (const auto& [c, v] : terms) {
    if (r.empty()) r.assign(v.size(), F(0));
    for (std::size_t i = 0; i < v.size(); ++i) r[i] += c * v[i];
  }
  return r;
}

template <class F>
CheckResult check_antisymmetry(const LieAlgebraPresentation<F>& p) {
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k)
        if (p.table[i][j][k] != -p.table[j][i][k])
          return CheckResult::fail("antisymmetry fails at [" + p.names[i] + "," + p.names[j] + "]");
  return CheckResult::pass();
}

template <class F>
CheckResult check_jacobi(const LieAlgebraPresentation<F>& p) {
  if (auto a = check_antisymmetry(p); !a) return a;
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ei = p.unit(i), ej = p.unit(j), ek = p.unit(k);
        auto s1 = p.bracket(ei, p.bracket(ej, ek));
        auto s2 = p.bracket(ej, p.bracket(ek, ei));
        auto s3 = p.bracket(ek, p.bracket(ei, ej));
        for (std::size_t l = 0; l < n; ++l)
          if (!is_zero(F(s1[l] + s2[l] + s3[l])))
            return CheckResult::fail("Jacobi fails for (" + p.names[i] + ", " + p.names[j] + ", " + p.names[k] + ")");
      }
  return CheckResult::pass();
}

// [h, m] in m and the metric on m is ad(h)-invariant.
template <class F>
CheckResult check_reductive(const LieAlgebraPresentation<F>& p) {
  const auto& h = p.h_indices;
  const auto& m = p.m_indices;
  for (auto u : h)
    for (auto x : m) {
      auto b = p.table[u][x];
      for (auto k : h)
        if (!is_zero(b[k])) return CheckResult::fail("[" + p.names[u] + "," + p.names[x] + "] has an h-component");
    }
  for (auto u : h)
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) {
        // g([u,x_a], x_b) + g(x_a, [u,x_b])
        F s(0);
        const auto& ua = p.table[u][m[a]];
        const auto& ub = p.table[u][m[b]];
        for (std::size_t c = 0; c < m.size(); ++c) {
          s += ua[m[c]] * p.metric_on_m[c][b];
          s += p.metric_on_m[a][c] * ub[m[c]];
        }
        if (!is_zero(s))
          return CheckResult::fail("metric on m not invariant under " + p.names[u] + " at (" + p.names[m[a]] + "," +
                                   p.names[m[b]] + ")");
      }
  if (rank(p.metric_on_m) != m.size()) return CheckResult::fail("metric on m is degenerate");
  return CheckResult::pass();
}

// psi[i] = image of basis element i of src, in dst coordinates.
template <class F>
CheckResult verify_isomorphism(const LieAlgebraPresentation<F>& src, const LieAlgebraPresentation<F>& dst,
                               const std::vector<Vec<F>>& psi) {
  const std::size_t n = src.dim();
  if (dst.dim() != n || psi.size() != n) return CheckResult::fail("dimension mismatch");
  if (src.h_indices.size() != dst.h_indices.size()) return CheckResult::fail("dim h differs");
  if (rank(Mat<F>(psi)) != n) return CheckResult::fail("map is not invertible");
  auto apply = [&](const Vec<F>& v) {
    Vec<F> r(n, F(0));
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(v[i]))
        for (std::size_t k = 0; k < n; ++k) r[k] += v[i] * psi[i][k];
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto lhs = apply(src.table[i][j]);
      auto rhs = dst.bracket(psi[i], psi[j]);
      if (lhs != rhs)
        return CheckResult::fail("bracket [" + src.names[i] + "," + src.names[j] + "] not preserved: " +
                                 dst.show(lhs) + " vs " + dst.show(rhs));
    }
  auto in_span = [&](const Vec<F>& v, const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(v[k]) && std::find(idx.begin(), idx.end(), k) == idx.end()) return false;
    return true;
  };
  for (auto u : src.h_indices)
    if (!in_span(psi[u], dst.h_indices)) return CheckResult::fail("psi(" + src.names[u] + ") not in h'");
  for (auto x : src.m_indices)
    if (!in_span(psi[x], dst.m_indices)) return CheckResult::fail("psi(" + src.names[x] + ") not in m'");
  const auto& ms = src.m_indices;
  const auto& md = dst.m_indices;
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b) {
      F s(0);
      for (std::size_t c = 0; c < md.size(); ++c)
        for (std::size_t d = 0; d < md.size(); ++d)
          s += psi[ms[a]][md[c]] * dst.metric_on_m[c][d] * psi[ms[b]][md[d]];
      if (s != src.metric_on_m[a][b])
        return CheckResult::fail("not an isometry on m at (" + src.names[ms[a]] + "," + src.names[ms[b]] + ")");
    }
  return CheckResult::pass();
}

template <class F>
std::vector<Vec<F>> identity_map(std::size_t n) {
  return identity_matrix<F>(n);
}

// Change of basis: new basis vectors (rows, old coordinates) -> presentation
// in the new basis. Fails if the rows are not a basis.
template <class F>
std::optional<LieAlgebraPresentation<F>> rebase(const LieAlgebraPresentation<F>& p, const std::vector<Vec<F>>& basis,
                                                std::vector<std::string> names) {
  const std::size_t n = p.dim();
  if (basis.size() != n || rank(Mat<F>(basis)) != n) return std::nullopt;
  auto q = LieAlgebraPresentation<F>::zero(std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto b = p.bracket(basis[i], basis[j]);
      auto c = express_in_span(basis, b);
      if (!c) return std::nullopt;
      q.table[i][j] = *c;
    }
  return q;
}

// Promote a presentation to a larger field.
template <class G, class F>
LieAlgebraPresentation<G> lift(const LieAlgebraPresentation<F>& p) {
  LieAlgebraPresentation<G> q;
  q.names = p.names;
  q.h_indices = p.h_indices;
  q.m_indices = p.m_indices;
  q.table.assign(p.dim(), std::vector<Vec<G>>(p.dim(), Vec<G>(p.dim(), G(0))));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k) q.table[i][j][k] = G(p.table[i][j][k]);
  q.metric_on_m.assign(p.metric_on_m.size(), Vec<G>(p.metric_on_m.size(), G(0)));
  for (std::size_t i = 0; i < p.metric_on_m.size(); ++i)
    for (std::size_t j = 0; j < p.metric_on_m.size(); ++j) q.metric_on_m[i][j] = G(p.metric_on_m[i][j]);
  return q;
}

}  // namespace homstruct
