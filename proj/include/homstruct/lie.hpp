#pragma once

// su(1,1) with diagonal left-invariant metrics: Levi-Civita connection,
// curvature and covariant derivatives of constant frame tensors.
//
// Layouts used throughout:
//   c(i,j,k)       = c^k_ij,     [X_i, X_j] = sum_k c^k_ij X_k
//   gamma(i,j,k)   = Gamma^k_ij, nabla_{X_i} X_j = sum_k Gamma^k_ij X_k
//   R(i,j,k,l)     = R^l_ijk,    R(X_i,X_j)X_k = sum_l R^l_ijk X_l
//   (1,q) tensors keep the upper index last.

#include "field.hpp"
#include "sampling.hpp"
#include "tensor.hpp"

#include <optional>
#include <string>

namespace homstruct {

struct StructureConstants {
  Tensor<Rational> c{3};

  static StructureConstants su11() {
    StructureConstants a;
    auto set = [&](int i, int j, int k, long v) {
      a.c(i, j, k) = v;
      a.c(j, i, k) = -v;
    };
    set(0, 1, 2, 2);
    set(1, 2, 0, -2);
    set(2, 0, 1, 2);
    return a;
  }
  static StructureConstants abelian() { return {}; }

  bool antisymmetric() const {
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          if (c(i, j, k) != -c(j, i, k)) return false;
    return true;
  }

  bool jacobi() const {
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          for (int l = 0; l < kDim; ++l) {
            Rational s(0);
            for (int m = 0; m < kDim; ++m)
              s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
            if (!is_zero(s)) return false;
          }
    return true;
  }
};

struct DiagonalMetric {
  Rational lambda, mu, nu;

  DiagonalMetric() : lambda(-1), mu(1), nu(1) {}
  DiagonalMetric(Rational l, Rational m, Rational n) : lambda(std::move(l)), mu(std::move(m)), nu(std::move(n)) {
    if (is_zero(lambda) || is_zero(mu) || is_zero(nu)) throw std::invalid_argument("DiagonalMetric: degenerate");
  }
  explicit DiagonalMetric(const MetricParams& p) : DiagonalMetric(p.lambda, p.mu, p.nu) {}

  const Rational& g(int i) const { return i == 0 ? lambda : (i == 1 ? mu : nu); }
  MetricParams params() const { return {lambda, mu, nu}; }
  std::string to_string() const {
    return "(" + homstruct::to_string(lambda) + ", " + homstruct::to_string(mu) + ", " + homstruct::to_string(nu) + ")";
  }
  std::optional<MetricCase> metric_case() const {
    for (auto c : all_cases())
      if (satisfies_case(params(), c)) return c;
    return std::nullopt;
  }

  template <class F = Rational>
  Tensor<F> tensor() const {
    Tensor<F> t(2);
    for (int i = 0; i < kDim; ++i) t(i, i) = from_rational<F>(g(i));
    return t;
  }
};

template <class F>
struct Connection {
  Tensor<F> gamma{3};
};

inline Connection<Rational> koszul_connection(const StructureConstants& alg, const DiagonalMetric& g) {
  Connection<Rational> conn;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational num = alg.c(i, j, k) * g.g(k) - alg.c(j, k, i) * g.g(i) + alg.c(k, i, j) * g.g(j);
        conn.gamma(i, j, k) = num / (2 * g.g(k));
      }
  return conn;
}

// Generic in the entry ring so the solver can run it on polynomial entries.
template <class R>
Tensor<R> curvature(const Tensor<R>& gamma, const StructureConstants& alg) {
  Tensor<R> r(4);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          R s{};
          for (int m = 0; m < kDim; ++m) {
            s = s + gamma(j, k, m) * gamma(i, m, l) - gamma(i, k, m) * gamma(j, m, l);
            if (!is_zero(alg.c(i, j, m))) s = s - gamma(m, k, l) * alg.c(i, j, m);
          }
          r(i, j, k, l) = s;
        }
  return r;
}

template <class F>
Tensor<F> curvature(const Connection<F>& conn, const StructureConstants& alg) {
  return curvature(conn.gamma, alg);
}

// R(X_i,X_j,X_k,X_l) = g(R(X_i,X_j)X_k, X_l)
template <class F>
Tensor<F> lower_curvature(const Tensor<F>& r13, const DiagonalMetric& g) {
  Tensor<F> r(4);
  for (std::size_t f = 0; f < r.e.size(); ++f) {
    auto idx = r.unflat(f);
    r.e[f] = r13.e[f] * from_rational<F>(g.g(idx[3]));
  }
  return r;
}

// Torsion T^k_ij = Gamma^k_ij - Gamma^k_ji - c^k_ij.
template <class F>
Tensor<F> torsion(const Connection<F>& conn, const StructureConstants& alg) {
  Tensor<F> t(3);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        t(i, j, k) = conn.gamma(i, j, k) - conn.gamma(j, i, k) - from_rational<F>(alg.c(i, j, k));
  return t;
}

enum class Layout { Covariant, UpperLast };

// Covariant derivative of a constant-coefficient frame tensor; the new
// derivative index comes first. Entries and connection may be any ring.
template <class R>
Tensor<R> covariant_derivative(const Tensor<R>& gamma, const Tensor<R>& t, Layout layout) {
  if (t.rank > 4) throw std::invalid_argument("covariant_derivative: rank > 4");
  const int q = layout == Layout::UpperLast ? t.rank - 1 : t.rank;
  if (q < 0) throw std::invalid_argument("covariant_derivative: empty upper layout");
  Tensor<R> out(t.rank + 1);
  for (std::size_t f = 0; f < out.e.size(); ++f) {
    auto idx = out.unflat(f);
    const int a = idx[0];
    std::vector<int> ti(idx.begin() + 1, idx.end());
    R s{};
    for (int slot = 0; slot < q; ++slot) {
      const int orig = ti[static_cast<std::size_t>(slot)];
      for (int m = 0; m < kDim; ++m) {
        const R& gm = gamma(a, orig, m);
        if (is_zero(gm)) continue;
        ti[static_cast<std::size_t>(slot)] = m;
        s = s - gm * t.at(ti);
      }
      ti[static_cast<std::size_t>(slot)] = orig;
    }
    if (layout == Layout::UpperLast) {
      const std::size_t up = static_cast<std::size_t>(q);
      const int orig = ti[up];
      for (int m = 0; m < kDim; ++m) {
        const R& gm = gamma(a, m, orig);
        if (is_zero(gm)) continue;
        ti[up] = m;
        s = s + gm * t.at(ti);
      }
      ti[up] = orig;
    }
    out.e[f] = s;
  }
  return out;
}

template <class F>
Tensor<F> covariant_derivative(const Connection<F>& conn, const Tensor<F>& t, Layout layout) {
  return covariant_derivative(conn.gamma, t, layout);
}

struct KKParams {
  Rational a, b, c, d, kappa;
  bool nondegenerate = false;
  bool riemannian = false;
};

inline KKParams kk_correspondence(const Rational& lambda, const Rational& mu, const Rational& nu,
                                  const Rational& kappa) {
  if (sgn(kappa) <= 0) throw std::invalid_argument("kk_correspondence: kappa must be positive");
  KKParams p;
  p.kappa = kappa;
  p.a = 4 * lambda / kappa;
  p.b = 0;
  p.c = mu - 4 * lambda / kappa;
  p.d = nu - mu;
  p.nondegenerate = !is_zero(Rational(p.a * (p.a + p.c) * (p.a + p.c + p.d)));
  p.riemannian = sgn(Rational(p.a * (p.a + p.c) - p.b * p.b)) > 0 && sgn(p.a) > 0 && sgn(Rational(p.a + p.c + p.d)) > 0;
  return p;
}

}  // namespace homstruct
