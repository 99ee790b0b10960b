#pragma once

// Closed-form expressions for the Levi-Civita and canonical connections of
// g = diag(lambda, mu, nu) on su(1,1), written out independently of the
// Koszul/curvature code so the two can be compared.

#include "lie.hpp"

namespace homstruct::reference {

// Connection forms omega^i_j = sum_k gamma(k, j, i) theta^k.
inline Tensor<Rational> levi_civita_gamma(const DiagonalMetric& g) {
  const Rational &l = g.lambda, &m = g.mu, &n = g.nu;
  Tensor<Rational> t(3);
  // omega^i_j(X_k) -> t(k, j, i)
  t(2, 1, 0) = (l - m + n) / l;
  t(1, 2, 0) = -(l + m - n) / l;
  t(2, 0, 1) = -(l - m + n) / m;
  t(0, 2, 1) = -(l + m + n) / m;
  t(1, 0, 2) = (l + m - n) / n;
  t(0, 1, 2) = (l + m + n) / n;
  return t;
}

// R^l_ijk for the Levi-Civita connection, from the three displayed
// endomorphisms R(X0,X1), R(X1,X2), R(X2,X0). The term theta^a (x) X_b of
// R(X_i,X_j) is the entry (i, j, a, b).
inline Tensor<Rational> levi_civita_curvature(const DiagonalMetric& g) {
  const Rational &l = g.lambda, &m = g.mu, &n = g.nu;
  Tensor<Rational> r(4);
  auto put = [&](int i, int j, int a, int b, const Rational& v) {
    r(i, j, a, b) = v;
    r(j, i, a, b) = -v;
  };
  put(0, 1, 1, 0, l / n + 2 * m / n - 2 + m * m / (l * n) + 2 * m / l - 3 * n / l);
  put(0, 1, 0, 1, -l * l / (m * n) - 2 * l / n + 2 * l / m - m / n - 2 + 3 * n / m);
  put(1, 2, 2, 1, -3 * l / m - 2 - 2 * n / m + m / l - 2 * n / l + n * n / (l * m));
  put(1, 2, 1, 2, 3 * l / n + 2 * m / n + 2 - m * m / (l * n) + 2 * m / l - n / l);
  put(2, 0, 2, 0, -l / m + 2 - 2 * n / m + 3 * m / l - 2 * n / l - n * n / (l * m));
  put(2, 0, 0, 2, l * l / (m * n) - 2 * l / n + 2 * l / m - 3 * m / n + 2 + n / m);
  return r;
}

// Canonical connection nabla - S_lambda(t) on mu = nu:
// omega~^1_2 = -((lambda + 2mu - t)/mu) theta^0 = -omega~^2_1.
inline Tensor<Rational> slambda_gamma(const DiagonalMetric& g, const Rational& t) {
  Tensor<Rational> gm(3);
  Rational w = -(g.lambda + 2 * g.mu - t) / g.mu;
  gm(0, 2, 1) = w;
  gm(0, 1, 2) = -w;
  return gm;
}

// R~(X1,X2) = (2(lambda + 2mu - t)/mu)(theta^1 (x) X2 - theta^2 (x) X1).
inline Tensor<Rational> slambda_curvature(const DiagonalMetric& g, const Rational& t) {
  Tensor<Rational> r(4);
  Rational k = 2 * (g.lambda + 2 * g.mu - t) / g.mu;
  auto put = [&](int i, int j, int a, int b, const Rational& v) {
    r(i, j, a, b) = v;
    r(j, i, a, b) = -v;
  };
  put(1, 2, 1, 2, k);
  put(1, 2, 2, 1, -k);
  return r;
}

// Canonical connection nabla - S_mu(t) on -lambda = nu:
// omega~^0_2 = -((2nu - mu - t)/nu) theta^1 = omega~^2_0.
inline Tensor<Rational> smu_gamma(const DiagonalMetric& g, const Rational& t) {
  Tensor<Rational> gm(3);
  Rational w = -(2 * g.nu - g.mu - t) / g.nu;
  gm(1, 2, 0) = w;
  gm(1, 0, 2) = w;
  return gm;
}

// R~(X2,X0) = (2(2nu - mu - t)/nu)(theta^2 (x) X0 + theta^0 (x) X2).
inline Tensor<Rational> smu_curvature(const DiagonalMetric& g, const Rational& t) {
  Tensor<Rational> r(4);
  Rational k = 2 * (2 * g.nu - g.mu - t) / g.nu;
  auto put = [&](int i, int j, int a, int b, const Rational& v) {
    r(i, j, a, b) = v;
    r(j, i, a, b) = -v;
  };
  put(2, 0, 2, 0, k);
  put(2, 0, 0, 2, k);
  return r;
}

// The common value of R~^0_101, R~^0_202, R~^1_212 for nabla - S_vol(t) on
// -lambda = mu = nu. The displayed form divides by mu; the two agree only at mu = 1.
inline Rational svol_curvature_value(const DiagonalMetric& g, const Rational& t) {
  return -(g.mu - t) * (g.mu + t) / (g.mu * g.mu);
}

inline Rational svol_curvature_value_displayed(const DiagonalMetric& g, const Rational& t) {
  return -(g.mu - t) * (g.mu + t) / g.mu;
}

}  // namespace homstruct::reference
