#pragma once

// Homogeneous structures S = rho (x) th0^th1 + sigma (x) th1^th2 + tau (x) th2^th0
// with constant coefficients, and the catalog of known families.

#include "lie.hpp"
#include "linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace homstruct {

enum class Family { S0, Slambda, Smu, Snu, Svol, SnullMinus, SnullPlus, Raw };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::S0: return "S0";
    case Family::Slambda: return "Slambda";
    case Family::Smu: return "Smu";
    case Family::Snu: return "Snu";
    case Family::Svol: return "Svol";
    case Family::SnullMinus: return "SnullMinus";
    case Family::SnullPlus: return "SnullPlus";
    case Family::Raw: return "Raw";
  }
  return "?";
}

inline const std::array<Family, 7>& catalog_families() {
  static const std::array<Family, 7> fs{Family::S0,   Family::Slambda,    Family::Smu,      Family::Snu,
                                        Family::Svol, Family::SnullMinus, Family::SnullPlus};
  return fs;
}

inline std::optional<Family> parse_family(const std::string& s) {
  for (auto f : catalog_families())
    if (family_name(f) == s) return f;
  return std::nullopt;
}

// Coefficient order (rho0, rho1, rho2, sigma0, sigma1, sigma2, tau0, tau1, tau2).
enum Coef { kRho0, kRho1, kRho2, kSig0, kSig1, kSig2, kTau0, kTau1, kTau2 };
constexpr int kNumCoeffs = 9;

inline const std::vector<std::string>& coeff_names() {
  static const std::vector<std::string> n{"rho0", "rho1", "rho2", "sigma0", "sigma1", "sigma2", "tau0", "tau1", "tau2"};
  return n;
}

template <class R>
using Coeffs = std::array<R, kNumCoeffs>;

struct HomogeneousStructure {
  Coeffs<Rational> coeffs{};
  Family family = Family::Raw;
  std::optional<Rational> t;
  std::vector<std::string> warnings;

  Vec<Rational> vec() const { return Vec<Rational>(coeffs.begin(), coeffs.end()); }
  static HomogeneousStructure raw(const Vec<Rational>& v) {
    HomogeneousStructure s;
    for (int i = 0; i < kNumCoeffs; ++i) s.coeffs[static_cast<std::size_t>(i)] = v.at(static_cast<std::size_t>(i));
    return s;
  }
};

// (0,3) tensor S(X_i, X_j, X_k) for a coefficient vector over any ring.
template <class R>
Tensor<R> structure_tensor03(const Coeffs<R>& x) {
  Tensor<R> s(3);
  // pairs (a,b) with coefficient blocks rho -> (0,1), sigma -> (1,2), tau -> (2,0)
  const int pa[3] = {0, 1, 2}, pb[3] = {1, 2, 0};
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < kDim; ++i) {
      const R& c = x[static_cast<std::size_t>(3 * block + i)];
      if (is_zero(c)) continue;
      s(i, pa[block], pb[block]) = s(i, pa[block], pb[block]) + c;
      s(i, pb[block], pa[block]) = s(i, pb[block], pa[block]) - c;
    }
  return s;
}

// (1,2) form S^k_ij: S_{X_i} X_j = sum_k S^k_ij X_k, from S(X,Y,Z) = g(S_X Y, Z).
template <class R>
Tensor<R> structure_tensor12(const Coeffs<R>& x, const DiagonalMetric& g) {
  Tensor<R> s = structure_tensor03(x);
  for (std::size_t f = 0; f < s.e.size(); ++f) {
    auto idx = s.unflat(f);
    if (!is_zero(s.e[f])) s.e[f] = s.e[f] * Rational(1 / g.g(idx[2]));
  }
  return s;
}

template <class F>
Coeffs<F> coeffs_as(const HomogeneousStructure& s) {
  Coeffs<F> c;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = from_rational<F>(s.coeffs[i]);
  return c;
}

// Canonical connection nabla - S.
template <class F = Rational>
Connection<F> canonical_connection(const DiagonalMetric& g, const HomogeneousStructure& s) {
  auto lc = koszul_connection(StructureConstants::su11(), g);
  auto s12 = structure_tensor12(coeffs_as<F>(s), g);
  Connection<F> c;
  for (std::size_t f = 0; f < c.gamma.e.size(); ++f) c.gamma.e[f] = from_rational<F>(lc.gamma.e[f]) - s12.e[f];
  return c;
}

inline bool family_valid_for(Family f, MetricCase c) {
  switch (f) {
    case Family::S0: return true;
    case Family::Slambda: return c == MetricCase::Timelike || c == MetricCase::Symmetric;
    case Family::Smu: return c == MetricCase::SpacelikeNu || c == MetricCase::Symmetric;
    case Family::Snu: return c == MetricCase::SpacelikeMu || c == MetricCase::Symmetric;
    case Family::Svol:
    case Family::SnullMinus:
    case Family::SnullPlus: return c == MetricCase::Symmetric;
    case Family::Raw: return false;
  }
  return false;
}

inline std::vector<Family> families_for(MetricCase c) {
  std::vector<Family> out;
  for (auto f : catalog_families())
    if (family_valid_for(f, c)) out.push_back(f);
  return out;
}

// The excluded value of t (where the family degenerates), if any.
inline std::optional<Rational> excluded_t(Family f, const DiagonalMetric& g) {
  switch (f) {
    case Family::Slambda: return Rational(g.lambda + 2 * g.mu);
    case Family::Smu: return Rational(2 * g.nu - g.mu);
    case Family::Snu: return Rational(2 * g.mu - g.nu);
    case Family::Svol: return g.mu;
    case Family::SnullMinus:
    case Family::SnullPlus: return Rational(0);
    default: return std::nullopt;
  }
}

// Coefficients as an affine function of t: base + t * dir. S0 has dir = 0.
struct FamilyLine {
  Vec<Rational> base, dir;
};

inline FamilyLine family_line(Family f, const DiagonalMetric& g) {
  const Rational &l = g.lambda, &m = g.mu, &n = g.nu;
  FamilyLine fl{Vec<Rational>(kNumCoeffs, Rational(0)), Vec<Rational>(kNumCoeffs, Rational(0))};
  auto& b = fl.base;
  auto& d = fl.dir;
  switch (f) {
    case Family::S0:
      b[kRho2] = -(l - m + n);
      b[kSig0] = l + m + n;
      b[kTau1] = -(l + m - n);
      break;
    case Family::Slambda:
      b[kRho2] = -l;
      d[kSig0] = 1;
      b[kTau1] = -l;
      break;
    case Family::Smu:
      b[kRho2] = m;
      b[kSig0] = m;
      d[kTau1] = 1;
      break;
    case Family::Snu:
      d[kRho2] = 1;
      b[kSig0] = n;
      b[kTau1] = n;
      break;
    case Family::Svol:
      d[kRho2] = d[kSig0] = d[kTau1] = 1;
      break;
    case Family::SnullMinus:
    case Family::SnullPlus: {
      // S_null^-(t) carries (mu + t) on sigma0, S_null^+(t) carries (mu - t).
      Rational e = f == Family::SnullMinus ? Rational(1) : Rational(-1);
      b[kRho2] = m;
      b[kSig0] = m;
      d[kSig0] = e;
      d[kSig1] = 1;
      d[kTau0] = -1;
      b[kTau1] = m;
      d[kTau1] = -e;
      break;
    }
    case Family::Raw: throw std::invalid_argument("family_line: Raw");
  }
  return fl;
}

inline HomogeneousStructure catalog_family(Family f, const DiagonalMetric& g, const Rational& t) {
  auto mc = g.metric_case();
  if (!mc) throw std::invalid_argument("catalog_family: metric parameters degenerate");
  if (!family_valid_for(f, *mc))
    throw std::invalid_argument("catalog_family: " + family_name(f) + " not defined for case " + case_name(*mc));
  auto fl = family_line(f, g);
  HomogeneousStructure s;
  for (std::size_t i = 0; i < kNumCoeffs; ++i) s.coeffs[i] = fl.base[i] + t * fl.dir[i];
  s.family = f;
  if (f != Family::S0) s.t = t;
  if (auto ex = excluded_t(f, g); ex && *ex == t)
    s.warnings.push_back("t = " + to_pretty(t) + " is the excluded value for " + family_name(f));
  return s;
}

// The affine set a family sweeps out (a point for S0, else a line).
inline AffineSubspace<Rational> family_affine_set(Family f, const DiagonalMetric& g) {
  auto fl = family_line(f, g);
  AffineSubspace<Rational> a;
  a.n = kNumCoeffs;
  a.base = fl.base;
  if (!is_zero_vec(fl.dir)) a.dirs.push_back(fl.dir);
  a.canonicalize();
  return a;
}

// Value of t with family(t) == x, if x lies on the family.
inline std::optional<Rational> family_parameter(Family f, const DiagonalMetric& g, const Vec<Rational>& x) {
  auto fl = family_line(f, g);
  std::optional<Rational> t;
  for (std::size_t i = 0; i < kNumCoeffs; ++i) {
    if (!is_zero(fl.dir[i])) {
      Rational ti = (x[i] - fl.base[i]) / fl.dir[i];
      if (t && *t != ti) return std::nullopt;
      t = ti;
    }
  }
  Rational tv = t.value_or(Rational(0));
  for (std::size_t i = 0; i < kNumCoeffs; ++i)
    if (x[i] != fl.base[i] + tv * fl.dir[i]) return std::nullopt;
  return tv;
}

inline std::string describe(const Vec<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += coeff_names()[i] + "=" + to_pretty(x[i]);
  }
  return s + ")";
}

}  // namespace homstruct
