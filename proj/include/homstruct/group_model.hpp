#pragma once

// Exact matrix model of H^3_1 = SU(1,1): points (z1, z2) with |z1|^2 - |z2|^2 = 1,
// Killing fields of the isometric actions, the Killing-frame expansions of the
// left-invariant fields, the canonical connection read off from the action,
// the double cover onto SO_0(1,2) and the three Hopf maps.

#include "presentation.hpp"
#include "structure.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace homstruct {

// ---- scalars ----

// a + b*eps with eps^2 = 0; used for exact first derivatives.
template <class T>
struct Dual {
  T v{0}, d{0};
  Dual() = default;
  Dual(long x) : v(Rational(x)) {}
  Dual(const Rational& x) : v(x) {}
  Dual(T v_, T d_) : v(std::move(v_)), d(std::move(d_)) {}
  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  friend Dual operator/(const Dual& a, const Dual& b) {
    if (is_zero(b.v)) throw std::domain_error("Dual: division by a nilpotent");
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

template <class T>
bool is_zero(const Dual<T>& x) {
  return is_zero(x.v) && is_zero(x.d);
}

template <class T>
struct Complex {
  T re{0}, im{0};
  Complex() = default;
  Complex(long x) : re(Rational(x)) {}
  Complex(const Rational& x) : re(x) {}
  template <class U = T, class = std::enable_if_t<!std::is_same_v<U, Rational>>>
  Complex(const T& x) : re(x) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  static Complex i() { return {T(0), T(1)}; }
  Complex conj() const { return {re, -im}; }
  T norm2() const { return re * re + im * im; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T n = b.norm2();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

template <class T>
bool is_zero(const Complex<T>& x) {
  return is_zero(x.re) && is_zero(x.im);
}

using GaussianRational = Complex<Rational>;

inline std::string to_string(const GaussianRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  return "(" + to_string(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + to_string(abs(z.im)) + "i)";
}

// ---- 2x2 matrices ----

template <class T>
using Mat2 = std::array<std::array<Complex<T>, 2>, 2>;

template <class T>
Mat2<T> mat2(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d) {
  return {{{a, b}, {c, d}}};
}

template <class T>
Mat2<T> operator*(const Mat2<T>& a, const Mat2<T>& b) {
  Mat2<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

template <class T>
Mat2<T> operator+(const Mat2<T>& a, const Mat2<T>& b) {
  Mat2<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

template <class T>
Mat2<T> operator-(const Mat2<T>& a, const Mat2<T>& b) {
  Mat2<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

template <class T>
Mat2<T> scale(const Mat2<T>& a, const Complex<T>& c) {
  Mat2<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = c * a[i][j];
  return r;
}

// X0 = diag(i, -i), X1 = [[0,1],[1,0]], X2 = [[0,i],[-i,0]].
template <class T = Rational>
Mat2<T> su11_basis(int a) {
  using C = Complex<T>;
  const C o(0), one(1), i = C::i();
  switch (a) {
    case 0: return mat2<T>(i, o, o, -i);
    case 1: return mat2<T>(o, one, one, o);
    default: return mat2<T>(o, i, -i, o);
  }
}

template <class T = Rational>
Mat2<T> su11_element(const std::array<T, 3>& c) {
  Mat2<T> r = scale(su11_basis<T>(0), Complex<T>(c[0]));
  r = r + scale(su11_basis<T>(1), Complex<T>(c[1]));
  return r + scale(su11_basis<T>(2), Complex<T>(c[2]));
}

// Coordinates on X0, X1, X2 of an element of su(1,1), or nullopt when the
// matrix is not in su(1,1).
template <class T>
std::optional<std::array<T, 3>> su11_coords(const Mat2<T>& m) {
  if (!is_zero(m[0][0].re) || !is_zero(m[0][0] + m[1][1]) || m[1][0] != m[0][1].conj()) return std::nullopt;
  return std::array<T, 3>{m[0][0].im, m[0][1].re, m[0][1].im};
}

// ---- points ----

template <class T>
struct BasicPoint {
  Complex<T> z1, z2;
  Mat2<T> matrix() const { return mat2<T>(z1, z2, z2.conj(), z1.conj()); }
  T hyperboloid() const { return z1.norm2() - z2.norm2(); }
  BasicPoint inverse() const { return {z1.conj(), -z2}; }
  friend BasicPoint operator*(const BasicPoint& a, const BasicPoint& b) {
    return {a.z1 * b.z1 + a.z2 * b.z2.conj(), a.z1 * b.z2 + a.z2 * b.z1.conj()};
  }
  friend bool operator==(const BasicPoint& a, const BasicPoint& b) { return a.z1 == b.z1 && a.z2 == b.z2; }
};

using GroupPoint = BasicPoint<Rational>;

inline GroupPoint base_point() { return {GaussianRational(1), GaussianRational(0)}; }

inline std::string to_string(const GroupPoint& p) { return "(" + to_string(p.z1) + ", " + to_string(p.z2) + ")"; }

// From a matrix of the form (z1, z2; conj z2, conj z1).
template <class T>
std::optional<BasicPoint<T>> point_from_matrix(const Mat2<T>& m) {
  if (m[1][0] != m[0][1].conj() || m[1][1] != m[0][0].conj()) return std::nullopt;
  return BasicPoint<T>{m[0][0], m[0][1]};
}

template <class T>
BasicPoint<T> lift_point(const GroupPoint& p) {
  return {Complex<T>(T(p.z1.re), T(p.z1.im)), Complex<T>(T(p.z2.re), T(p.z2.im))};
}

// Z (I + eps V): the first-order curve through Z along the left-invariant field V.
inline BasicPoint<Dual<Rational>> along(const GroupPoint& p, const Mat2<Rational>& v) {
  auto zv = p.matrix() * v;
  auto mk = [](const GaussianRational& a, const GaussianRational& b) {
    return Complex<Dual<Rational>>(Dual<Rational>(a.re, b.re), Dual<Rational>(a.im, b.im));
  };
  return {mk(p.z1, zv[0][0]), mk(p.z2, zv[0][1])};
}

inline const std::vector<GroupPoint>& seed_points() {
  static const std::vector<GroupPoint> s{
      {GaussianRational(rat(5, 4)), GaussianRational(rat(3, 4))},
      {GaussianRational(rat(3, 5), rat(4, 5)), GaussianRational(0)},
      {GaussianRational(rat(13, 12)), GaussianRational(0, rat(5, 12))},
  };
  return s;
}

// o first, then distinct words of length 1..4 in the seeds and their inverses.
inline std::vector<GroupPoint> sample_points(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample_points: count must be positive");
  std::vector<GroupPoint> gens;
  for (const auto& s : seed_points()) {
    gens.push_back(s);
    gens.push_back(s.inverse());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::vector<GroupPoint> out{base_point()};
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 100000) throw std::runtime_error("sample_points: could not find enough distinct points");
    GroupPoint p = base_point();
    for (int k = len(rng); k > 0; --k) p = p * gens[pick(rng)];
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

// ---- tangent vectors and Killing fields ----

struct TangentAtPoint {
  GroupPoint base;
  Mat2<Rational> mat;
  // base^-1 mat in su(1,1)
  std::optional<std::array<Rational, 3>> left_coords() const {
    return su11_coords(base.inverse().matrix() * mat);
  }
};

enum class Side { Left, Right };

// Left: one-parameter group exp(s gen) Z, field gen Z.
// Right: Z exp(s gen), field Z gen.
inline TangentAtPoint killing_field(const Mat2<Rational>& gen, Side side, const GroupPoint& z) {
  return {z, side == Side::Left ? gen * z.matrix() : z.matrix() * gen};
}

enum class ActionCase { Trivial, Timelike, SpacelikeNu };

inline std::string action_case_name(ActionCase c) {
  switch (c) {
    case ActionCase::Trivial: return "trivial";
    case ActionCase::Timelike: return "timelike";
    case ActionCase::SpacelikeNu: return "spacelike_nu";
  }
  return "?";
}

// Element A + c C of su(1,1) + R, where C is the extra one-parameter factor
// acting on the right: Z -> Z diag(e^{-is}, e^{is}) (timelike) or
// Z (cosh s, -sinh s; -sinh s, cosh s) (spacelike).
struct AmbientElement {
  std::array<Rational, 3> a{};
  Rational c;
};

// Derivative at s = 0 of the right factor of the extra action.
inline Mat2<Rational> right_generator(ActionCase k) {
  if (k == ActionCase::Timelike) return scale(su11_basis(0), GaussianRational(-1));
  if (k == ActionCase::SpacelikeNu) return scale(su11_basis(1), GaussianRational(-1));
  return scale(su11_basis(0), GaussianRational(0));
}

template <class T>
Mat2<T> killing_matrix(ActionCase k, const AmbientElement& e, const BasicPoint<T>& z) {
  auto conv = [](const Mat2<Rational>& m) {
    Mat2<T> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = Complex<T>(T(m[i][j].re), T(m[i][j].im));
    return r;
  };
  auto zm = z.matrix();
  return conv(su11_element(e.a)) * zm + zm * conv(scale(right_generator(k), GaussianRational(e.c)));
}

// Killing field at o, as coordinates on X0, X1, X2.
inline std::array<Rational, 3> tau_at_origin(ActionCase k, const AmbientElement& e) {
  return *su11_coords(killing_matrix<Rational>(k, e, base_point()));
}

inline AmbientElement ambient_bracket(const AmbientElement& x, const AmbientElement& y) {
  auto alg = StructureConstants::su11();
  AmbientElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r.a[static_cast<std::size_t>(k)] += x.a[static_cast<std::size_t>(i)] * y.a[static_cast<std::size_t>(j)] * alg.c(i, j, k);
  return r;
}

// Killing frame spanning m: {E_t, B1, B2} (timelike), {B0, E_t, B2}
// (spacelike), {B0, B1, B2} (trivial).
inline std::array<AmbientElement, 3> killing_frame(ActionCase k, const DiagonalMetric& g, const Rational& t) {
  auto b = [](int i) {
    AmbientElement e;
    e.a[static_cast<std::size_t>(i)] = 1;
    return e;
  };
  std::array<AmbientElement, 3> f{b(0), b(1), b(2)};
  if (k == ActionCase::Timelike) {
    // E_t = -((2mu + lambda - t)/(2mu)) B3 - ((lambda - t)/(2mu)) B0, B3 the U(1) generator.
    f[0].a = {-(g.lambda - t) / (2 * g.mu), 0, 0};
    f[0].c = -(2 * g.mu + g.lambda - t) / (2 * g.mu);
  } else if (k == ActionCase::SpacelikeNu) {
    // E_t = ((mu + t)/(2nu)) B1 - ((2nu - mu - t)/(2nu)) D.
    f[1].a = {0, (g.mu + t) / (2 * g.nu), 0};
    f[1].c = -(2 * g.nu - g.mu - t) / (2 * g.nu);
  }
  return f;
}

// ---- expansions ----

template <class T>
using Coef3 = std::array<std::array<T, 3>, 3>;

namespace detail {

template <class T>
std::optional<Coef3<T>> inverse3(const Coef3<T>& m) {
  auto c = [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  Coef3<T> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c(r0, c0) * c(r1, c1) - c(r0, c1) * c(r1, c0);
    }
  T det = c(0, 0) * adj[0][0] + c(0, 1) * adj[1][0] + c(0, 2) * adj[2][0];
  T v = det;
  if constexpr (std::is_same_v<T, Dual<Rational>>) v = T(det.v);
  if (is_zero(v)) return std::nullopt;
  for (auto& row : adj)
    for (auto& x : row) x = x / det;
  return adj;
}

}  // namespace detail

// Coefficients F with X_a|_Z = sum_b F[a][b] K_b|_Z, by an exact linear solve.
template <class T>
std::optional<Coef3<T>> solve_expansion(ActionCase k, const DiagonalMetric& g, const Rational& t, const BasicPoint<T>& z) {
  auto frame = killing_frame(k, g, t);
  auto zinv = z.inverse().matrix();
  Coef3<T> km;  // column b = left coordinates of K_b
  for (std::size_t b = 0; b < 3; ++b) {
    auto c = su11_coords(zinv * killing_matrix<T>(k, frame[b], z));
    if (!c) throw std::logic_error("solve_expansion: Killing field not tangent");
    for (std::size_t i = 0; i < 3; ++i) km[i][b] = (*c)[i];
  }
  auto inv = detail::inverse3(km);
  if (!inv) return std::nullopt;
  Coef3<T> f;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) f[a][b] = (*inv)[b][a];
  return f;
}

enum class FormulaVariant { Printed, Corrected };

// The closed forms, row a = expansion of X_a. Printed differs from Corrected
// in g_t and h_2 (timelike) and in g_t, g_2, h_0 (spacelike).
template <class T>
std::optional<Coef3<Complex<T>>> expansion_formulas(ActionCase k, const DiagonalMetric& g, const Rational& t, const BasicPoint<T>& z,
                                           FormulaVariant variant) {
  using C = Complex<T>;
  const C i = C::i();
  const C z1 = z.z1, z2 = z.z2, w1 = z.z1.conj(), w2 = z.z2.conj();
  auto R = [](const Rational& x) { return C(T(x)); };
  auto nonzero = [](const C& x) {
    if constexpr (std::is_same_v<T, Dual<Rational>>)
      return !is_zero(x.re.v) || !is_zero(x.im.v);
    else
      return !is_zero(x);
  };
  std::array<C, 9> e;
  const bool printed = variant == FormulaVariant::Printed;
  if (k == ActionCase::Timelike) {
    const C mu = R(g.mu), a = R(g.lambda - t + g.mu), lt = R(g.lambda - t);
    const C n1 = z1 * w1, n2 = z2 * w2;
    const C den = a * n2 + mu * n1;
    if (!nonzero(den)) return std::nullopt;
    const C two = R(2);
    e[0] = (n2 + n1) * mu / den;
    e[1] = i * lt * (z1 * z2 - w1 * w2) / (two * den);
    e[2] = lt * (z1 * z2 + w1 * w2) / (two * den);
    const C gden = printed ? a * n2 - mu * n1 : den;
    if (!nonzero(gden)) return std::nullopt;
    e[3] = i * (z1 * w2 - w1 * z2) * mu / gden;
    e[4] = (a * (z2 * z2 + w2 * w2) + mu * (z1 * z1 + w1 * w1)) / (two * den);
    e[5] = -(i * (a * (z2 * z2 - w2 * w2) + mu * (z1 * z1 - w1 * w1))) / (two * den);
    e[6] = -((z2 * w1 + z1 * w2) * mu) / den;
    e[7] = -(i * (a * (z2 * z2 - w2 * w2) - mu * (z1 * z1 - w1 * w1))) / (two * den);
    const C h2 = (mu * (z1 * z1 + w1 * w1) - a * (z2 * z2 + w2 * w2)) / (two * den);
    e[8] = printed ? -h2 : h2;
  } else if (k == ActionCase::SpacelikeNu) {
    const C mt = R(g.mu + t), nu = R(g.nu), p = R(t - 2 * g.nu + g.mu), two = R(2);
    const C q = z1 * z1 - z2 * z2 + w1 * w1 - w2 * w2;
    const C s = z1 * z1 + z2 * z2 + w1 * w1 + w2 * w2;
    const C n = z1 * w1 + z2 * w2;
    const C den = q * p - two * mt;
    if (!nonzero(den)) return std::nullopt;
    e[0] = (s * p - two * mt * n) / den;
    e[1] = R(4) * i * nu * (z1 * z2 - w1 * w2) / den;
    e[2] = two * (mt * (z1 * z2 + w1 * w2 - w1 * z2 - z1 * w2) + two * nu * (z1 * w2 + w1 * z2)) / den;
    e[3] = -(two * i * mt * (z1 * w2 - w1 * z2)) / den;
    const C gq = printed ? z1 * z1 - z2 + w1 * w1 - w2 * w2 : q;
    e[4] = -(two * nu * gq) / den;
    const C g2 = printed ? q : z1 * z1 - z2 * z2 - w1 * w1 + w2 * w2;
    e[5] = i * mt * g2 / den;
    const C cross = printed ? z1 * w2 + w2 * z1 : z1 * w2 + w1 * z2;
    e[6] = -(two * (mt * (z1 * z2 + w1 * w2 - cross) - two * nu * (z1 * z2 + w1 * w2))) / den;
    e[7] = -(two * i * nu * (z1 * z1 + z2 * z2 - w1 * w1 - w2 * w2)) / den;
    e[8] = -(two * R(2 * g.nu - g.mu - t) * n + mt * s) / den;
  } else {
    throw std::invalid_argument("expansion_formulas: no closed forms for the trivial action");
  }
  Coef3<C> f;
  for (std::size_t r = 0; r < 9; ++r) f[r / 3][r % 3] = e[r];
  return f;
}

inline const std::array<std::string, 9>& coefficient_names(ActionCase k) {
  static const std::array<std::string, 9> tl{"f_t", "f_1", "f_2", "g_t", "g_1", "g_2", "h_t", "h_1", "h_2"};
  static const std::array<std::string, 9> sp{"f_0", "f_t", "f_2", "g_0", "g_t", "g_2", "h_0", "h_t", "h_2"};
  return k == ActionCase::Timelike ? tl : sp;
}

struct ExpansionReport {
  ActionCase action = ActionCase::Timelike;
  FormulaVariant variant = FormulaVariant::Corrected;
  int points_checked = 0, points_skipped = 0;
  std::array<int, 9> mismatches{};  // per coefficient
  std::string first_mismatch;
  bool ok() const {
    for (int m : mismatches)
      if (m) return false;
    return points_checked > 0;
  }
};

inline ExpansionReport verify_expansion(ActionCase k, const DiagonalMetric& g, const Rational& t, const std::vector<GroupPoint>& pts,
                                        FormulaVariant variant = FormulaVariant::Corrected) {
  ExpansionReport rep;
  rep.action = k;
  rep.variant = variant;
  for (const auto& p : pts) {
    auto solved = solve_expansion<Rational>(k, g, t, p);
    auto closed = expansion_formulas<Rational>(k, g, t, p, variant);
    if (!solved || !closed) {
      ++rep.points_skipped;
      continue;
    }
    ++rep.points_checked;
    for (std::size_t r = 0; r < 9; ++r)
      if (GaussianRational((*solved)[r / 3][r % 3]) != (*closed)[r / 3][r % 3]) {
        ++rep.mismatches[r];
        if (rep.first_mismatch.empty())
          rep.first_mismatch = coefficient_names(k)[r] + " at " + to_string(p) + ": solved " + to_string((*solved)[r / 3][r % 3]) +
                               ", closed form " + to_string((*closed)[r / 3][r % 3]);
      }
  }
  return rep;
}

// ---- canonical connection from the action ----

inline Family action_family(ActionCase k) {
  switch (k) {
    case ActionCase::Timelike: return Family::Slambda;
    case ActionCase::SpacelikeNu: return Family::Smu;
    default: return Family::S0;
  }
}

struct ActionConnectionReport {
  Tensor<Rational> from_solve{3}, from_formulas{3}, expected{3};
  bool formulas_used = false;
  bool ok() const { return from_solve == expected && (!formulas_used || from_formulas == expected); }
};

namespace detail {

// nabla~_{X_a} X_c at o = sum_b X_a(F_cb) K_b(o) + sum_{b,d} F_cb F_ad (-[m_d, m_b])^*(o).
inline Tensor<Rational> connection_at_origin(ActionCase k, const DiagonalMetric& g, const Rational& t,
                                             const std::array<Coef3<Dual<Rational>>, 3>& along_a) {
  auto frame = killing_frame(k, g, t);
  std::array<std::array<Rational, 3>, 3> tau;
  for (std::size_t b = 0; b < 3; ++b) tau[b] = tau_at_origin(k, frame[b]);
  Tensor<Rational> gam(3);
  for (int a = 0; a < 3; ++a) {
    const auto& fa = along_a[static_cast<std::size_t>(a)];
    for (int c = 0; c < 3; ++c) {
      std::array<Rational, 3> v{};
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t m = 0; m < 3; ++m) v[m] += fa[static_cast<std::size_t>(c)][b].d * tau[b][m];
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t d = 0; d < 3; ++d) {
          Rational coef = fa[static_cast<std::size_t>(c)][b].v * fa[static_cast<std::size_t>(a)][d].v;
          if (is_zero(coef)) continue;
          auto br = tau_at_origin(k, ambient_bracket(frame[d], frame[b]));
          for (std::size_t m = 0; m < 3; ++m) v[m] -= coef * br[m];
        }
      for (int m = 0; m < 3; ++m) gam(a, c, m) = v[static_cast<std::size_t>(m)];
    }
  }
  return gam;
}

}  // namespace detail

inline ActionConnectionReport connection_from_action(ActionCase k, const DiagonalMetric& g, const Rational& t) {
  ActionConnectionReport rep;
  std::array<Coef3<Dual<Rational>>, 3> solved, closed;
  rep.formulas_used = k != ActionCase::Trivial;
  for (int a = 0; a < 3; ++a) {
    auto z = along(base_point(), su11_basis(a));
    auto s = solve_expansion<Dual<Rational>>(k, g, t, z);
    if (!s) throw std::domain_error("connection_from_action: singular Killing frame at o");
    solved[static_cast<std::size_t>(a)] = *s;
    if (rep.formulas_used) {
      auto c = expansion_formulas<Dual<Rational>>(k, g, t, z, FormulaVariant::Corrected);
      if (!c) throw std::domain_error("connection_from_action: closed forms singular at o");
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const auto& x = (*c)[i][j];
          if (!is_zero(x.im)) throw std::logic_error("connection_from_action: closed form not real");
          closed[static_cast<std::size_t>(a)][i][j] = x.re;
        }
    }
  }
  rep.from_solve = detail::connection_at_origin(k, g, t, solved);
  if (rep.formulas_used) rep.from_formulas = detail::connection_at_origin(k, g, t, closed);
  Rational tt = k == ActionCase::Trivial ? Rational(0) : t;
  rep.expected = canonical_connection<Rational>(g, catalog_family(action_family(k), g, tt)).gamma;
  return rep;
}

// ---- double cover and Hopf maps ----

// The displayed matrix A_(z1,z2).
inline Mat<Rational> double_cover_matrix(const GroupPoint& p) {
  const auto z1 = p.z1, z2 = p.z2, w1 = p.z1.conj(), w2 = p.z2.conj();
  const GaussianRational i = GaussianRational::i();
  auto a = zero_matrix<Rational>(3, 3);
  a[0][0] = z1.norm2() + z2.norm2();
  a[0][1] = 2 * (-(i * w1 * z2)).re;
  a[0][2] = 2 * (-(i * w1 * z2)).im;
  a[1][0] = -2 * (i * z1 * z2).re;
  a[1][1] = (z1 * z1 - z2 * z2).re;
  a[1][2] = (w1 * w1 + w2 * w2).im;
  a[2][0] = -2 * (i * z1 * z2).im;
  a[2][1] = (z1 * z1 - z2 * z2).im;
  a[2][2] = (w1 * w1 + w2 * w2).re;
  return a;
}

// Ad_Z on su(1,1) in the basis X0, X1, X2: column j = coordinates of Z X_j Z^-1.
inline Mat<Rational> adjoint_matrix(const GroupPoint& p) {
  auto a = zero_matrix<Rational>(3, 3);
  auto z = p.matrix(), zi = p.inverse().matrix();
  for (std::size_t j = 0; j < 3; ++j) {
    auto c = *su11_coords(z * su11_basis(static_cast<int>(j)) * zi);
    for (std::size_t i = 0; i < 3; ++i) a[i][j] = c[i];
  }
  return a;
}

inline CheckResult check_so012(const Mat<Rational>& a) {
  auto eta = zero_matrix<Rational>(3, 3);
  eta[0][0] = -1, eta[1][1] = 1, eta[2][2] = 1;
  auto at = zero_matrix<Rational>(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) at[i][j] = a[j][i];
  if (matmul(matmul(at, eta), a) != eta) return CheckResult::fail("does not preserve diag(-1,1,1)");
  Rational det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                 a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (det != 1) return CheckResult::fail("determinant " + to_string(det));
  if (sgn(a[0][0]) <= 0) return CheckResult::fail("reverses time orientation");
  return CheckResult::pass();
}

enum class HopfMap { Pi0, Pi1, PiPlus };

inline std::string hopf_name(HopfMap h) {
  switch (h) {
    case HopfMap::Pi0: return "pi0";
    case HopfMap::Pi1: return "pi1";
    case HopfMap::PiPlus: return "piplus";
  }
  return "?";
}

// Real coordinates of the image. pi0 = 1/2(|z1|^2+|z2|^2, -2i z1 z2),
// pi1 = 1/2(2 Im(conj z1 z2), z1^2 - z2^2), piplus = z1 - i z2.
template <class T>
std::vector<T> hopf_map(HopfMap h, const BasicPoint<T>& p) {
  using C = Complex<T>;
  const C z1 = p.z1, z2 = p.z2, i = C::i();
  const T half = T(rat(1, 2));
  switch (h) {
    case HopfMap::Pi0: {
      C y = -(i * z1 * z2);
      return {half * (z1.norm2() + z2.norm2()), y.re, y.im};
    }
    case HopfMap::Pi1: {
      C y = z1 * z1 - z2 * z2;
      return {(z1.conj() * z2).im, half * y.re, half * y.im};
    }
    case HopfMap::PiPlus: {
      C y = z1 - i * z2;
      return {y.re, y.im};
    }
  }
  return {};
}

// The fibre direction as a left-invariant field (X0, X1, X0 + X1).
inline Mat2<Rational> hopf_fiber(HopfMap h) {
  switch (h) {
    case HopfMap::Pi0: return su11_basis(0);
    case HopfMap::Pi1: return su11_basis(1);
    case HopfMap::PiPlus: return su11_basis(0) + su11_basis(1);
  }
  return su11_basis(0);
}

inline std::vector<Rational> hopf_differential(HopfMap h, const GroupPoint& p, const Mat2<Rational>& v) {
  auto img = hopf_map(h, along(p, v));
  std::vector<Rational> d;
  for (const auto& x : img) d.push_back(x.d);
  return d;
}

// Ambient metrics of the images: -dt^2 + |dy|^2 for pi0, dx^2 - |dy|^2 for pi1.
inline Rational hopf_image_metric(HopfMap h, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (h == HopfMap::Pi0) return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  if (h == HopfMap::Pi1) return u[0] * v[0] - u[1] * v[1] - u[2] * v[2];
  throw std::invalid_argument("hopf_image_metric: piplus is not a pseudo-Riemannian submersion");
}

struct HopfReport {
  std::string which;
  int points = 0;
  CheckResult kernel, isometry;
  bool ok() const { return kernel.ok && isometry.ok && points > 0; }
};

inline HopfReport hopf_check(HopfMap h, const std::vector<GroupPoint>& pts) {
  HopfReport r;
  r.which = hopf_name(h);
  for (const auto& p : pts) {
    ++r.points;
    auto d = hopf_differential(h, p, hopf_fiber(h));
    for (const auto& x : d)
      if (!is_zero(x) && r.kernel.ok) r.kernel = CheckResult::fail("fibre direction not in the kernel at " + to_string(p));
    if (h == HopfMap::PiPlus) continue;
    // Horizontal frame: the two remaining basis fields, orthonormal for diag(-1,1,1).
    std::array<int, 2> hz = h == HopfMap::Pi0 ? std::array<int, 2>{1, 2} : std::array<int, 2>{0, 2};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        auto u = hopf_differential(h, p, su11_basis(hz[static_cast<std::size_t>(x)]));
        auto v = hopf_differential(h, p, su11_basis(hz[static_cast<std::size_t>(y)]));
        Rational want = x != y ? Rational(0) : (hz[static_cast<std::size_t>(x)] == 0 ? Rational(-1) : Rational(1));
        if (hopf_image_metric(h, u, v) != want && r.isometry.ok)
          r.isometry = CheckResult::fail("horizontal frame not isometric at " + to_string(p));
      }
  }
  return r;
}

struct DoubleCoverReport {
  int points = 0, pairs = 0;
  CheckResult in_so012, homomorphism, kernel, adjoint;
  bool ok() const { return in_so012.ok && homomorphism.ok && kernel.ok && adjoint.ok && pairs > 0; }
};

inline DoubleCoverReport double_cover_check(const std::vector<GroupPoint>& pts) {
  DoubleCoverReport r;
  for (const auto& p : pts) {
    ++r.points;
    auto a = double_cover_matrix(p);
    if (auto c = check_so012(a); !c && r.in_so012.ok) r.in_so012 = CheckResult::fail(to_string(p) + ": " + c.detail);
    GroupPoint m{-p.z1, -p.z2};
    if (double_cover_matrix(m) != a && r.kernel.ok) r.kernel = CheckResult::fail("A_{-Z} != A_Z at " + to_string(p));
    if (adjoint_matrix(p) != a && r.adjoint.ok) r.adjoint = CheckResult::fail("A_Z != Ad_Z at " + to_string(p));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i * 7 + 3) % pts.size()];
    ++r.pairs;
    if (double_cover_matrix(p * q) != matmul(double_cover_matrix(p), double_cover_matrix(q)) && r.homomorphism.ok)
      r.homomorphism = CheckResult::fail("A_{ZW} != A_Z A_W at " + to_string(p) + ", " + to_string(q));
  }
  return r;
}

}  // namespace homstruct
