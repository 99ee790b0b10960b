#pragma once

// Multivariate polynomials with rational coefficients, sized for the
// degree-2 systems the structure solver produces.

#include "linalg.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace homstruct {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> names) : names_(std::move(names)) {}

  static MultiPoly constant(std::vector<std::string> names, const Rational& c) {
    MultiPoly p(std::move(names));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly var(std::vector<std::string> names, std::size_t i) {
    MultiPoly p(std::move(names));
    Exponents e(p.nvars(), 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
  }
  // sum coeffs[i] x_i + c
  static MultiPoly affine(std::vector<std::string> names, const Vec<Rational>& coeffs, const Rational& c) {
    MultiPoly p(std::move(names));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(p.nvars(), 0);
      e.at(i) = 1;
      p.add_term(e, coeffs[i]);
    }
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars()) throw std::invalid_argument("MultiPoly: exponent arity");
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  bool is_constant() const { return degree() <= 0; }
  Rational constant_term() const { return coeff(Exponents(nvars(), 0)); }

  // Coefficients of x_0..x_{n-1} in the degree-1 part.
  Vec<Rational> linear_coeffs() const {
    Vec<Rational> v(nvars(), Rational(0));
    for (std::size_t i = 0; i < nvars(); ++i) {
      Exponents e(nvars(), 0);
      e[i] = 1;
      v[i] = coeff(e);
    }
    return v;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a.empty_like(b);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.names_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, -c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a.empty_like(b);
    std::size_t n = r.nvars();
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i] = (ea.empty() ? 0 : ea[i]) + (eb.empty() ? 0 : eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& k) {
    MultiPoly r(a.names_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * k);
    return r;
  }
  friend MultiPoly operator*(const Rational& k, const MultiPoly& a) { return a * k; }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

  Rational eval(const Vec<Rational>& x) const {
    if (x.size() != nvars()) throw std::invalid_argument("MultiPoly::eval: arity");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  // Replace x_i by images[i]; all images share one variable list.
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars()) throw std::invalid_argument("MultiPoly::compose: arity");
    std::vector<std::string> out_names = images.empty() ? std::vector<std::string>{} : images[0].names();
    MultiPoly r(out_names);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(out_names, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * images[i];
      r += t;
    }
    return r;
  }

  // Homogenized symmetric matrix H with p(x) = z^T H z, z = (x, 1).
  // Requires degree <= 2.
  Mat<Rational> quadric_matrix() const {
    std::size_t n = nvars();
    auto h = zero_matrix<Rational>(n + 1, n + 1);
    for (const auto& [e, c] : terms_) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < e[i]; ++k) idx.push_back(i);
      if (idx.size() > 2) throw std::invalid_argument("quadric_matrix: degree > 2");
      while (idx.size() < 2) idx.push_back(n);
      if (idx[0] == idx[1]) {
        h[idx[0]][idx[0]] += c;
      } else {
        Rational half = c / 2;
        h[idx[0]][idx[1]] += half;
        h[idx[1]][idx[0]] += half;
      }
    }
    return h;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first, then by exponent order, for readability.
    std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int x : a.first) da += x;
      for (int x : b.first) db += x;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    for (const auto& [e, c] : ts) {
      Rational a = c;
      if (!first) os << (sgn(a) < 0 ? " - " : " + ");
      else if (sgn(a) < 0) os << "-";
      a = homstruct::abs(a);
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) {
          if (!mono.empty()) mono += "*";
          mono += names_[i];
        }
      }
      if (mono.empty()) os << to_pretty(a);
      else if (a == 1) os << mono;
      else os << to_pretty(a) << "*" << mono;
      first = false;
    }
    return os.str();
  }

 private:
  MultiPoly empty_like(const MultiPoly& other) const {
    if (names_.empty() && terms_.empty()) return MultiPoly(other.names_);
    if (!other.names_.empty() && other.names_.size() != names_.size())
      throw std::invalid_argument("MultiPoly: variable lists differ");
    return MultiPoly(names_.empty() ? other.names_ : names_);
  }

  std::vector<std::string> names_;
  std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

struct Factorization {
  Rational constant{1};
  std::vector<MultiPoly> factors;  // p == constant * prod(factors)
};

namespace detail {
// Scale an affine form so its first nonzero coefficient (variables first,
// then the constant) is 1; returns the removed scalar.
inline Rational make_monic(MultiPoly& f) {
  Vec<Rational> lin = f.linear_coeffs();
  Rational lead(0);
  for (const auto& c : lin)
    if (!is_zero(c)) {
      lead = c;
      break;
    }
  if (is_zero(lead)) lead = f.constant_term();
  if (is_zero(lead)) return Rational(1);
  f = f * Rational(1 / lead);
  return lead;
}
}  // namespace detail

// Factor a polynomial of degree <= 2 into affine factors over Q, or nullopt.
inline std::optional<Factorization> factor_affine(const MultiPoly& p) {
  if (p.degree() > 2) throw std::invalid_argument("factor_affine: degree > 2");
  Factorization out;
  if (p.degree() <= 1) {
    out.factors.push_back(p);
    return out;
  }
  const std::size_t n = p.nvars();
  auto h = p.quadric_matrix();
  Mat<Rational> rows = h;
  auto piv = rref(rows);
  auto form = [&](const Vec<Rational>& w) {
    return MultiPoly::affine(p.names(), Vec<Rational>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)), w[n]);
  };
  std::vector<MultiPoly> fs;
  Rational k(1);
  if (piv.size() == 1) {
    std::size_t r = 0;
    while (is_zero_vec(h[r])) ++r;
    MultiPoly l = form(h[r]);
    fs = {l, l};
    k = 1 / h[r][r];
  } else if (piv.size() == 2) {
    const Vec<Rational>& u = rows[0];
    const Vec<Rational>& v = rows[1];
    Rational alpha = h[piv[0]][piv[0]], beta = h[piv[0]][piv[1]], gamma = h[piv[1]][piv[1]];
    MultiPoly a = form(u), b = form(v);
    if (!is_zero(alpha)) {
      auto root = exact_sqrt(Rational(beta * beta - alpha * gamma));
      if (!root) return std::nullopt;
      Rational r1 = (-beta + *root) / alpha, r2 = (-beta - *root) / alpha;
      fs = {a - b * r1, a - b * r2};
      k = alpha;
    } else {
      fs = {b, a * Rational(2 * beta) + b * gamma};
      k = 1;
    }
  } else {
    return std::nullopt;
  }
  for (auto& f : fs) k *= detail::make_monic(f);
  std::sort(fs.begin(), fs.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.to_string() < y.to_string(); });
  MultiPoly prod = MultiPoly::constant(p.names(), k);
  for (const auto& f : fs) prod = prod * f;
  if (!(prod == p)) throw std::logic_error("factor_affine: product check failed for " + p.to_string());
  out.constant = k;
  out.factors = std::move(fs);
  return out;
}

}  // namespace homstruct
