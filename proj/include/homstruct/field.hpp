#pragma once

// Scalar helpers shared by every field type the library instantiates:
// Rational, QuadExt<Rational>, QuadExt<QuadExt<Rational>>.

#include "rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace homstruct {

// a + b*sqrt(d) over a base field F. d == 0 marks an element of F itself;
// the radicand is carried per element and merged on arithmetic.
template <class F>
struct QuadExt {
  F a{0}, b{0}, d{0};

  QuadExt() = default;
  QuadExt(long v) : a(F(Rational(v))) {}
  QuadExt(const Rational& v) : a(F(v)) {}
  template <class G = F, class = std::enable_if_t<!std::is_same_v<G, Rational>>>
  QuadExt(const F& v) : a(v) {}
  QuadExt(F a_, F b_, F d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (is_zero(d)) {
      if (!is_zero(b)) throw std::logic_error("QuadExt: irrational part without radicand");
    }
  }

  static QuadExt root(const F& d) { return QuadExt(F(Rational(0)), F(Rational(1)), d); }

  bool is_base() const { return is_zero(b); }

  friend F merged(const QuadExt& x, const QuadExt& y) {
    if (is_zero(x.d)) return y.d;
    if (is_zero(y.d)) return x.d;
    if (!(x.d == y.d)) throw std::logic_error("QuadExt: mixing different radicands");
    return x.d;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return norm_d(F(x.a + y.a), F(x.b + y.b), merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return norm_d(F(x.a - y.a), F(x.b - y.b), merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(F(-x.a), F(-x.b), x.d); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    F d = merged(x, y);
    F ra = x.a * y.a + x.b * y.b * d;
    F rb = x.a * y.b + x.b * y.a;
    return norm_d(std::move(ra), std::move(rb), std::move(d));
  }
  QuadExt inverse() const {
    F n = a * a - b * b * d;
    if (is_zero(n)) throw std::domain_error("QuadExt: division by zero");
    return norm_d(F(a / n), F(-b / n), d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a == y.a && x.b == y.b && (is_zero(x.b) || x.d == y.d);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  static QuadExt norm_d(F a_, F b_, F d_) {
    QuadExt r;
    r.a = std::move(a_);
    r.b = std::move(b_);
    r.d = std::move(d_);
    return r;
  }
};

template <class F>
bool is_zero(const QuadExt<F>& x) {
  return is_zero(x.a) && is_zero(x.b);
}

template <class F>
std::string to_pretty(const QuadExt<F>& x) {
  if (is_zero(x.b)) return to_pretty(x.a);
  return "(" + to_pretty(x.a) + " + " + to_pretty(x.b) + "*sqrt(" + to_pretty(x.d) + "))";
}

template <class F>
std::ostream& operator<<(std::ostream& os, const QuadExt<F>& x) {
  return os << to_pretty(x);
}

// Square root inside the field, if it exists there.
inline std::optional<Rational> try_sqrt(const Rational& x) { return exact_sqrt(x); }

template <class F>
std::optional<QuadExt<F>> try_sqrt(const QuadExt<F>& x) {
  if (!is_zero(x.b)) return std::nullopt;
  if (auto r = try_sqrt(x.a)) return QuadExt<F>(*r);
  if (is_zero(x.d)) return std::nullopt;
  // sqrt(a) = sqrt(a d) / sqrt(d) = (s/d) sqrt(d)
  if (auto s = try_sqrt(F(x.a * x.d))) return QuadExt<F>(F(Rational(0)), F(*s / x.d), x.d);
  return std::nullopt;
}

// sqrt(x) in the field, adjoining sqrt(x) when x is not already a square.
// Only legal when the element has no radicand yet (fresh extension).
template <class F>
QuadExt<F> sqrt_adjoin(const F& x) {
  if (auto r = try_sqrt(x)) return QuadExt<F>(*r);
  return QuadExt<F>::root(x);
}

// Embedding of a rational into any field type.
template <class F>
F from_rational(const Rational& r) {
  if constexpr (std::is_same_v<F, Rational>) {
    return r;
  } else {
    return F(r);
  }
}

// Rational view of a field element (fails if it carries a radical part).
inline std::optional<Rational> as_rational(const Rational& x) { return x; }

template <class F>
std::optional<Rational> as_rational(const QuadExt<F>& x) {
  if (!is_zero(x.b)) return std::nullopt;
  return as_rational(x.a);
}

using Quad1 = QuadExt<Rational>;
using Quad2 = QuadExt<Quad1>;

}  // namespace homstruct
