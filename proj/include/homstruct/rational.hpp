#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homstruct {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
  if (q == 0) throw std::domain_error("rat: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& x) { return sgn(x); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Always "p/q", including integers ("2/1"), so the report format is uniform.
inline std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Shorter form for human-readable output.
inline std::string to_pretty(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

// Accepts "p", "p/q", with optional leading sign. Rejects q == 0 and junk.
inline std::optional<Rational> parse_rational(std::string_view s) {
  auto digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view body = num;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  if (!digits(body) || !digits(den)) return std::nullopt;
  Integer q{std::string(den)};
  if (q == 0) return std::nullopt;
  std::string ns(num);
  if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
  Rational r{Integer{ns}, q};
  r.canonicalize();
  return r;
}

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  auto p = exact_isqrt(x.get_num());
  if (!p) return std::nullopt;
  auto q = exact_isqrt(x.get_den());
  if (!q) return std::nullopt;
  return Rational(*p, *q);
}

inline bool is_perfect_square(const Rational& x) { return exact_sqrt(x).has_value(); }

inline Rational abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

}  // namespace homstruct
