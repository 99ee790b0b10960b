#pragma once

// Seeded rational sampling of metric parameters.

#include "rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace homstruct {

enum class MetricCase { Generic, Timelike, SpacelikeNu, SpacelikeMu, Symmetric };

inline const std::array<MetricCase, 5>& all_cases() {
  static const std::array<MetricCase, 5> cs{MetricCase::Generic, MetricCase::Timelike, MetricCase::SpacelikeNu,
                                            MetricCase::SpacelikeMu, MetricCase::Symmetric};
  return cs;
}

inline std::string case_name(MetricCase c) {
  switch (c) {
    case MetricCase::Generic: return "generic";
    case MetricCase::Timelike: return "timelike";
    case MetricCase::SpacelikeNu: return "spacelike-nu";
    case MetricCase::SpacelikeMu: return "spacelike-mu";
    case MetricCase::Symmetric: return "symmetric";
  }
  return "?";
}

inline std::optional<MetricCase> parse_case(const std::string& s) {
  for (auto c : all_cases())
    if (case_name(c) == s) return c;
  return std::nullopt;
}

// Which side of zero lambda may fall on, where the case leaves it free.
enum class LambdaSign { Any, Negative, Positive };

struct MetricParams {
  Rational lambda, mu, nu;
  friend bool operator==(const MetricParams& a, const MetricParams& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
  }
};

struct SampleOptions {
  bool perfect_squares = false;
  LambdaSign lambda_sign = LambdaSign::Any;
};

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  // p/q with p in [-1000, 1000], q in [1, 1000].
  Rational any() {
    std::uniform_int_distribution<long> pd(-1000, 1000), qd(1, 1000);
    long p = pd(rng_);
    long q = qd(rng_);
    return rat(p, q);
  }
  Rational nonzero() {
    for (;;) {
      Rational r = any();
      if (!is_zero(r)) return r;
    }
  }
  Rational positive() { return abs(nonzero()); }
  // Positive; a square of a rational when `square` is set.
  Rational positive_maybe_square(bool square) {
    if (!square) return positive();
    // Keep the square's height comparable to a plain draw.
    std::uniform_int_distribution<long> pd(1, 40), qd(1, 40);
    long p = pd(rng_), q = qd(rng_);
    return rat(p * p, q * q);
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool satisfies_case(const MetricParams& p, MetricCase c) {
  if (is_zero(p.lambda) || sgn(p.mu) <= 0 || sgn(p.nu) <= 0) return false;
  Rational ml = -p.lambda;
  switch (c) {
    case MetricCase::Generic: return ml != p.mu && ml != p.nu && p.mu != p.nu;
    case MetricCase::Timelike: return p.mu == p.nu && ml != p.mu;
    case MetricCase::SpacelikeNu: return ml == p.nu && p.nu != p.mu;
    case MetricCase::SpacelikeMu: return ml == p.mu && p.mu != p.nu;
    case MetricCase::Symmetric: return ml == p.mu && p.mu == p.nu;
  }
  return false;
}

inline MetricCase classify(const MetricParams& p) {
  for (auto c : all_cases())
    if (satisfies_case(p, c)) return c;
  throw std::invalid_argument("classify: degenerate metric parameters");
}

inline std::vector<MetricParams> sample_params(MetricCase c, std::uint64_t seed, int count,
                                               SampleOptions opt = {}) {
  if (count <= 0) throw std::invalid_argument("sample_params: count must be positive");
  if (opt.lambda_sign == LambdaSign::Positive && c != MetricCase::Generic && c != MetricCase::Timelike)
    throw std::invalid_argument("sample_params: case forces lambda < 0");
  RationalSampler s(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(c) + 1)));
  std::vector<MetricParams> out;
  auto free_lambda = [&]() {
    Rational m = s.positive_maybe_square(opt.perfect_squares);
    bool neg = opt.lambda_sign == LambdaSign::Negative || (opt.lambda_sign == LambdaSign::Any && s.coin());
    return neg ? Rational(-m) : m;
  };
  while (static_cast<int>(out.size()) < count) {
    MetricParams p;
    switch (c) {
      case MetricCase::Generic:
        p.lambda = free_lambda();
        p.mu = s.positive_maybe_square(opt.perfect_squares);
        p.nu = s.positive_maybe_square(opt.perfect_squares);
        break;
      case MetricCase::Timelike:
        p.lambda = free_lambda();
        p.mu = s.positive_maybe_square(opt.perfect_squares);
        p.nu = p.mu;
        break;
      case MetricCase::SpacelikeNu:
        p.nu = s.positive_maybe_square(opt.perfect_squares);
        p.lambda = -p.nu;
        p.mu = s.positive_maybe_square(opt.perfect_squares);
        break;
      case MetricCase::SpacelikeMu:
        p.mu = s.positive_maybe_square(opt.perfect_squares);
        p.lambda = -p.mu;
        p.nu = s.positive_maybe_square(opt.perfect_squares);
        break;
      case MetricCase::Symmetric:
        p.mu = s.positive_maybe_square(opt.perfect_squares);
        p.nu = p.mu;
        p.lambda = -p.mu;
        break;
    }
    if (!satisfies_case(p, c)) continue;
    if (opt.lambda_sign == LambdaSign::Positive && sgn(p.lambda) < 0) continue;
    if (opt.lambda_sign == LambdaSign::Negative && sgn(p.lambda) > 0) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace homstruct
