#pragma once

// Dense tensors over the three-dimensional frame {X0, X1, X2}.
// Entries may be any ring type with a zero default constructor.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace homstruct {

constexpr int kDim = 3;

inline std::size_t pow3(int r) {
  std::size_t n = 1;
  for (int i = 0; i < r; ++i) n *= kDim;
  return n;
}

template <class R>
struct Tensor {
  int rank = 0;
  std::vector<R> e;

  Tensor() : e(1, R{}) {}
  explicit Tensor(int r) : rank(r), e(pow3(r), R{}) {
    if (r < 0 || r > 5) throw std::invalid_argument("Tensor: rank out of range");
  }

  template <class... I>
  R& operator()(I... idx) {
    return e[flat({static_cast<int>(idx)...})];
  }
  template <class... I>
  const R& operator()(I... idx) const {
    return e[flat({static_cast<int>(idx)...})];
  }

  R& at(const std::vector<int>& idx) { return e[flat(idx)]; }
  const R& at(const std::vector<int>& idx) const { return e[flat(idx)]; }

  std::size_t flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank) throw std::invalid_argument("Tensor: index arity");
    std::size_t f = 0;
    for (int i : idx) {
      if (i < 0 || i >= kDim) throw std::out_of_range("Tensor: index");
      f = f * kDim + static_cast<std::size_t>(i);
    }
    return f;
  }

  std::vector<int> unflat(std::size_t f) const {
    std::vector<int> idx(static_cast<std::size_t>(rank));
    for (int k = rank - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(f % kDim);
      f /= kDim;
    }
    return idx;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.rank == b.rank && a.e == b.e; }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor r(a.rank);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor r(a.rank);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }

  bool is_zero_tensor() const {
    for (const auto& x : e)
      if (!is_zero(x)) return false;
    return true;
  }

  template <class G, class Fn>
  Tensor<G> map(Fn fn) const {
    Tensor<G> r(rank);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = fn(e[i]);
    return r;
  }
};

}  // namespace homstruct
