#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>

#include "nbe/error.hpp"

namespace nbe {

inline constexpr std::size_t kMaxGenerators = 8;

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// PBW monomial g_0^{e_0} g_1^{e_1} ... in presentation order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t ngens) : n_(static_cast<std::uint8_t>(ngens)) {
    if (ngens > kMaxGenerators) throw Unsupported("at most 8 generators are supported");
  }

  static Monomial generator(std::size_t ngens, std::size_t index, int power = 1) {
    Monomial m(ngens);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }

  void set(std::size_t i, int v) {
    if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
      throw TooLarge("monomial exponent overflow");
    e_[i] = static_cast<std::int16_t>(v);
  }
  void add(std::size_t i, int delta) { set(i, e_[i] + delta); }

  int total_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }

  int weighted_degree(std::span<const int> weights) const {
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i] * weights[i];
    return d;
  }

  bool is_one() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  /// Index of the first generator with a nonzero exponent, or size().
  std::size_t leading_index() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0) return i;
    return n_;
  }

  Monomial operator+(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i)
      h = h * 1000003u ^ static_cast<std::uint16_t>(e_[i]);
    return h;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::int16_t, kMaxGenerators> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace nbe
