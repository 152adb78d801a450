#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nbe/linalg/prime_field.hpp"

namespace nbe {

/// The finite field F_q, q = p^k, with elements encoded as integers whose
/// base-p digits are the coefficients of a polynomial in a primitive root.
/// Multiplication goes through log/exp tables and addition through Zech
/// logarithms (XOR for p = 2); q is capped at 2^20.
class ExtField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  ExtField(Coef p, int k);
  /// Smallest field F_{p^k} with at least min_order elements.
  static ExtField with_order_at_least(Coef p, std::uint64_t min_order);

  Coef p() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_prime(Coef c) const { return c % p_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// y^{p^j}.
  Elem frobenius(Elem a, int j) const;

  /// Elements fixed by Frobenius are exactly the prime field.
  bool in_prime_field(Elem a) const { return a < p_; }
  Elem random(std::mt19937_64& rng) const { return static_cast<Elem>(rng() % q_); }

 private:
  Coef p_;
  int k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;
  std::vector<std::uint32_t> zech_;
};

}  // namespace nbe
