#pragma once

#include <cstdint>

#include "nbe/error.hpp"

namespace nbe {

using Coef = std::uint8_t;

inline bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

/// Arithmetic in the prime field F_p for the supported moduli.
struct PrimeField {
  Coef p;

  explicit constexpr PrimeField(int modulus) : p(static_cast<Coef>(modulus)) {}

  static PrimeField checked(int modulus) {
    if (!is_supported_prime(modulus)) {
      throw Unsupported("prime modulus must be one of 2, 3, 5, 7");
    }
    return PrimeField(modulus);
  }

  constexpr Coef add(Coef a, Coef b) const { return static_cast<Coef>((a + b) % p); }
  constexpr Coef sub(Coef a, Coef b) const { return static_cast<Coef>((a + p - b) % p); }
  constexpr Coef mul(Coef a, Coef b) const { return static_cast<Coef>((a * b) % p); }
  constexpr Coef neg(Coef a) const { return static_cast<Coef>((p - a) % p); }

  constexpr Coef from_int(long long v) const {
    long long r = v % p;
    return static_cast<Coef>(r < 0 ? r + p : r);
  }

  constexpr Coef pow(Coef a, unsigned long long e) const {
    Coef r = 1 % p;
    Coef b = a;
    while (e != 0) {
      if (e & 1u) r = mul(r, b);
      b = mul(b, b);
      e >>= 1u;
    }
    return r;
  }

  Coef inv(Coef a) const {
    if (a % p == 0) throw InternalInconsistency("inverse of zero in F_p");
    return pow(a, static_cast<unsigned long long>(p - 2));
  }

  constexpr bool operator==(const PrimeField&) const = default;
};

}  // namespace nbe
