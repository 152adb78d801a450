#pragma once

#include <unordered_map>

#include "nbe/ncalg/presentation.hpp"

namespace nbe {

/// Rewriting engine for one presentation. Normal forms are built by left
/// multiplication of a letter onto a PBW monomial, moving the letter past
/// smaller generators with the commutation rules; results are memoized per
/// engine instance, so an engine is cheap to reuse and must not be shared
/// between threads.
class PbwRing {
 public:
  /// Letter code for the inverse of the invertible generator.
  static constexpr int kInverse = -1;

  explicit PbwRing(AlgebraPresentation presentation);

  const AlgebraPresentation& presentation() const { return P_; }

  NCPoly normal_form(const FreeElement& x);
  NCPoly multiply(const NCPoly& a, const NCPoly& b);
  NCPoly commutator(const NCPoly& a, const NCPoly& b);
  NCPoly power(const NCPoly& a, unsigned e);

  /// letter * x for a generator index or kInverse.
  NCPoly left_multiply(int letter, const NCPoly& x);

  std::size_t rewrite_steps() const { return steps_; }

 private:
  struct Key {
    int letter;
    Monomial mono;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.mono.hash() * 31u + static_cast<std::size_t>(k.letter + 1);
    }
  };

  const NCPoly& left_mul_mono(int letter, const Monomial& m);
  void accumulate_left(int letter, const NCPoly& x, NCPoly& out, Coef scale);
  NCPoly apply_monomial(const Monomial& word, const NCPoly& x);
  NCPoly shift_inverse(const NCPoly& x) const;

  AlgebraPresentation P_;
  std::unordered_map<Key, NCPoly, KeyHash> cache_;
  std::size_t steps_ = 0;
  int depth_ = 0;
};

NCPoly normal_form(const FreeElement& x, const AlgebraPresentation& P);
NCPoly multiply(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& P);
NCPoly commutator(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& P);

}  // namespace nbe
