#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "nbe/localring/fd_algebra.hpp"

// Element-level brute force over algebras with at most 256 elements. A
// subspace is the set of its elements, so nothing here touches echelon
// forms or the library's ideal arithmetic.
namespace oracle {

using ElementSet = std::bitset<256>;

class ElementTable {
 public:
  explicit ElementTable(const nbe::FinDimAlgebra& A);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * n_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * n_ + b]; }
  unsigned scale(unsigned c, unsigned a) const;
  unsigned encode(const nbe::FpVector& v) const;
  nbe::FpVector decode(unsigned a) const;
  unsigned basis(std::size_t i) const { return basis_[i]; }
  unsigned unit() const { return unit_; }

  /// Additive closure (F_p span) of a set of elements.
  ElementSet span(const ElementSet& gens) const;
  bool is_left_ideal(const ElementSet& S) const;
  bool is_two_sided_ideal(const ElementSet& S) const;
  bool is_nilpotent(unsigned a) const;
  /// All subspaces, each as its element set.
  std::vector<ElementSet> all_subspaces() const;
  /// Span of all x * y, x in I, y in J.
  ElementSet product(const ElementSet& I, const ElementSet& J) const;

 private:
  nbe::Coef p_;
  std::size_t d_;
  std::size_t n_;
  std::vector<std::uint8_t> add_, mul_;
  std::vector<unsigned> basis_;
  unsigned unit_;
};

ElementSet to_set(const ElementTable& T, const nbe::Subspace& S);

/// {x : x y nilpotent for every y}.
ElementSet radical_by_nilpotence(const ElementTable& T);
std::vector<ElementSet> maximal_left_ideals(const ElementTable& T);
std::vector<ElementSet> maximal_two_sided_ideals(const ElementTable& T);
ElementSet intersection(const std::vector<ElementSet>& sets, std::size_t n);

/// Least k >= 1 with I^k inside target, or nullopt when powers stabilize.
std::optional<int> least_power_inside(const ElementTable& T, const ElementSet& I, const ElementSet& target);

}  // namespace oracle
