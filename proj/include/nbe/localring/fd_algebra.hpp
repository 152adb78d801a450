#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nbe/linalg/fp_matrix.hpp"

namespace nbe {

/// Finite-dimensional associative unital algebra over F_p given by
/// structure constants: e_i * e_j = sum_k c(i, j, k) e_k.
class FinDimAlgebra {
 public:
  static constexpr std::size_t kMaxDimension = 40;

  /// constants[i][j] is the coordinate vector of e_i * e_j. Validates
  /// associativity on all basis triples, the unit laws and, when given, that
  /// `central` is a unital subalgebra commuting with everything.
  FinDimAlgebra(Coef p, std::vector<std::vector<FpVector>> constants, FpVector unit,
                std::optional<Subspace> central = std::nullopt, std::string name = {});

  /// Upper triangular n x n matrices; basis E_ij (i <= j) in row-major order.
  static FinDimAlgebra upper_triangular(Coef p, int n);
  /// Full matrix algebra; basis E_ij in row-major order.
  static FinDimAlgebra full_matrix(Coef p, int n);
  /// F_p[x]/(x^k) with basis 1, x, ..., x^{k-1}; the central subalgebra is
  /// F_p[x^2] when k > 1.
  static FinDimAlgebra truncated_polynomial(Coef p, int k);
  /// F_p x F_p with basis of the two idempotents.
  static FinDimAlgebra product_of_fields(Coef p);
  /// Group algebra of the cyclic group of order m, basis 1, g, ..., g^{m-1}.
  static FinDimAlgebra cyclic_group_algebra(Coef p, int m);
  /// Same underlying space with multiplication reversed.
  FinDimAlgebra opposite() const;
  /// A/I for a two-sided ideal I, on the basis of non-pivot coordinates of I.
  FinDimAlgebra quotient(const Subspace& ideal) const;

  Coef p() const { return p_; }
  std::size_t dim() const { return d_; }
  const std::string& name() const { return name_; }
  const FpVector& unit() const { return unit_; }
  FpVector basis_vector(std::size_t i) const;

  FpVector mul(const FpVector& x, const FpVector& y) const;
  /// Matrix of y -> x * y (columns are images of basis vectors).
  FpMatrix left_mult(const FpVector& x) const;
  /// Matrix of y -> y * x.
  FpMatrix right_mult(const FpVector& x) const;
  const FpMatrix& left_basis_mult(std::size_t i) const { return left_[i]; }

  /// Central subalgebra R; F_p * 1 when none was given.
  const Subspace& central() const { return central_; }
  Subspace center() const;

  bool is_nilpotent(const FpVector& x) const;

  /// Every element of A in lexicographic coordinate order; guarded by the
  /// enumeration budget.
  std::vector<FpVector> all_elements(std::size_t budget = 1u << 16) const;

 private:
  Coef p_;
  std::size_t d_;
  std::vector<std::vector<FpVector>> c_;
  FpVector unit_;
  Subspace central_;
  std::string name_;
  std::vector<FpMatrix> left_;  // left_[i] = L_{e_i}
};

enum class Side { Left, TwoSided };

/// Subspace of A closed under left (and for two-sided, right)
/// multiplication by A. Closure is checked on construction.
class SubspaceIdeal {
 public:
  SubspaceIdeal(const FinDimAlgebra& A, Subspace basis, Side side);

  /// Smallest ideal of the given side containing the vectors.
  static SubspaceIdeal generated(const FinDimAlgebra& A, const std::vector<FpVector>& gens, Side side);
  static SubspaceIdeal zero(const FinDimAlgebra& A, Side side = Side::TwoSided);
  static SubspaceIdeal whole(const FinDimAlgebra& A, Side side = Side::TwoSided);

  const Subspace& space() const { return space_; }
  Side side() const { return side_; }
  std::size_t dim() const { return space_.dim(); }
  bool is_zero() const { return space_.is_zero(); }
  bool contains(const SubspaceIdeal& other) const { return space_.contains(other.space_); }
  bool operator==(const SubspaceIdeal& other) const { return space_ == other.space_ && side_ == other.side_; }

 private:
  Subspace space_;
  Side side_;
};

/// Span of all products x * y with x in I, y in J.
Subspace product(const FinDimAlgebra& A, const Subspace& I, const Subspace& J);
/// I^k for k >= 1; I^0 is A.
Subspace power(const FinDimAlgebra& A, const Subspace& I, int k);
/// Smallest two-sided ideal containing the subspace.
Subspace two_sided_closure(const FinDimAlgebra& A, const Subspace& S);
Subspace left_closure(const FinDimAlgebra& A, const Subspace& S);

}  // namespace nbe
