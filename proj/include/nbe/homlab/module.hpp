#pragma once

#include <vector>

#include "nbe/localring/fd_algebra.hpp"

namespace nbe {

enum class ModuleSide { Left, Right };

/// Finite-dimensional module over a FinDimAlgebra, given by the action
/// matrix of every basis element. Matrices act on column coordinate
/// vectors; for a right module action(k) is v -> v * e_k.
class FDModule {
 public:
  /// Validates sizes, the unit acting as identity and compatibility with the
  /// structure constants (rho(e_i e_j) = rho(e_i) rho(e_j) for left modules,
  /// rho(e_j) rho(e_i) for right ones).
  FDModule(const FinDimAlgebra& A, ModuleSide side, std::vector<FpMatrix> action);

  static FDModule zero(const FinDimAlgebra& A, ModuleSide side = ModuleSide::Left);
  /// A acting on itself by left (or right) multiplication.
  static FDModule regular(const FinDimAlgebra& A, ModuleSide side = ModuleSide::Left);
  /// A / I for a left ideal I.
  static FDModule cyclic(const FinDimAlgebra& A, const Subspace& left_ideal);
  static FDModule direct_sum(const FinDimAlgebra& A, const FDModule& M, const FDModule& N);

  ModuleSide side() const { return side_; }
  std::size_t dim() const { return m_; }
  Coef p() const { return p_; }
  const FpMatrix& action(std::size_t k) const { return act_[k]; }
  const std::vector<FpMatrix>& actions() const { return act_; }
  /// Action of an arbitrary algebra element.
  FpMatrix action_of(const FpVector& a) const;

  /// The submodule on an invariant subspace, on its RREF basis.
  FDModule restrict_to(const FinDimAlgebra& A, const Subspace& S) const;
  /// The smallest submodule containing v.
  Subspace cyclic_submodule(const FpVector& v) const;
  /// The same data read as a left module over A^op (right modules only).
  FDModule as_left_over_opposite(const FinDimAlgebra& Aop) const;

 private:
  ModuleSide side_;
  Coef p_;
  std::size_t m_;
  std::vector<FpMatrix> act_;
};

}  // namespace nbe
