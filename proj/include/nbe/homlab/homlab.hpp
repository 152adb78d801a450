#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbe/homlab/module.hpp"

namespace nbe {

/// P_L -> ... -> P_0 -> M -> 0 with each P_i a direct sum of A e for
/// primitive idempotents e. Elements of P_i live in A^{g_i}, one slot per
/// generator, slot j inside A e_j.
struct Resolution {
  struct Stage {
    std::vector<FpVector> idempotents;  // one per generator
    // Image of generator j in the previous term, as a vector of A^{g_{i-1}}
    // (for i = 0: a vector of M).
    std::vector<FpVector> images;
    Subspace space;  // P_i inside A^{g_i}
  };
  std::vector<Stage> stages;
  bool terminated = false;  // the last kernel was zero
  std::size_t length() const { return stages.empty() ? 0 : stages.size() - 1; }
};

/// Minimal projective resolution up to P_L; stops early once a kernel
/// vanishes. M = 0 gives no stages. Every stage is checked: d^2 = 0 and
/// dim ker d_i = rank d_{i+1} (InternalInconsistency otherwise).
Resolution minimal_projective_resolution(const FDModule& M, const FinDimAlgebra& A, int L);

/// Matrix of d_i : P_i -> P_{i-1} on the RREF bases (i = 0: P_0 -> M).
FpMatrix differential_matrix(const Resolution& R, const FDModule& M, const FinDimAlgebra& A, std::size_t i);

struct ExtResult {
  int degree = 0;
  std::size_t dimension = 0;
  /// Right action of each basis element of A on Ext^i(M, A).
  std::vector<FpMatrix> action;
  FDModule as_right_module(const FinDimAlgebra& A) const { return FDModule(A, ModuleSide::Right, action); }
};

/// Ext^i_A(M, A) for a left module M, with its right A-action.
ExtResult ext_groups(const FDModule& M, const FinDimAlgebra& A, int i);

struct Grade {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  int value = 0;  // the grade, or the lower bound for AtLeast

  static Grade finite(int v) { return {Kind::Finite, v}; }
  static Grade infinite() { return {Kind::Infinite, 0}; }
  static Grade at_least(int v) { return {Kind::AtLeast, v}; }
  bool operator==(const Grade&) const = default;
  std::string to_string() const;
};

/// Least i <= L with Ext^i(M, A) != 0. Only M = 0 is reported as +inf; a
/// nonzero module with no Ext up to L is reported as "> L".
Grade grade(const FDModule& M, const FinDimAlgebra& A, int L);

struct AuslanderViolation {
  int degree = 0;               // i
  std::vector<FpVector> generators;  // elements of Ext^i generating N
  int submodule_dimension = 0;
  int grade = 0;                     // j(N) < i
};

struct AuslanderLevel {
  int degree = 0;
  std::size_t ext_dimension = 0;
  std::size_t submodules_tested = 0;
};

struct AuslanderReport {
  bool passed = true;
  bool all_submodules = false;  // full lattice instead of cyclic submodules
  std::vector<AuslanderLevel> levels;
  std::vector<AuslanderViolation> violations;
};

/// For i <= L, checks j(N) >= i for right submodules N of Ext^i(M, A):
/// cyclic ones by default, every one when all_submodules is set and
/// dim Ext^i <= 6. A probe over finite-dimensional algebras, not a proof.
AuslanderReport auslander_probe(const FinDimAlgebra& A, const FDModule& M, int L, bool all_submodules = false);

}  // namespace nbe
