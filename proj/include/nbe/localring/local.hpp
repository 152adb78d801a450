#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbe/localring/fd_algebra.hpp"

namespace nbe {

/// Largest nilpotent two-sided ideal. The trace-form ideal is used when it
/// is already nilpotent; otherwise nilpotent principal ideals are collected
/// by exhaustive search over cosets (at most 2^16 of them).
SubspaceIdeal jacobson_radical(const FinDimAlgebra& A);

/// Maximal two-sided ideals, as preimages of the Wedderburn blocks of A/rad.
/// Sorted by basis (RREF rows, lexicographic).
std::vector<SubspaceIdeal> maximal_two_sided_ideals(const FinDimAlgebra& A);

/// Maximal left ideals by breadth-first closure over principal left ideals.
/// Exponential; requires p^d <= 2^16.
std::vector<SubspaceIdeal> maximal_left_ideals(const FinDimAlgebra& A);

/// A complete set of primitive orthogonal idempotents of A summing to 1:
/// found among the idempotents of A/rad (at most 2^16 elements) and lifted
/// through the nilpotent radical.
std::vector<FpVector> primitive_orthogonal_idempotents(const FinDimAlgebra& A);

enum class LocalClass { NotDemi, Demi, NAK, Quasi };
std::string to_string(LocalClass c);

LocalClass classify_local(const FinDimAlgebra& A);

/// I * I == I.
bool idempotent_ideal_check(const SubspaceIdeal& I, const FinDimAlgebra& A);

/// Least k0 >= 1 with m^{k0} inside m_R * A, or nullopt when the powers of m
/// stabilize first. m_R must be an ideal of the central subalgebra of A.
std::optional<int> adic_comparison(const FinDimAlgebra& A, const SubspaceIdeal& m, const Subspace& m_R);

struct FiberReport {
  enum class Verdict { Decomposable, Indecomposable, FailsAt };
  Verdict verdict = Verdict::Indecomposable;
  int failing_k = 0;   // set for FailsAt
  int k_max = 0;       // the probe covers k = 1..k_max only
  int stable_N = 0;    // exponent at which every M_i^N stopped shrinking
  std::vector<SubspaceIdeal> over;  // maximal ideals lying over m_R
};
std::string to_string(FiberReport::Verdict v);

/// Probe of (M_1^N cap ... cap M_s^N) inside (M_1 cap ... cap M_s)^k for
/// k <= k_max, over the maximal ideals M_i with M_i cap R = m_R.
FiberReport fiber_decomposability(const FinDimAlgebra& A, const Subspace& m_R, int k_max);

}  // namespace nbe
