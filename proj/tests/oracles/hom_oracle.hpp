#pragma once

#include <string>
#include <vector>

#include "nbe/localring/fd_algebra.hpp"

// Ext over a free resolution that uses every basis vector of each kernel as
// a generator. Wasteful, but it needs no idempotents, radical or minimality.
// A module is its list of left action matrices, one per basis element.
namespace oracle {

using Action = std::vector<nbe::FpMatrix>;

/// dim Ext^i(M, A) for i = 0..L.
std::vector<std::size_t> ext_dimensions(const nbe::FinDimAlgebra& A, const Action& M, int L);

/// dim Hom_A(M, A): F (d x m) with F rho_M(e_k) = L_{e_k} F for every k.
std::size_t hom_dimension(const nbe::FinDimAlgebra& A, const Action& M);

/// Right action of the basis of A on Ext^i(M, A).
Action ext_right_action(const nbe::FinDimAlgebra& A, const Action& M, int i);

/// -1 for the zero module, L + 1 when Ext vanishes through degree L.
int grade(const nbe::FinDimAlgebra& A, const Action& M, int L);

/// One line per (i <= L): "Ext^i dim s: pass" or "Ext^i dim s: fail".
std::vector<std::string> auslander_lines(const nbe::FinDimAlgebra& A, const Action& M, int L);

/// Every submodule N of every Ext^i, i <= L, has grade >= i over A^op.
bool auslander_holds(const nbe::FinDimAlgebra& A, const Action& M, int L);

}  // namespace oracle
