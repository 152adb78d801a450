#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbe/normnbe/comm_poly.hpp"
#include "nbe/normnbe/ext_field.hpp"
#include "nbe/weyl/weyl.hpp"

namespace nbe {

/// Square matrix with entries in the center F_p[x_1..x_2n].
struct CenterMatrix {
  std::size_t size = 0;
  std::vector<CommPoly> entries;  // row-major

  CommPoly& at(std::size_t r, std::size_t c) { return entries[r * size + c]; }
  const CommPoly& at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
  int max_entry_degree() const;
};

/// Index of gamma^alpha, alpha in [0,p)^{2n}, in the basis of A over its
/// center: mixed radix with alpha_1 least significant.
std::size_t basis_index(std::span<const int> alpha, int p);

/// Left multiplication by s on the basis {gamma^alpha : 0 <= alpha_i < p};
/// column alpha holds the coordinates of s * gamma^alpha.
CenterMatrix left_mult_matrix(const NCPoly& s, const WeylAlgebra& A);

/// Fraction-free Bareiss elimination over F_p[x]. When cross_check_points
/// is positive the result is compared with numeric determinants at that
/// many random points of an extension field of order above
/// 2 * size * max entry degree; a mismatch raises InternalInconsistency.
CommPoly det_poly(const CenterMatrix& M, int cross_check_points = 3, std::uint64_t seed = 1);

/// Numeric determinant of M evaluated at a point of F_q.
ExtField::Elem det_at(const CenterMatrix& M, const ExtField& F, std::span<const ExtField::Elem> point);

enum class NormMethod {
  Auto,           // Bareiss up to 9x9, interpolation above
  Bareiss,        // symbolic determinant, then exponent division
  Interpolation,  // pointwise p^n-th roots of numeric determinants
};

/// N(s), defined by det(L_s) = N(s)^{p^n}.
CommPoly reduced_norm(const NCPoly& s, const WeylAlgebra& A, NormMethod method = NormMethod::Auto);

/// Image of s under the symbol map: degree and top-degree form in t.
struct GradedSymbol {
  int degree = kNegInfDegree;
  CommPoly poly;
};

GradedSymbol principal_symbol(const NCPoly& s, const WeylAlgebra& A);

struct DiagramReport {
  bool holds = false;
  CommPoly symbol_power;  // rho(s)^{p^n}
  CommPoly norm_leading;  // leading form of N(s) with x_i = t_i^p
};

DiagramReport norm_symbol_diagram(const NCPoly& s, const WeylAlgebra& A);
bool check_norm_symbol_diagram(const NCPoly& s, const WeylAlgebra& A);

/// Integer or +infinity.
struct Order {
  bool infinite = false;
  long long value = 0;

  static Order infinity() { return {true, 0}; }
  bool operator==(const Order&) const = default;
  std::string to_string() const { return infinite ? "+inf" : std::to_string(value); }
};

/// -p * total degree; +infinity for 0.
Order ord_at_H_dagger(const CommPoly& f);

/// ord(N(s)) >= -k p^n, i.e. deg N(s) <= k p^{n-1}.
bool twist_membership(const NCPoly& s, int k, const WeylAlgebra& A);

/// Basis of the elements of degree <= degree_bound lying in twist k.
/// Monomials are tested first; the remaining coset representatives are
/// then searched exhaustively (up to 2^16 of them). The result is sorted
/// by degree, then generator order. Throws IncompleteSearch when
/// degree_bound < k p^{n-1}.
std::vector<NCPoly> global_twist_sections(int k, int degree_bound, const WeylAlgebra& A);

/// Some a, b of degree <= max_degree with N(a+b) != N(a) + N(b).
std::optional<std::pair<NCPoly, NCPoly>> non_additivity_witness(const WeylAlgebra& A, int max_degree = 1);

}  // namespace nbe
