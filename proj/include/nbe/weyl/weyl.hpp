#pragma once

#include <string>
#include <vector>

#include "nbe/ncalg/presentation.hpp"
#include "nbe/normnbe/comm_poly.hpp"

namespace nbe {

/// Skew-symmetric nondegenerate 2n x 2n matrix over F_p (indices 0-based).
class SymplecticMatrix {
 public:
  /// Validates skew symmetry, zero diagonal and det != 0 mod p.
  SymplecticMatrix(int p, std::vector<std::vector<Coef>> entries);
  static SymplecticMatrix from_integers(int p, const std::vector<std::vector<long long>>& rows);

  /// Darboux form: h_{2k-1,2k} = 1, h_{2k,2k-1} = -1 (1-based).
  static SymplecticMatrix standard(int p, int n);
  /// Form used by the boundary chart: the (1,2) block flipped to h_12 = -1 so
  /// that [v,u] = +u^3, remaining blocks standard.
  static SymplecticMatrix chart_normal_form(int p, int n);

  Coef p() const { return p_; }
  int n() const { return static_cast<int>(h_.size() / 2); }
  std::size_t size() const { return h_.size(); }
  Coef operator()(std::size_t i, std::size_t j) const { return h_[i][j]; }
  const std::vector<std::vector<Coef>>& entries() const { return h_; }

  /// Same form with h_12 and h_21 negated.
  SymplecticMatrix with_flipped_first_pair() const;
  /// h_12 = -1 and no coupling between {1,2} and the other generators.
  bool is_chart_normal_form() const;

  bool operator==(const SymplecticMatrix&) const = default;

 private:
  Coef p_;
  std::vector<std::vector<Coef>> h_;
};

struct WeylAlgebra {
  int p;
  int n;
  SymplecticMatrix h;
  AlgebraPresentation presentation;
};

struct ChartAlgebra {
  int p;
  int n;
  SymplecticMatrix h;
  AlgebraPresentation presentation;
};

/// Generators g1..g2n with [g_j, g_i] = h_ji; confluence is verified here.
WeylAlgebra weyl_presentation(int p, int n, const SymplecticMatrix& h);

/// Generators u, v, gb3..gb2n with weights 1, 2, 1, ...:
/// [v,u] = u^3, [u,gb_i] = 0, [v,gb_i] = u^2 gb_i, [gb_i,gb_j] = h_ij u^2.
/// Throws InvalidForm unless h is in chart normal form.
ChartAlgebra boundary_chart_presentation(int p, int n, const SymplecticMatrix& h);

/// Weyl presentation with g1 invertible.
AlgebraPresentation localized_weyl(int p, int n, const SymplecticMatrix& h);

struct ChartRelationCheck {
  std::string relation;  // e.g. "[v,u] = u^3"
  bool holds;
  std::string lhs;       // computed in the localized Weyl algebra
  std::string rhs;
};

struct ChartOrientation {
  std::string label;     // "as-given" or "flipped"
  SymplecticMatrix h;
  bool all_hold;
  std::vector<ChartRelationCheck> relations;
};

struct ChartEmbeddingReport {
  bool passed;                               // some orientation reproduces every relation
  std::vector<ChartOrientation> orientations;
  std::vector<std::string> succeeding;       // labels of passing orientations
};

/// Substitutes u = g1^-1, v = -g2 g1^-1, gb_i = g_i g1^-1 into the localized
/// Weyl algebra for h and for h with the (1,2) block flipped, and checks every
/// chart relation exactly, with h_ij on the right-hand side read from the
/// orientation being tested.
ChartEmbeddingReport chart_embedding_check(int p, int n, const SymplecticMatrix& h);

bool center_membership(const NCPoly& s, const WeylAlgebra& A);

/// The f with s = f(g1^p, ..., g2n^p); re-expanded to confirm.
CommPoly center_coordinates(const NCPoly& s, const WeylAlgebra& A);

/// Dimension check of freeness over the center: in each total degree d
/// up to max_degree, the products z * g^alpha (alpha in [0,p)^{2n}, z a
/// central monomial) of degree d are independent and span the normal
/// monomials of degree d.
bool freeness_over_center(const WeylAlgebra& A, int max_degree);

}  // namespace nbe
