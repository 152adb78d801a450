#pragma once

#include <vector>

#include "nbe/ncalg/presentation.hpp"

namespace nbe {

/// Generator weights defining a filtration.
///
/// Adic: the descending filtration by powers of the ideal of positive-weight
/// generators (the m-adic and u-adic filtrations). A relation keeps its
/// component of weight w_j + w_i; heavier components vanish in gr, lighter
/// ones are incompatible with the filtration.
///
/// Degree: the ascending degree filtration (Bernstein-type). Lighter
/// components vanish in gr, heavier ones are incompatible.
struct WeightFiltration {
  enum class Kind { Adic, Degree };

  std::vector<int> weights;
  Kind kind = Kind::Adic;
};

AlgebraPresentation associated_graded(const AlgebraPresentation& P, const WeightFiltration& W);

/// Number of normal monomials of total degree exactly d.
long long hilbert_function(const AlgebraPresentation& P, int d);

/// Rank of the normal forms of all words of length exactly d. Equals
/// hilbert_function for a homogeneous presentation with a PBW basis.
std::size_t word_span_dimension(const AlgebraPresentation& P, int d);

/// True when every relation of P is zero.
bool is_commutative_presentation(const AlgebraPresentation& P);

}  // namespace nbe
