#pragma once

#include <string>
#include <vector>

#include "nbe/ncalg/presentation.hpp"

namespace nbe {

struct OverlapDiscrepancy {
  std::string word;     // e.g. "g3*g2*g1"
  NCPoly discrepancy;   // (left reduction first) - (right reduction first)
};

struct ConfluenceReport {
  bool passed = true;
  std::size_t overlaps_checked = 0;
  std::size_t overlaps_skipped = 0;  // weighted degree above max_degree
  std::vector<OverlapDiscrepancy> discrepancies;
};

/// Diamond-lemma check: for every overlap x y z of two rewrite rules the two
/// reduction orders must reach the same normal form. Overlaps are the
/// triples g_k g_j g_i (k > j > i) and, with an invertible g_0, the same
/// triples with g_0^{-1} in place of g_0 plus g_k g_0 g_0^{-1} and
/// g_k g_0^{-1} g_0. Failures are reported, never raised.
ConfluenceReport check_confluence(const AlgebraPresentation& P, int max_degree);

}  // namespace nbe
