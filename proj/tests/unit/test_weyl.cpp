#include "doctest.h"
#include "support/printers.hpp"
#include "nbe/ncalg/pbw_ring.hpp"
#include "nbe/weyl/weyl.hpp"

using namespace nbe;

TEST_CASE("symplectic validation") {
  CHECK_THROWS_AS(SymplecticMatrix::from_integers(2, {{0, 0}, {0, 0}}), InvalidForm);
  CHECK_THROWS_AS(SymplecticMatrix::from_integers(3, {{0, 1}, {1, 0}}), InvalidForm);
  CHECK_THROWS_AS(SymplecticMatrix::from_integers(3, {{1, 1}, {-1, 0}}), InvalidForm);
  CHECK_NOTHROW(SymplecticMatrix::from_integers(2, {{0, 1}, {1, 0}}));
  // Skew but degenerate mod 3: rows 1 and 2 proportional after reduction.
  CHECK_THROWS_AS(SymplecticMatrix::from_integers(3, {{0, 1, 1, 1},
                                                      {-1, 0, 0, 0},
                                                      {-1, 0, 0, 0},
                                                      {-1, 0, 0, 0}}),
                  InvalidForm);
  CHECK_THROWS_AS(SymplecticMatrix::standard(4, 1), Unsupported);
}

TEST_CASE("Weyl presentation examples") {
  const auto A2 = weyl_presentation(2, 1, SymplecticMatrix::from_integers(2, {{0, 1}, {1, 0}}));
  CHECK(A2.presentation.ngens() == 2);
  CHECK(A2.presentation.relation(1, 0) == A2.presentation.one());
  const auto A3 = weyl_presentation(3, 1, SymplecticMatrix::standard(3, 1));
  CHECK(A3.presentation.relation(1, 0) == A3.presentation.constant(2));
  CHECK(A3.presentation.names() == std::vector<std::string>{"g1", "g2"});
}

TEST_CASE("chart presentation shape") {
  const auto C2 = boundary_chart_presentation(2, 2, SymplecticMatrix::chart_normal_form(2, 2));
  CHECK(C2.presentation.names() == std::vector<std::string>{"u", "v", "gb3", "gb4"});
  CHECK(C2.presentation.weights() == std::vector<int>{1, 2, 1, 1});
  const auto C1 = boundary_chart_presentation(3, 1, SymplecticMatrix::chart_normal_form(3, 1));
  CHECK(C1.presentation.ngens() == 2);
  CHECK(C1.presentation.relation(1, 0) == C1.presentation.generator(0, 3));
  PbwRing R(C2.presentation);
  CHECK(R.commutator(C2.presentation.generator(0), C2.presentation.generator(2)).is_zero());
  auto coupled = SymplecticMatrix::from_integers(2, {{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(boundary_chart_presentation(2, 2, coupled), InvalidForm);
}

TEST_CASE("chart embedding: exactly one orientation for odd p") {
  for (int n : {1, 2}) {
    const auto r = chart_embedding_check(3, n, SymplecticMatrix::standard(3, n));
    CHECK(r.passed);
    CHECK(r.succeeding == std::vector<std::string>{"flipped"});
    CHECK_FALSE(r.orientations[0].relations[0].holds);
    const auto r2 = chart_embedding_check(3, n, SymplecticMatrix::chart_normal_form(3, n));
    CHECK(r2.succeeding == std::vector<std::string>{"as-given"});
  }
  const auto r = chart_embedding_check(2, 2, SymplecticMatrix::standard(2, 2));
  CHECK(r.succeeding.size() == 2);
  CHECK(r.orientations[0].relations.size() == 6);
  for (const auto& rel : r.orientations[0].relations) CHECK(rel.holds);
}

TEST_CASE("center membership and coordinates") {
  for (int p : {2, 3}) {
    const auto A = weyl_presentation(p, 1, SymplecticMatrix::standard(p, 1));
    const auto& P = A.presentation;
    PbwRing R(P);
    CHECK(center_membership(P.generator(0, p), A));
    CHECK_FALSE(center_membership(P.generator(0), A));
    CHECK(center_membership(P.one(), A));
    CHECK(center_coordinates(P.generator(0, p), A) == CommPoly::variable(2, P.p(), 0));
    CHECK(center_coordinates(P.one(), A) == CommPoly::constant(2, P.p(), 1));
    const NCPoly s = R.multiply(P.generator(0, p), P.generator(1, p)) + P.generator(0, p);
    const CommPoly f = CommPoly::variable(2, P.p(), 0) * CommPoly::variable(2, P.p(), 1) +
                       CommPoly::variable(2, P.p(), 0);
    CHECK(center_coordinates(s, A) == f);
    CHECK(to_string(f) == "x1*x2 + x1");
    CHECK_THROWS_AS(center_coordinates(P.generator(1), A), Unsupported);
  }
}

TEST_CASE("p-power monomials are central") {
  for (int p : {2, 3}) {
    for (int n : {1, 2}) {
      const auto A = weyl_presentation(p, n, SymplecticMatrix::standard(p, n));
      const std::size_t g = A.presentation.ngens();
      std::vector<int> e(g, 0);
      while (true) {
        int deg = 0;
        for (int x : e) deg += x * p;
        if (deg <= 2 * p) {
          Monomial m(g);
          for (std::size_t i = 0; i < g; ++i) m.set(i, e[i] * p);
          CHECK(center_membership(NCPoly::monomial(m, 1, A.presentation.p()), A));
        }
        std::size_t pos = 0;
        while (pos < g && ++e[pos] == 3) e[pos++] = 0;
        if (pos == g) break;
      }
    }
  }
}

TEST_CASE("free of rank p^{2n} over the center") {
  CHECK(freeness_over_center(weyl_presentation(2, 1, SymplecticMatrix::standard(2, 1)), 4));
  CHECK(freeness_over_center(weyl_presentation(3, 1, SymplecticMatrix::standard(3, 1)), 6));
  CHECK(freeness_over_center(weyl_presentation(2, 2, SymplecticMatrix::standard(2, 2)), 4));
}
