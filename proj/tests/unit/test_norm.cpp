#include <random>

#include "doctest.h"
#include "support/printers.hpp"
#include "nbe/ncalg/pbw_ring.hpp"
#include "nbe/normnbe/norm.hpp"
#include "oracles/cofactor_det.hpp"
#include "support/random_elements.hpp"

using namespace nbe;

namespace {

WeylAlgebra weyl(int p, int n) { return weyl_presentation(p, n, SymplecticMatrix::standard(p, n)); }

CommPoly x(const WeylAlgebra& A, std::size_t i) {
  return CommPoly::variable(A.presentation.ngens(), A.presentation.p(), i);
}

std::vector<std::vector<CommPoly>> rows_of(const CenterMatrix& M) {
  std::vector<std::vector<CommPoly>> r(M.size);
  for (std::size_t i = 0; i < M.size; ++i)
    for (std::size_t j = 0; j < M.size; ++j) r[i].push_back(M.at(i, j));
  return r;
}

}  // namespace

TEST_CASE("CommPoly arithmetic") {
  const CommPoly x1 = CommPoly::variable(2, 3, 0), x2 = CommPoly::variable(2, 3, 1);
  const CommPoly f = (x1 + x2).pow(3);
  CHECK(f == x1.pow(3) + x2.pow(3));  // Frobenius in characteristic 3
  CHECK(f.frobenius_root(3).value() == x1 + x2);
  CHECK_FALSE((x1 * x2 + x1).frobenius_root(3).has_value());
  const CommPoly g = x1 * x1 + x2.scaled(2) + CommPoly::constant(2, 3, 1);
  const CommPoly h = x1 * x2 + x1;
  CHECK((g * h).divide_exact(h) == g);
  CHECK_THROWS_AS((g + x1).divide_exact(x2), InternalInconsistency);
  CHECK(g.degree() == 2);
  CHECK(CommPoly(2, 3).degree() == kNegInfDegree);
  CHECK(g.leading_form() == x1 * x1);
  CHECK(x1.lift_to_t() == CommPoly::monomial(2, 3, {3, 0, 0, 0}, 1, VarFamily::T));
  CHECK(to_string(g) == "x1^2 + 2*x2 + 1");
}

TEST_CASE("extension field axioms") {
  for (Coef p : {2, 3, 5, 7}) {
    const ExtField F = ExtField::with_order_at_least(p, 300);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 500; ++t) {
      const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.frobenius(F.frobenius(a, 1), -1) == a);
      CHECK(F.in_prime_field(a) == (F.pow(a, p) == a));
    }
  }
}

TEST_CASE("left multiplication matrices") {
  const auto A = weyl(2, 1);
  const auto& P = A.presentation;
  const auto I = left_mult_matrix(P.one(), A);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(I.at(i, j) == (i == j ? CommPoly::constant(2, 2, 1) : CommPoly(2, 2)));
  // Basis order 1, g1, g2, g1 g2. g1 * g1 = x1, g1 * g1g2 = x1 g2.
  const auto G = left_mult_matrix(P.generator(0), A);
  CHECK(G.at(1, 0) == CommPoly::constant(2, 2, 1));
  CHECK(G.at(0, 1) == x(A, 0));
  CHECK(G.at(3, 2) == CommPoly::constant(2, 2, 1));
  CHECK(G.at(2, 3) == x(A, 0));
  const auto Z = left_mult_matrix(P.generator(0, 2), A);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(Z.at(i, j) == (i == j ? x(A, 0) : CommPoly(2, 2)));
}

TEST_CASE("determinants against cofactor expansion") {
  const auto A = weyl(2, 1);
  CHECK(det_poly(left_mult_matrix(A.presentation.generator(0), A)) == x(A, 0).pow(2));
  CenterMatrix D{2, {x(A, 0), CommPoly(2, 2), CommPoly(2, 2), x(A, 0)}};
  CHECK(det_poly(D) == x(A, 0).pow(2));
  std::mt19937_64 rng(3);
  for (int p : {2, 3}) {
    const auto B = weyl(p, 1);
    for (int t = 0; t < 15; ++t) {
      const NCPoly s = testsupport::random_element(B.presentation, rng, 3);
      const auto L = left_mult_matrix(s, B);
      if (L.size > 4 && t % 3 != 0) continue;  // 9x9 cofactor expansion is slow
      CHECK(det_poly(L) == oracle::cofactor_det(rows_of(L)));
    }
  }
}

TEST_CASE("reduced norm examples") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const auto A = weyl(p, n);
    const auto& P = A.presentation;
    CHECK(reduced_norm(P.one(), A) == CommPoly::constant(P.ngens(), P.p(), 1));
    // det(L_g) = x^{p^{2n-1}}, so N(g_i) = x_i^{p^{n-1}}.
    const unsigned e = n == 1 ? 1u : static_cast<unsigned>(p);
    for (std::size_t i = 0; i < P.ngens(); ++i) CHECK(reduced_norm(P.generator(i), A) == x(A, i).pow(e));
    for (Coef c = 1; c < p; ++c) {
      const Coef cpn = PrimeField(p).pow(c, n == 1 ? p : p * p);
      CHECK(reduced_norm(P.constant(c), A) == CommPoly::constant(P.ngens(), P.p(), cpn));
    }
    CHECK(reduced_norm(P.zero(), A).is_zero());
  }
}

TEST_CASE("16x16 symbolic determinant for n = 2") {
  const auto A = weyl(2, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    const CommPoly det = det_poly(left_mult_matrix(A.presentation.generator(i), A));
    CHECK(det == x(A, i).pow(8));
    CHECK(reduced_norm(A.presentation.generator(i), A, NormMethod::Bareiss) == x(A, i).pow(2));
  }
}

TEST_CASE("Bareiss and interpolation agree") {
  std::mt19937_64 rng(4);
  for (int p : {2, 3}) {
    const auto A = weyl(p, 1);
    for (int t = 0; t < 20; ++t) {
      const NCPoly s = testsupport::random_element(A.presentation, rng, 4);
      CHECK(reduced_norm(s, A, NormMethod::Bareiss) == reduced_norm(s, A, NormMethod::Interpolation));
    }
  }
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(5);
  for (auto [p, n, trials] : {std::tuple{2, 1, 100}, {3, 1, 100}, {2, 2, 25}}) {
    const auto A = weyl(p, n);
    PbwRing R(A.presentation);
    for (int t = 0; t < trials; ++t) {
      const NCPoly a = testsupport::random_element(A.presentation, rng, 2, 3);
      const NCPoly b = testsupport::random_element(A.presentation, rng, 2, 3);
      REQUIRE(reduced_norm(R.multiply(a, b), A) == reduced_norm(a, A) * reduced_norm(b, A));
    }
  }
}

TEST_CASE("norm is not additive") {
  const auto A = weyl(2, 1);
  const auto w = non_additivity_witness(A);
  REQUIRE(w.has_value());
  const CommPoly s = reduced_norm(w->first + w->second, A);
  CHECK_FALSE(s == reduced_norm(w->first, A) + reduced_norm(w->second, A));
  const NCPoly g12 = A.presentation.generator(0) + A.presentation.generator(1);
  CHECK(reduced_norm(g12, A) == x(A, 0) + x(A, 1) + CommPoly::constant(2, 2, 1));
}

TEST_CASE("principal symbol") {
  const auto A = weyl(3, 1);
  const auto& P = A.presentation;
  PbwRing R(P);
  const auto t1 = CommPoly::variable(2, 3, 0, VarFamily::T), t2 = CommPoly::variable(2, 3, 1, VarFamily::T);
  const auto r1 = principal_symbol(P.generator(0), A);
  CHECK(r1.degree == 1);
  CHECK(r1.poly == t1);
  const auto r2 = principal_symbol(R.multiply(P.generator(0), P.generator(1)) + P.generator(0), A);
  CHECK(r2.degree == 2);
  CHECK(r2.poly == t1 * t2);
  const auto r3 = principal_symbol(R.multiply(P.generator(1), P.generator(0)), A);
  CHECK(r3.degree == 2);
  CHECK(r3.poly == t1 * t2);
  CHECK(principal_symbol(P.zero(), A).degree == kNegInfDegree);
}

TEST_CASE("symbol is multiplicative and vanishes only at zero") {
  std::mt19937_64 rng(6);
  const auto A = weyl(3, 1);
  PbwRing R(A.presentation);
  for (int t = 0; t < 50; ++t) {
    const NCPoly a = testsupport::random_element(A.presentation, rng, 3);
    const NCPoly b = testsupport::random_element(A.presentation, rng, 3);
    const auto ra = principal_symbol(a, A), rb = principal_symbol(b, A), rab = principal_symbol(R.multiply(a, b), A);
    CHECK(ra.poly.is_zero() == a.is_zero());
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(rab.degree == ra.degree + rb.degree);
    CHECK(rab.poly == ra.poly * rb.poly);
  }
}

TEST_CASE("norm and symbol diagram") {
  const auto A = weyl(2, 1);
  const auto rep = norm_symbol_diagram(A.presentation.generator(0), A);
  CHECK(rep.holds);
  CHECK(rep.symbol_power == CommPoly::monomial(2, 2, {2, 0, 0, 0}, 1, VarFamily::T));
  CHECK(check_norm_symbol_diagram(A.presentation.one(), A));
  std::mt19937_64 rng(7);
  for (auto [p, n, trials] : {std::tuple{2, 1, 50}, {3, 1, 50}, {2, 2, 10}}) {
    const auto B = weyl(p, n);
    for (int t = 0; t < trials; ++t) {
      NCPoly s = testsupport::random_element(B.presentation, rng, 4);
      if (s.is_zero()) s = B.presentation.one();
      CHECK(check_norm_symbol_diagram(s, B));
    }
  }
}

TEST_CASE("valuation at the boundary") {
  const auto A = weyl(3, 1);
  CHECK(ord_at_H_dagger(CommPoly::constant(2, 3, 1)) == Order{false, 0});
  CHECK(ord_at_H_dagger(x(A, 0)) == Order{false, -3});
  CHECK(ord_at_H_dagger(x(A, 0) * x(A, 1) + x(A, 0)) == Order{false, -6});
  CHECK(ord_at_H_dagger(CommPoly(2, 3)).infinite);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto f = reduced_norm(testsupport::random_element(A.presentation, rng, 3), A);
    const auto g = reduced_norm(testsupport::random_element(A.presentation, rng, 3), A);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(ord_at_H_dagger(f * g).value == ord_at_H_dagger(f).value + ord_at_H_dagger(g).value);
  }
}

TEST_CASE("twist membership") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const auto A = weyl(p, n);
    const auto& P = A.presentation;
    CHECK(twist_membership(P.generator(0), 1, A));
    CHECK(twist_membership(P.constant(1), 0, A));
    CHECK_FALSE(twist_membership(P.generator(0), -1, A));
    CHECK_FALSE(twist_membership(P.generator(0), 0, A));
    CHECK(twist_membership(P.zero(), -p, A));
    CHECK_FALSE(twist_membership(P.one(), -p, A));
  }
}

TEST_CASE("central degree-one factors shift the twist by p") {
  std::mt19937_64 rng(9);
  for (int p : {2, 3}) {
    const auto A = weyl(p, 1);
    PbwRing R(A.presentation);
    const NCPoly f = A.presentation.generator(0, p) + A.presentation.generator(1, p);
    for (int t = 0; t < 10; ++t) {
      const NCPoly a = testsupport::random_element(A.presentation, rng, 3);
      if (a.is_zero()) continue;
      int k = -1;
      while (!twist_membership(a, k, A)) ++k;
      const NCPoly fa = R.multiply(f, a);
      CHECK(twist_membership(fa, k + p, A));
      CHECK_FALSE(twist_membership(fa, k + p - 1, A));
    }
  }
}

TEST_CASE("twist filtration law") {
  std::mt19937_64 rng(10);
  const auto A = weyl(2, 1);
  PbwRing R(A.presentation);
  for (int t = 0; t < 200; ++t) {
    const NCPoly a = testsupport::random_element(A.presentation, rng, 3);
    const NCPoly b = testsupport::random_element(A.presentation, rng, 3);
    const int j = static_cast<int>(rng() % 4) - 1, k = static_cast<int>(rng() % 4) - 1;
    if (twist_membership(a, j, A) && twist_membership(b, k, A)) CHECK(twist_membership(R.multiply(a, b), j + k, A));
  }
}

TEST_CASE("global sections of twists") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const auto A = weyl(p, n);
    const auto& P = A.presentation;
    const int bound1 = n == 1 ? 1 : p;
    const auto s1 = global_twist_sections(1, bound1, A);
    std::vector<NCPoly> expected{P.one()};
    for (std::size_t i = 0; i < P.ngens(); ++i) expected.push_back(P.generator(i));
    CHECK(s1 == expected);
    const int bound0 = n == 1 ? 2 : 0;
    CHECK(global_twist_sections(0, bound0, A) == std::vector<NCPoly>{P.one()});
    CHECK(global_twist_sections(-1, bound0, A).empty());
  }
  CHECK_THROWS_AS(global_twist_sections(1, 1, weyl(2, 2)), IncompleteSearch);
  CHECK(global_twist_sections(2, 2, weyl(3, 1)).size() == 6);
}
