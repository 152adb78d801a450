#include <random>
#include <vector>

#include "doctest.h"
#include "nbe/kernels/fp_kernels.hpp"
#include "nbe/linalg/fp_matrix.hpp"

using namespace nbe;

namespace {

std::vector<std::uint8_t> random_vec(std::mt19937_64& rng, std::size_t n, unsigned p) {
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
  return v;
}

}  // namespace

TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!kernels::available(kernels::Isa::Avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  const auto& ref = kernels::table(kernels::Isa::Scalar);
  const auto& simd = kernels::table(kernels::Isa::Avx2);
  std::mt19937_64 rng(5);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (std::size_t n : {0, 1, 7, 31, 32, 33, 63, 64, 65, 255, 1000, 8200, 20000}) {
      const auto a = random_vec(rng, n, p);
      const auto b = random_vec(rng, n, p);
      for (unsigned c = 0; c < p; ++c) {
        auto d1 = a, d2 = a;
        ref.axpy(d1.data(), b.data(), n, static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p));
        simd.axpy(d2.data(), b.data(), n, static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p));
        REQUIRE(d1 == d2);
        auto s1 = a, s2 = a;
        ref.scale(s1.data(), n, static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p));
        simd.scale(s2.data(), n, static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p));
        REQUIRE(s1 == s2);
      }
      CHECK(ref.dot(a.data(), b.data(), n, static_cast<std::uint8_t>(p)) ==
            simd.dot(a.data(), b.data(), n, static_cast<std::uint8_t>(p)));
      // Worst case for the dot accumulators: all entries p - 1.
      std::vector<std::uint8_t> full(n, static_cast<std::uint8_t>(p - 1));
      CHECK(ref.dot(full.data(), full.data(), n, static_cast<std::uint8_t>(p)) ==
            simd.dot(full.data(), full.data(), n, static_cast<std::uint8_t>(p)));
    }
  }
  for (std::size_t n : {0, 1, 16, 31, 32, 33, 100, 4097}) {
    for (std::size_t hot = 0; hot <= n; hot += (n / 7) + 1) {
      std::vector<std::uint8_t> v(n, 0);
      if (hot < n) v[hot] = 3;
      CHECK(ref.first_nonzero(v.data(), n) == simd.first_nonzero(v.data(), n));
      CHECK(ref.first_nonzero(v.data(), n) == (hot < n ? hot : n));
    }
  }
}

TEST_CASE("scalar kernels against direct arithmetic") {
  const auto& ref = kernels::table(kernels::Isa::Scalar);
  std::vector<std::uint8_t> d{1, 2, 3, 4, 0}, s{4, 4, 4, 4, 4};
  ref.axpy(d.data(), s.data(), d.size(), 3, 5);
  CHECK(d == std::vector<std::uint8_t>{3, 4, 0, 1, 2});
  CHECK(ref.dot(s.data(), s.data(), 5, 5) == (16 * 5) % 5);
}

TEST_CASE("row reduction, rank and determinant") {
  const FpMatrix M = FpMatrix::from_rows({{1, 2, 0}, {2, 4, 0}, {0, 1, 1}}, 3, 3);
  CHECK(rank(M) == 2);
  CHECK(determinant(M) == 0);
  CHECK(determinant(FpMatrix::identity(4, 7)) == 1);
  const FpMatrix K = nullspace(M);
  CHECK(K.rows() == 1);
  CHECK((M * K.transpose()).is_zero());
  const Subspace U = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3, 3);
  const Subspace V = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3, 3);
  CHECK(U.intersect(V).dim() == 1);
  CHECK((U + V).is_whole());
  CHECK(U.contains(FpVector{2, 1, 0}));
  CHECK_FALSE(U.contains(FpVector{0, 0, 1}));
}

TEST_CASE("random matrices: rank-nullity and determinant multiplicativity") {
  std::mt19937_64 rng(9);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 70;
      FpMatrix M(r, c, static_cast<Coef>(p));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = static_cast<Coef>(rng() % p);
      CHECK(rank(M) + nullspace(M).rows() == c);
      const std::size_t n = 1 + rng() % 12;
      FpMatrix A(n, n, static_cast<Coef>(p)), B(n, n, static_cast<Coef>(p));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          A(i, j) = static_cast<Coef>(rng() % p);
          B(i, j) = static_cast<Coef>(rng() % p);
        }
      const PrimeField F(static_cast<int>(p));
      CHECK(determinant(A * B) == F.mul(determinant(A), determinant(B)));
    }
  }
}
