#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "nbe/localring/fd_algebra.hpp"

namespace testsupport {

/// Unital subalgebra of M_n(F_p) generated by the given matrices (flattened
/// row-major), as a structure-constant algebra on the RREF basis.
inline nbe::FinDimAlgebra matrix_subalgebra(nbe::Coef p, std::size_t n, const std::vector<nbe::FpVector>& gens) {
  const std::size_t nn = n * n;
  auto matmul = [&](const nbe::FpVector& a, const nbe::FpVector& b) {
    nbe::FpVector c(nn, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          c[i * n + j] = static_cast<nbe::Coef>((c[i * n + j] + a[i * n + k] * b[k * n + j]) % p);
    return c;
  };
  nbe::FpVector id(nn, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::vector<nbe::FpVector> span_gens{id};
  span_gens.insert(span_gens.end(), gens.begin(), gens.end());
  nbe::Subspace S = nbe::Subspace::span(span_gens, nn, p);
  for (;;) {
    std::vector<nbe::FpVector> more = S.basis_vectors();
    for (const auto& a : S.basis_vectors())
      for (const auto& g : gens) more.push_back(matmul(a, g));
    nbe::Subspace next = nbe::Subspace::span(more, nn, p);
    if (next.dim() == S.dim()) break;
    S = next;
  }
  const auto basis = S.basis_vectors();
  const std::size_t d = basis.size();
  std::vector<std::vector<nbe::FpVector>> c(d, std::vector<nbe::FpVector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) c[a][b] = S.coordinates(matmul(basis[a], basis[b]));
  return nbe::FinDimAlgebra(p, std::move(c), S.coordinates(id), std::nullopt, "sub");
}

/// The same algebra as matrix_subalgebra, but written on a basis of
/// invertible matrices drawn at random from it. Principal one-sided ideals
/// of basis elements are then the whole algebra.
inline nbe::FinDimAlgebra invertible_basis_algebra(nbe::Coef p, std::size_t n, const std::vector<nbe::FpVector>& gens,
                                                   std::mt19937_64& rng) {
  const nbe::FinDimAlgebra A = matrix_subalgebra(p, n, gens);
  const std::size_t d = A.dim();
  std::vector<nbe::FpVector> basis;
  nbe::Subspace S(d, p);
  for (int attempt = 0; attempt < 100000 && S.dim() < d; ++attempt) {
    nbe::FpVector x(d);
    for (auto& c : x) c = static_cast<nbe::Coef>(rng() % p);
    if (nbe::determinant(A.left_mult(x)) == 0 || S.contains(x)) continue;
    basis.push_back(x);
    S = S + nbe::Subspace::span({x}, d, p);
  }
  if (S.dim() < d) throw std::runtime_error("no invertible basis found");
  // Change of basis: new coordinates are solutions of sum_i y_i b_i = v.
  nbe::FpMatrix B(d, d, p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) B(k, i) = basis[i][k];
  auto solve = [&](const nbe::FpVector& v) {
    nbe::FpMatrix aug(d, d + 1, p);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug(r, c) = B(r, c);
      aug(r, d) = v[r];
    }
    const auto ech = nbe::row_reduce(aug);
    nbe::FpVector y(d, 0);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) y[ech.pivots[r]] = ech.rref(r, d);
    return y;
  };
  std::vector<std::vector<nbe::FpVector>> c(d, std::vector<nbe::FpVector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) c[a][b] = solve(A.mul(basis[a], basis[b]));
  return nbe::FinDimAlgebra(p, std::move(c), solve(A.unit()), std::nullopt, "inv");
}

inline nbe::FpVector random_matrix(nbe::Coef p, std::size_t n, std::mt19937_64& rng) {
  nbe::FpVector m(n * n);
  for (auto& x : m) x = static_cast<nbe::Coef>(rng() % p);
  return m;
}

}  // namespace testsupport
