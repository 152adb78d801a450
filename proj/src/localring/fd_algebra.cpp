#include "nbe/localring/fd_algebra.hpp"

#include <algorithm>
#include <utility>

namespace nbe {

namespace {

FpVector unit_vector(std::size_t d, std::size_t i) {
  FpVector v(d, 0);
  v[i] = 1;
  return v;
}

bool is_zero_vector(const FpVector& v) {
  for (Coef c : v)
    if (c != 0) return false;
  return true;
}

// Constants for a basis of matrix units indexed by `cells`; E_ij E_kl = [j == k] E_il.
FinDimAlgebra matrix_units(Coef p, int n, bool upper_only, std::string name) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = upper_only ? i : 0; j < n; ++j) cells.emplace_back(i, j);
  const std::size_t d = cells.size();
  auto index_of = [&](int i, int j) {
    for (std::size_t t = 0; t < d; ++t)
      if (cells[t] == std::pair{i, j}) return t;
    throw InternalInconsistency("matrix unit outside the basis");
  };
  std::vector<std::vector<FpVector>> c(d, std::vector<FpVector>(d, FpVector(d, 0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (cells[a].second == cells[b].first) c[a][b][index_of(cells[a].first, cells[b].second)] = 1;
  FpVector unit(d, 0);
  for (int i = 0; i < n; ++i) unit[index_of(i, i)] = 1;
  return FinDimAlgebra(p, std::move(c), std::move(unit), std::nullopt, std::move(name));
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(Coef p, std::vector<std::vector<FpVector>> constants, FpVector unit,
                             std::optional<Subspace> central, std::string name)
    : p_(PrimeField::checked(p).p), d_(constants.size()), c_(std::move(constants)), unit_(std::move(unit)),
      name_(std::move(name)) {
  if (d_ == 0) throw InvalidStructure("algebra must have positive dimension");
  if (d_ > kMaxDimension) throw TooLarge("algebra dimension above 40");
  if (unit_.size() != d_) throw InvalidStructure("unit has the wrong length");
  for (Coef u : unit_)
    if (u >= p_) throw InvalidStructure("unit coordinate outside F_p");
  for (const auto& row : c_) {
    if (row.size() != d_) throw InvalidStructure("structure constant table is not square");
    for (const auto& v : row) {
      if (v.size() != d_) throw InvalidStructure("product vector has the wrong length");
      for (Coef x : v)
        if (x >= p_) throw InvalidStructure("structure constant outside F_p");
    }
  }

  left_.reserve(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    FpMatrix L(d_, d_, p_);
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k) L(k, j) = c_[i][j][k];
    left_.push_back(std::move(L));
  }

  for (std::size_t j = 0; j < d_; ++j) {
    const FpVector e = unit_vector(d_, j);
    if (mul(unit_, e) != e || mul(e, unit_) != e) throw InvalidStructure("unit law fails on e" + std::to_string(j + 1));
  }
  // (e_i e_j) e_k = sum_m c_ij^m c_mk  versus  e_i (e_j e_k) = sum_m c_jk^m c_im.
  std::vector<unsigned> lhs(d_), rhs(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0u);
        std::fill(rhs.begin(), rhs.end(), 0u);
        for (std::size_t m = 0; m < d_; ++m) {
          if (const unsigned a = c_[i][j][m]; a != 0)
            for (std::size_t n = 0; n < d_; ++n) lhs[n] += a * c_[m][k][n];
          if (const unsigned b = c_[j][k][m]; b != 0)
            for (std::size_t n = 0; n < d_; ++n) rhs[n] += b * c_[i][m][n];
        }
        for (std::size_t n = 0; n < d_; ++n)
          if (lhs[n] % p_ != rhs[n] % p_)
            throw InvalidStructure("associativity fails on (e" + std::to_string(i + 1) + ", e" +
                                   std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")");
      }

  if (central) {
    if (central->ambient() != d_ || central->p() != p_) throw InvalidStructure("central subalgebra has the wrong shape");
    central_ = std::move(*central);
    if (!central_.contains(unit_)) throw InvalidStructure("central subalgebra must contain 1");
    const auto basis = central_.basis_vectors();
    for (const auto& r : basis) {
      for (std::size_t j = 0; j < d_; ++j) {
        const FpVector e = unit_vector(d_, j);
        if (mul(r, e) != mul(e, r)) throw InvalidStructure("central subalgebra element is not central");
      }
      for (const auto& s : basis)
        if (!central_.contains(mul(r, s))) throw InvalidStructure("central subalgebra is not closed");
    }
  } else {
    central_ = Subspace::span({unit_}, d_, p_);
  }
}

FinDimAlgebra FinDimAlgebra::upper_triangular(Coef p, int n) {
  if (n < 1 || n > 6) throw Unsupported("upper triangular preset needs 1 <= n <= 6");
  return matrix_units(p, n, true, "T" + std::to_string(n));
}

FinDimAlgebra FinDimAlgebra::full_matrix(Coef p, int n) {
  if (n < 1 || n > 6) throw Unsupported("full matrix preset needs 1 <= n <= 6");
  return matrix_units(p, n, false, "M" + std::to_string(n));
}

FinDimAlgebra FinDimAlgebra::truncated_polynomial(Coef p, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > kMaxDimension) throw Unsupported("truncation degree must be in [1, 40]");
  const auto d = static_cast<std::size_t>(k);
  std::vector<std::vector<FpVector>> c(d, std::vector<FpVector>(d, FpVector(d, 0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; a + b < d; ++b) c[a][b][a + b] = 1;
  std::vector<FpVector> even;
  for (std::size_t a = 0; a < d; a += 2) even.push_back(unit_vector(d, a));
  return FinDimAlgebra(p, std::move(c), unit_vector(d, 0), Subspace::span(even, d, p),
                       "Fp[x]/(x^" + std::to_string(k) + ")");
}

FinDimAlgebra FinDimAlgebra::product_of_fields(Coef p) {
  std::vector<std::vector<FpVector>> c{{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  return FinDimAlgebra(p, std::move(c), FpVector{1, 1}, std::nullopt, "FpxFp");
}

FinDimAlgebra FinDimAlgebra::cyclic_group_algebra(Coef p, int m) {
  if (m < 1 || static_cast<std::size_t>(m) > kMaxDimension) throw Unsupported("group order must be in [1, 40]");
  const auto d = static_cast<std::size_t>(m);
  std::vector<std::vector<FpVector>> c(d, std::vector<FpVector>(d, FpVector(d, 0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) c[a][b][(a + b) % d] = 1;
  return FinDimAlgebra(p, std::move(c), unit_vector(d, 0), std::nullopt, "Fp[C" + std::to_string(m) + "]");
}

FinDimAlgebra FinDimAlgebra::opposite() const {
  std::vector<std::vector<FpVector>> c(d_, std::vector<FpVector>(d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) c[i][j] = c_[j][i];
  return FinDimAlgebra(p_, std::move(c), unit_, central_, name_ + "^op");
}

FinDimAlgebra FinDimAlgebra::quotient(const Subspace& ideal) const {
  if (ideal.ambient() != d_) throw InvalidStructure("ideal lives in a different space");
  if (ideal.contains(unit_)) throw InvalidStructure("quotient by the whole algebra");
  std::vector<bool> pivot(d_, false);
  for (std::size_t c : ideal.pivots()) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < d_; ++i)
    if (!pivot[i]) free.push_back(i);
  auto project = [&](const FpVector& v) {
    const FpVector r = ideal.reduce(v);
    FpVector out(free.size());
    for (std::size_t t = 0; t < free.size(); ++t) out[t] = r[free[t]];
    return out;
  };
  const std::size_t q = free.size();
  std::vector<std::vector<FpVector>> c(q, std::vector<FpVector>(q));
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = 0; t < q; ++t) c[s][t] = project(c_[free[s]][free[t]]);
  std::vector<FpVector> cent;
  for (const auto& v : central_.basis_vectors()) cent.push_back(project(v));
  return FinDimAlgebra(p_, std::move(c), project(unit_), Subspace::span(cent, q, p_), name_ + "/I");
}

FpVector FinDimAlgebra::basis_vector(std::size_t i) const { return unit_vector(d_, i); }

FpVector FinDimAlgebra::mul(const FpVector& x, const FpVector& y) const {
  std::vector<unsigned> acc(d_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (y[j] == 0) continue;
      const unsigned w = static_cast<unsigned>(x[i]) * y[j];
      const FpVector& cij = c_[i][j];
      for (std::size_t k = 0; k < d_; ++k) acc[k] = (acc[k] + w * cij[k]) % p_;
    }
  }
  return FpVector(acc.begin(), acc.end());
}

FpMatrix FinDimAlgebra::left_mult(const FpVector& x) const {
  FpMatrix L(d_, d_, p_);
  for (std::size_t j = 0; j < d_; ++j) {
    const FpVector col = mul(x, unit_vector(d_, j));
    for (std::size_t k = 0; k < d_; ++k) L(k, j) = col[k];
  }
  return L;
}

FpMatrix FinDimAlgebra::right_mult(const FpVector& x) const {
  FpMatrix R(d_, d_, p_);
  for (std::size_t j = 0; j < d_; ++j) {
    const FpVector col = mul(unit_vector(d_, j), x);
    for (std::size_t k = 0; k < d_; ++k) R(k, j) = col[k];
  }
  return R;
}

Subspace FinDimAlgebra::center() const {
  // x e_j - e_j x = sum_i x_i (c_ij - c_ji) = 0 for every j.
  FpMatrix m(d_ * d_, d_, p_);
  const PrimeField f(p_);
  for (std::size_t j = 0; j < d_; ++j)
    for (std::size_t k = 0; k < d_; ++k)
      for (std::size_t i = 0; i < d_; ++i) m(j * d_ + k, i) = f.sub(c_[i][j][k], c_[j][i][k]);
  return Subspace::from_rows(nullspace(m));
}

bool FinDimAlgebra::is_nilpotent(const FpVector& x) const {
  // L_x is a d x d matrix, so x nilpotent forces x^d = 0.
  FpVector y = x;
  for (std::size_t i = 1; i < d_ && !is_zero_vector(y); ++i) y = mul(y, x);
  return is_zero_vector(y);
}

std::vector<FpVector> FinDimAlgebra::all_elements(std::size_t budget) const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    count *= p_;
    if (count > budget) throw TooLarge("element enumeration exceeds budget");
  }
  std::vector<FpVector> out;
  out.reserve(count);
  FpVector v(d_, 0);
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(v);
    for (std::size_t i = 0; i < d_; ++i) {
      if (++v[i] < p_) break;
      v[i] = 0;
    }
  }
  return out;
}

SubspaceIdeal::SubspaceIdeal(const FinDimAlgebra& A, Subspace basis, Side side)
    : space_(std::move(basis)), side_(side) {
  if (space_.ambient() != A.dim() || space_.p() != A.p()) throw InvalidStructure("ideal lives in a different space");
  for (const auto& v : space_.basis_vectors())
    for (std::size_t i = 0; i < A.dim(); ++i) {
      const FpVector e = A.basis_vector(i);
      if (!space_.contains(A.mul(e, v))) throw InvalidStructure("subspace is not closed under left multiplication");
      if (side == Side::TwoSided && !space_.contains(A.mul(v, e)))
        throw InvalidStructure("subspace is not closed under right multiplication");
    }
}

SubspaceIdeal SubspaceIdeal::generated(const FinDimAlgebra& A, const std::vector<FpVector>& gens, Side side) {
  const Subspace s = Subspace::span(gens, A.dim(), A.p());
  return SubspaceIdeal(A, side == Side::TwoSided ? two_sided_closure(A, s) : left_closure(A, s), side);
}

SubspaceIdeal SubspaceIdeal::zero(const FinDimAlgebra& A, Side side) {
  return SubspaceIdeal(A, Subspace(A.dim(), A.p()), side);
}

SubspaceIdeal SubspaceIdeal::whole(const FinDimAlgebra& A, Side side) {
  return SubspaceIdeal(A, Subspace::whole(A.dim(), A.p()), side);
}

Subspace product(const FinDimAlgebra& A, const Subspace& I, const Subspace& J) {
  std::vector<FpVector> prods;
  const auto bj = J.basis_vectors();
  for (const auto& x : I.basis_vectors())
    for (const auto& y : bj) prods.push_back(A.mul(x, y));
  return Subspace::span(prods, A.dim(), A.p());
}

Subspace power(const FinDimAlgebra& A, const Subspace& I, int k) {
  if (k < 0) throw Unsupported("negative ideal power");
  Subspace out = Subspace::whole(A.dim(), A.p());
  for (int i = 0; i < k; ++i) out = i == 0 ? I : product(A, out, I);
  return out;
}

namespace {

Subspace closure(const FinDimAlgebra& A, Subspace s, bool right_too) {
  for (;;) {
    std::vector<FpVector> gens = s.basis_vectors();
    const std::size_t base = gens.size();
    for (std::size_t t = 0; t < base; ++t)
      for (std::size_t i = 0; i < A.dim(); ++i) {
        const FpVector e = A.basis_vector(i);
        gens.push_back(A.mul(e, gens[t]));
        if (right_too) gens.push_back(A.mul(gens[t], e));
      }
    Subspace next = Subspace::span(gens, A.dim(), A.p());
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

}  // namespace

Subspace two_sided_closure(const FinDimAlgebra& A, const Subspace& S) { return closure(A, S, true); }
Subspace left_closure(const FinDimAlgebra& A, const Subspace& S) { return closure(A, S, false); }

}  // namespace nbe
