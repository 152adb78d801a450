#include "nbe/homlab/module.hpp"

#include <utility>

namespace nbe {

namespace {

FpMatrix combine(const std::vector<FpMatrix>& mats, const FpVector& coeffs, std::size_t m, Coef p) {
  const PrimeField f(p);
  FpMatrix out(m, m, p);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) out(r, c) = f.add(out(r, c), f.mul(coeffs[k], mats[k](r, c)));
  }
  return out;
}

}  // namespace

FDModule::FDModule(const FinDimAlgebra& A, ModuleSide side, std::vector<FpMatrix> action)
    : side_(side), p_(A.p()), m_(0), act_(std::move(action)) {
  if (act_.size() != A.dim()) throw InvalidStructure("module needs one action matrix per basis element");
  m_ = act_.front().rows();
  for (const auto& a : act_)
    if (a.rows() != m_ || a.cols() != m_ || a.p() != p_) throw InvalidStructure("action matrices have inconsistent shapes");
  if (action_of(A.unit()) != FpMatrix::identity(m_, p_)) throw InvalidStructure("unit does not act as the identity");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const FpMatrix lhs = action_of(A.mul(A.basis_vector(i), A.basis_vector(j)));
      const FpMatrix rhs = side == ModuleSide::Left ? act_[i] * act_[j] : act_[j] * act_[i];
      if (lhs != rhs)
        throw InvalidStructure("action is not compatible with e" + std::to_string(i + 1) + " * e" +
                               std::to_string(j + 1));
    }
}

FDModule FDModule::zero(const FinDimAlgebra& A, ModuleSide side) {
  return FDModule(A, side, std::vector<FpMatrix>(A.dim(), FpMatrix(0, 0, A.p())));
}

FDModule FDModule::regular(const FinDimAlgebra& A, ModuleSide side) {
  std::vector<FpMatrix> act;
  for (std::size_t k = 0; k < A.dim(); ++k)
    act.push_back(side == ModuleSide::Left ? A.left_basis_mult(k) : A.right_mult(A.basis_vector(k)));
  return FDModule(A, side, std::move(act));
}

FDModule FDModule::cyclic(const FinDimAlgebra& A, const Subspace& left_ideal) {
  const SubspaceIdeal I(A, left_ideal, Side::Left);
  std::vector<bool> pivot(A.dim(), false);
  for (std::size_t c : left_ideal.pivots()) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!pivot[i]) free.push_back(i);
  std::vector<FpMatrix> act;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    FpMatrix a(free.size(), free.size(), A.p());
    for (std::size_t c = 0; c < free.size(); ++c) {
      const FpVector img = left_ideal.reduce(A.mul(A.basis_vector(k), A.basis_vector(free[c])));
      for (std::size_t r = 0; r < free.size(); ++r) a(r, c) = img[free[r]];
    }
    act.push_back(std::move(a));
  }
  return FDModule(A, ModuleSide::Left, std::move(act));
}

FDModule FDModule::direct_sum(const FinDimAlgebra& A, const FDModule& M, const FDModule& N) {
  if (M.side() != N.side()) throw InvalidStructure("direct sum of modules on different sides");
  const std::size_t m = M.dim(), n = N.dim();
  std::vector<FpMatrix> act;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    FpMatrix a(m + n, m + n, A.p());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = M.action(k)(r, c);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(m + r, m + c) = N.action(k)(r, c);
    act.push_back(std::move(a));
  }
  return FDModule(A, M.side(), std::move(act));
}

FpMatrix FDModule::action_of(const FpVector& a) const { return combine(act_, a, m_, p_); }

FDModule FDModule::restrict_to(const FinDimAlgebra& A, const Subspace& S) const {
  if (S.ambient() != m_) throw InvalidStructure("subspace lives in a different module");
  const auto basis = S.basis_vectors();
  std::vector<FpMatrix> act;
  for (const auto& a : act_) {
    FpMatrix r(basis.size(), basis.size(), p_);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const FpVector img = a.apply(basis[c]);
      if (!S.contains(img)) throw InvalidStructure("subspace is not a submodule");
      const FpVector coords = S.coordinates(img);
      for (std::size_t t = 0; t < basis.size(); ++t) r(t, c) = coords[t];
    }
    act.push_back(std::move(r));
  }
  return FDModule(A, side_, std::move(act));
}

Subspace FDModule::cyclic_submodule(const FpVector& v) const {
  std::vector<FpVector> imgs;
  for (const auto& a : act_) imgs.push_back(a.apply(v));
  return Subspace::span(imgs, m_, p_);
}

FDModule FDModule::as_left_over_opposite(const FinDimAlgebra& Aop) const {
  if (side_ != ModuleSide::Right) throw Unsupported("only right modules turn into left modules over the opposite");
  return FDModule(Aop, ModuleSide::Left, act_);
}

}  // namespace nbe
