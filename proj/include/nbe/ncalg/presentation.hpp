#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbe/ncalg/ncpoly.hpp"

namespace nbe {

/// Commutation-type presentation over F_p: ordered generators g_0 < g_1 < ...
/// and, for every pair j > i, a rule g_j g_i = g_i g_j + c_{ji}.
///
/// The degree weights drive the termination guard: every c_{ji} must have
/// weighted degree at most w_i + w_j + 1. Generator 0 may be declared
/// invertible; its commutation rules are derived from the others.
class AlgebraPresentation {
 public:
  static constexpr std::size_t kDefaultRewriteBudget = 50'000'000;

  class Builder {
   public:
    Builder(int p, std::vector<std::string> names);
    Builder& weights(std::vector<int> w);
    Builder& invertible(std::size_t gen);
    /// Sets c_{ji} with j > i, i.e. the commutator [g_j, g_i].
    Builder& relation(std::size_t j, std::size_t i, NCPoly c);
    Builder& rewrite_budget(std::size_t steps);
    AlgebraPresentation build() const;

   private:
    int p_;
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::optional<std::size_t> invertible_;
    std::vector<std::optional<NCPoly>> relations_;
    std::size_t budget_ = kDefaultRewriteBudget;
  };

  Coef p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  std::size_t ngens() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::vector<int>& weights() const { return weights_; }
  std::optional<std::size_t> invertible() const { return invertible_; }
  std::size_t rewrite_budget() const { return budget_; }

  /// c_{ji} = [g_j, g_i] for j > i.
  const NCPoly& relation(std::size_t j, std::size_t i) const { return relations_[j * ngens() + i]; }

  NCPoly zero() const { return NCPoly(ngens(), p_); }
  NCPoly one() const { return NCPoly::constant(ngens(), p_, 1); }
  NCPoly constant(Coef c) const { return NCPoly::constant(ngens(), p_, c); }
  NCPoly generator(std::size_t i, int power = 1) const;

  bool operator==(const AlgebraPresentation&) const = default;

 private:
  AlgebraPresentation() = default;

  Coef p_ = 2;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::optional<std::size_t> invertible_;
  std::vector<NCPoly> relations_;
  std::size_t budget_ = kDefaultRewriteBudget;
};

}  // namespace nbe
