#include "nbe/ncalg/presentation.hpp"

#include <set>

namespace nbe {

AlgebraPresentation::Builder::Builder(int p, std::vector<std::string> names)
    : p_(p), names_(std::move(names)) {
  weights_.assign(names_.size(), 1);
  relations_.resize(names_.size() * names_.size());
}

AlgebraPresentation::Builder& AlgebraPresentation::Builder::weights(std::vector<int> w) {
  weights_ = std::move(w);
  return *this;
}

AlgebraPresentation::Builder& AlgebraPresentation::Builder::invertible(std::size_t gen) {
  invertible_ = gen;
  return *this;
}

AlgebraPresentation::Builder& AlgebraPresentation::Builder::relation(std::size_t j, std::size_t i,
                                                                     NCPoly c) {
  if (j <= i || j >= names_.size()) {
    throw MalformedPresentation("relation must be indexed by a pair j > i of generators");
  }
  relations_[j * names_.size() + i] = std::move(c);
  return *this;
}

AlgebraPresentation::Builder& AlgebraPresentation::Builder::rewrite_budget(std::size_t steps) {
  budget_ = steps;
  return *this;
}

AlgebraPresentation AlgebraPresentation::Builder::build() const {
  const PrimeField field = PrimeField::checked(p_);
  const std::size_t n = names_.size();
  if (n == 0) throw MalformedPresentation("presentation needs at least one generator");
  if (n > kMaxGenerators) throw Unsupported("at most 8 generators are supported");
  std::set<std::string> seen;
  for (const auto& nm : names_) {
    if (nm.empty() || !seen.insert(nm).second) {
      throw MalformedPresentation("generator names must be nonempty and distinct");
    }
  }
  if (weights_.size() != n) throw MalformedPresentation("one degree weight per generator required");
  for (int w : weights_)
    if (w < 0) throw MalformedPresentation("degree weights must be nonnegative");
  if (invertible_ && *invertible_ != 0) {
    throw Unsupported("only the first generator may be marked invertible");
  }

  AlgebraPresentation P;
  P.p_ = field.p;
  P.names_ = names_;
  P.weights_ = weights_;
  P.invertible_ = invertible_;
  P.budget_ = budget_;
  P.relations_.assign(n * n, NCPoly(n, field.p));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& rel = relations_[j * n + i];
      if (!rel) continue;
      if (rel->ngens() != n || rel->p() != field.p) {
        throw MalformedPresentation("relation [" + names_[j] + "," + names_[i] +
                                    "] uses a different ring");
      }
      for (const auto& [m, c] : rel->terms()) {
        for (std::size_t g = 0; g < n; ++g) {
          if (m[g] < 0 && !(invertible_ && g == *invertible_)) {
            throw MalformedPresentation("negative exponent on a non-invertible generator");
          }
        }
      }
      if (!rel->is_zero() && rel->weighted_degree(weights_) > weights_[i] + weights_[j] + 1) {
        throw MalformedPresentation("relation [" + names_[j] + "," + names_[i] +
                                    "] exceeds the degree guard");
      }
      P.relations_[j * n + i] = *rel;
    }
  }
  return P;
}

std::optional<std::size_t> AlgebraPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

NCPoly AlgebraPresentation::generator(std::size_t i, int power) const {
  if (power < 0 && !(invertible_ && *invertible_ == i)) {
    throw MalformedPresentation("generator " + names_[i] + " is not invertible");
  }
  return NCPoly::monomial(Monomial::generator(ngens(), i, power), 1, p_);
}

}  // namespace nbe
