#include "nbe/ncalg/graded.hpp"

#include <algorithm>
#include <map>

#include "nbe/linalg/fp_matrix.hpp"
#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe {

AlgebraPresentation associated_graded(const AlgebraPresentation& P, const WeightFiltration& W) {
  const std::size_t n = P.ngens();
  if (W.weights.size() != n) {
    throw FiltrationIncompatible("filtration needs one weight per generator");
  }
  if (std::none_of(W.weights.begin(), W.weights.end(), [](int w) { return w > 0; })) {
    throw FiltrationIncompatible("filtration needs at least one positive weight");
  }
  for (int w : W.weights)
    if (w < 0) throw FiltrationIncompatible("filtration weights must be nonnegative");

  AlgebraPresentation::Builder b(P.p(), P.names());
  b.weights(P.weights()).rewrite_budget(P.rewrite_budget());
  if (P.invertible()) b.invertible(*P.invertible());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const int target = W.weights[j] + W.weights[i];
      NCPoly kept(n, P.p());
      for (const auto& [m, c] : P.relation(j, i).terms()) {
        const int w = m.weighted_degree(W.weights);
        const bool too_light = W.kind == WeightFiltration::Kind::Adic ? w < target : w > target;
        if (too_light) {
          throw FiltrationIncompatible("relation [" + P.name(j) + "," + P.name(i) +
                                       "] has a component outside the filtration step " +
                                       std::to_string(target));
        }
        if (w == target) kept.add_term(m, c);
      }
      b.relation(j, i, std::move(kept));
    }
  }
  return b.build();
}

namespace {

void count_monomials(std::size_t gen, std::size_t ngens, int remaining, long long& count) {
  if (gen + 1 == ngens) {
    ++count;
    return;
  }
  for (int e = 0; e <= remaining; ++e) count_monomials(gen + 1, ngens, remaining - e, count);
}

}  // namespace

long long hilbert_function(const AlgebraPresentation& P, int d) {
  if (P.invertible()) throw Unsupported("Hilbert function needs a presentation without inverses");
  if (d < 0) return 0;
  long long count = 0;
  count_monomials(0, P.ngens(), d, count);
  return count;
}

std::size_t word_span_dimension(const AlgebraPresentation& P, int d) {
  if (P.invertible()) throw Unsupported("word spans need a presentation without inverses");
  if (d < 0) return 0;
  PbwRing ring(P);
  const std::size_t n = P.ngens();
  std::vector<NCPoly> forms;
  std::map<Monomial, std::size_t> index;
  std::vector<std::size_t> word(static_cast<std::size_t>(d), 0);
  while (true) {
    Word w;
    for (auto g : word) w.push_back({g, 1});
    NCPoly nf = ring.normal_form(FreeElement::word(n, P.p(), w));
    for (const auto& [m, c] : nf.terms()) index.try_emplace(m, index.size());
    forms.push_back(std::move(nf));
    std::size_t pos = 0;
    while (pos < word.size() && ++word[pos] == n) word[pos++] = 0;
    if (pos == word.size()) break;
  }
  FpMatrix M(0, index.size(), P.p());
  FpVector row(index.size());
  for (const auto& f : forms) {
    std::fill(row.begin(), row.end(), Coef{0});
    for (const auto& [m, c] : f.terms()) row[index.at(m)] = c;
    M.append_row(row);
  }
  return rank(M);
}

bool is_commutative_presentation(const AlgebraPresentation& P) {
  for (std::size_t j = 0; j < P.ngens(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!P.relation(j, i).is_zero()) return false;
  return true;
}

}  // namespace nbe
