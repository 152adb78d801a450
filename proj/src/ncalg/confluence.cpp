#include "nbe/ncalg/confluence.hpp"

#include <optional>

#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe {

namespace {

struct Symbol {
  std::size_t gen;
  bool inverse;
};

class OverlapChecker {
 public:
  explicit OverlapChecker(const AlgebraPresentation& P) : P_(P), ring_(P) {}

  NCPoly as_poly(Symbol s) const { return P_.generator(s.gen, s.inverse ? -1 : 1); }

  int weight(Symbol s) const {
    const int w = P_.weights()[s.gen];
    return s.inverse ? -w : w;
  }

  std::string label(Symbol s) const { return P_.name(s.gen) + (s.inverse ? "^-1" : ""); }

  // Result of applying the single rule for the adjacent pair x y, if any.
  std::optional<NCPoly> rewrite(Symbol x, Symbol y) {
    const std::size_t n = P_.ngens();
    if (x.gen == y.gen) {
      if (x.inverse != y.inverse) return P_.one();
      return std::nullopt;
    }
    if (x.gen < y.gen) return std::nullopt;
    Monomial swapped(n);
    swapped.set(y.gen, y.inverse ? -1 : 1);
    swapped.add(x.gen, 1);
    NCPoly out = NCPoly::monomial(swapped, 1, P_.p());
    const NCPoly& c = P_.relation(x.gen, y.gen);
    if (!y.inverse) {
      out += c;
    } else {
      // [g_k, g_0^{-1}] = -g_0^{-1} c_{k0} g_0^{-1}
      NCPoly t = ring_.multiply(c, as_poly(y));
      out -= ring_.left_multiply(PbwRing::kInverse, t);
    }
    return out;
  }

  PbwRing& ring() { return ring_; }

 private:
  const AlgebraPresentation& P_;
  PbwRing ring_;
};

}  // namespace

ConfluenceReport check_confluence(const AlgebraPresentation& P, int max_degree) {
  OverlapChecker checker(P);
  std::vector<Symbol> alphabet;
  for (std::size_t g = 0; g < P.ngens(); ++g) alphabet.push_back({g, false});
  if (P.invertible()) alphabet.push_back({*P.invertible(), true});

  ConfluenceReport report;
  for (Symbol x : alphabet) {
    for (Symbol y : alphabet) {
      auto left = checker.rewrite(x, y);
      if (!left) continue;
      for (Symbol z : alphabet) {
        auto right = checker.rewrite(y, z);
        if (!right) continue;
        if (checker.weight(x) + checker.weight(y) + checker.weight(z) > max_degree) {
          ++report.overlaps_skipped;
          continue;
        }
        ++report.overlaps_checked;
        const NCPoly route_a = checker.ring().multiply(*left, checker.as_poly(z));
        const NCPoly route_b = checker.ring().multiply(checker.as_poly(x), *right);
        NCPoly diff = route_a - route_b;
        if (!diff.is_zero()) {
          report.passed = false;
          report.discrepancies.push_back(
              {checker.label(x) + "*" + checker.label(y) + "*" + checker.label(z), std::move(diff)});
        }
      }
    }
  }
  return report;
}

}  // namespace nbe
