#include "oracles/fd_bruteforce.hpp"

#include <stdexcept>
#include <unordered_set>

namespace oracle {

ElementTable::ElementTable(const nbe::FinDimAlgebra& A) : p_(A.p()), d_(A.dim()), n_(1) {
  for (std::size_t i = 0; i < d_; ++i) n_ *= p_;
  if (n_ > 256) throw std::runtime_error("oracle needs at most 256 elements");
  std::vector<nbe::FpVector> elems(n_);
  for (unsigned a = 0; a < n_; ++a) elems[a] = decode(a);
  add_.resize(n_ * n_);
  mul_.resize(n_ * n_);
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b) {
      nbe::FpVector s(d_);
      for (std::size_t k = 0; k < d_; ++k) s[k] = static_cast<nbe::Coef>((elems[a][k] + elems[b][k]) % p_);
      add_[a * n_ + b] = static_cast<std::uint8_t>(encode(s));
      mul_[a * n_ + b] = static_cast<std::uint8_t>(encode(A.mul(elems[a], elems[b])));
    }
  for (std::size_t i = 0; i < d_; ++i) basis_.push_back(encode(A.basis_vector(i)));
  unit_ = encode(A.unit());
}

unsigned ElementTable::scale(unsigned c, unsigned a) const {
  unsigned r = 0;
  for (unsigned i = 0; i < c; ++i) r = add(r, a);
  return r;
}

unsigned ElementTable::encode(const nbe::FpVector& v) const {
  unsigned a = 0;
  for (std::size_t k = d_; k-- > 0;) a = a * p_ + v[k];
  return a;
}

nbe::FpVector ElementTable::decode(unsigned a) const {
  nbe::FpVector v(d_);
  for (auto& x : v) {
    x = static_cast<nbe::Coef>(a % p_);
    a /= p_;
  }
  return v;
}

ElementSet ElementTable::span(const ElementSet& gens) const {
  ElementSet s;
  s.set(0);
  for (unsigned g = 0; g < n_; ++g) {
    if (!gens.test(g) || s.test(g)) continue;
    ElementSet next = s;
    for (unsigned a = 0; a < n_; ++a)
      if (s.test(a))
        for (unsigned c = 1; c < p_; ++c) next.set(add(a, scale(c, g)));
    s = next;
  }
  return s;
}

bool ElementTable::is_left_ideal(const ElementSet& S) const {
  for (unsigned a = 0; a < n_; ++a)
    if (S.test(a))
      for (unsigned b : basis_)
        if (!S.test(mul(b, a))) return false;
  return true;
}

bool ElementTable::is_two_sided_ideal(const ElementSet& S) const {
  if (!is_left_ideal(S)) return false;
  for (unsigned a = 0; a < n_; ++a)
    if (S.test(a))
      for (unsigned b : basis_)
        if (!S.test(mul(a, b))) return false;
  return true;
}

bool ElementTable::is_nilpotent(unsigned a) const {
  unsigned x = a;
  for (std::size_t i = 0; i <= d_; ++i) {
    if (x == 0) return true;
    x = mul(x, a);
  }
  return x == 0;
}

std::vector<ElementSet> ElementTable::all_subspaces() const {
  std::unordered_set<ElementSet> seen;
  ElementSet zero;
  zero.set(0);
  std::vector<ElementSet> out{zero}, frontier{zero};
  seen.insert(zero);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& S : frontier)
      for (unsigned v = 0; v < n_; ++v) {
        if (S.test(v)) continue;
        // S + F_p v, as the union of the translates S + c v.
        ElementSet T = S;
        for (unsigned c = 1; c < p_; ++c) {
          const unsigned cv = scale(c, v);
          for (unsigned a = 0; a < n_; ++a)
            if (S.test(a)) T.set(add(a, cv));
        }
        if (seen.insert(T).second) {
          out.push_back(T);
          next.push_back(T);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

ElementSet ElementTable::product(const ElementSet& I, const ElementSet& J) const {
  ElementSet gens;
  for (unsigned a = 0; a < n_; ++a)
    if (I.test(a))
      for (unsigned b = 0; b < n_; ++b)
        if (J.test(b)) gens.set(mul(a, b));
  return span(gens);
}

ElementSet to_set(const ElementTable& T, const nbe::Subspace& S) {
  ElementSet gens;
  for (const auto& v : S.basis_vectors()) gens.set(T.encode(v));
  return T.span(gens);
}

ElementSet radical_by_nilpotence(const ElementTable& T) {
  ElementSet out;
  for (unsigned x = 0; x < T.size(); ++x) {
    bool ok = true;
    for (unsigned y = 0; y < T.size() && ok; ++y) ok = T.is_nilpotent(T.mul(x, y));
    if (ok) out.set(x);
  }
  return out;
}

namespace {

std::vector<ElementSet> maximal_among(const ElementTable& T, bool two_sided) {
  std::vector<ElementSet> proper;
  for (const auto& S : T.all_subspaces()) {
    if (S.test(T.unit())) continue;
    if (two_sided ? T.is_two_sided_ideal(S) : T.is_left_ideal(S)) proper.push_back(S);
  }
  std::vector<ElementSet> out;
  for (const auto& S : proper) {
    bool maximal = true;
    for (const auto& U : proper)
      if (U != S && (S & U) == S) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(S);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> maximal_left_ideals(const ElementTable& T) { return maximal_among(T, false); }
std::vector<ElementSet> maximal_two_sided_ideals(const ElementTable& T) { return maximal_among(T, true); }

ElementSet intersection(const std::vector<ElementSet>& sets, std::size_t n) {
  ElementSet out;
  for (std::size_t a = 0; a < n; ++a) out.set(a);
  for (const auto& s : sets) out &= s;
  return out;
}

std::optional<int> least_power_inside(const ElementTable& T, const ElementSet& I, const ElementSet& target) {
  ElementSet cur = I;
  for (int k = 1;; ++k) {
    if ((cur & target) == cur) return k;
    ElementSet next = T.product(cur, I);
    if (next == cur) return std::nullopt;
    cur = next;
  }
}

}  // namespace oracle
