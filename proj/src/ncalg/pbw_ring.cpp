#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe {

namespace {

constexpr int kMaxDepth = 20000;

struct DepthGuard {
  int& depth;
  explicit DepthGuard(int& d) : depth(d) {
    if (++depth > kMaxDepth) {
      --depth;
      throw MalformedPresentation("rewriting exceeded the recursion guard");
    }
  }
  ~DepthGuard() { --depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

}  // namespace

PbwRing::PbwRing(AlgebraPresentation presentation) : P_(std::move(presentation)) {}

NCPoly PbwRing::shift_inverse(const NCPoly& x) const {
  NCPoly out(x.ngens(), x.p());
  for (const auto& [m, c] : x.terms()) {
    Monomial s = m;
    s.add(0, -1);
    out.add_term(s, c);
  }
  return out;
}

const NCPoly& PbwRing::left_mul_mono(int letter, const Monomial& m) {
  Key key{letter, m};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (++steps_ > P_.rewrite_budget()) {
    throw MalformedPresentation("rewriting exceeded the step budget; presentation does not terminate");
  }
  DepthGuard guard(depth_);

  const std::size_t n = P_.ngens();
  NCPoly result(n, P_.p());
  if (letter == kInverse) {
    Monomial s = m;
    s.add(0, -1);
    result.add_term(s, 1);
  } else {
    const auto k = static_cast<std::size_t>(letter);
    const std::size_t i = m.leading_index();
    if (i >= k) {
      Monomial s = m;
      s.add(k, 1);
      result.add_term(s, 1);
    } else if (m[i] > 0) {
      // g_k g_i^a r = g_i (g_k g_i^{a-1} r) + c_{ki} g_i^{a-1} r
      Monomial m1 = m;
      m1.add(i, -1);
      const NCPoly r1 = left_mul_mono(letter, m1);
      accumulate_left(static_cast<int>(i), r1, result, 1);
      const NCPoly& c = P_.relation(k, i);
      for (const auto& [cm, cc] : c.terms()) {
        result.add_scaled(apply_monomial(cm, NCPoly::monomial(m1, 1, P_.p())), cc);
      }
    } else {
      // i == 0 is the invertible generator with a negative exponent:
      // g_k g_0^{-1} = g_0^{-1} g_k - g_0^{-1} c_{k0} g_0^{-1}
      Monomial m1 = m;
      m1.add(0, 1);
      const NCPoly r1 = left_mul_mono(letter, m1);
      result += shift_inverse(r1);
      const NCPoly& c = P_.relation(k, 0);
      NCPoly t(n, P_.p());
      for (const auto& [cm, cc] : c.terms()) {
        t.add_scaled(apply_monomial(cm, NCPoly::monomial(m, 1, P_.p())), cc);
      }
      result -= shift_inverse(t);
    }
  }
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(result));
  return it->second;
}

void PbwRing::accumulate_left(int letter, const NCPoly& x, NCPoly& out, Coef scale) {
  const PrimeField f(P_.p());
  for (const auto& [m, c] : x.terms()) {
    const NCPoly& r = left_mul_mono(letter, m);
    out.add_scaled(r, f.mul(c, scale));
  }
}

NCPoly PbwRing::left_multiply(int letter, const NCPoly& x) {
  NCPoly out(P_.ngens(), P_.p());
  accumulate_left(letter, x, out, 1);
  return out;
}

NCPoly PbwRing::apply_monomial(const Monomial& word, const NCPoly& x) {
  NCPoly cur = x;
  for (std::size_t g = P_.ngens(); g-- > 0;) {
    const int e = word[g];
    if (e == 0) continue;
    const int letter = e > 0 ? static_cast<int>(g) : kInverse;
    for (int r = 0; r < (e > 0 ? e : -e); ++r) cur = left_multiply(letter, cur);
  }
  return cur;
}

NCPoly PbwRing::multiply(const NCPoly& a, const NCPoly& b) {
  NCPoly out(P_.ngens(), P_.p());
  for (const auto& [m, c] : a.terms()) out.add_scaled(apply_monomial(m, b), c);
  return out;
}

NCPoly PbwRing::commutator(const NCPoly& a, const NCPoly& b) {
  return multiply(a, b) - multiply(b, a);
}

NCPoly PbwRing::power(const NCPoly& a, unsigned e) {
  NCPoly r = P_.one();
  for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

NCPoly PbwRing::normal_form(const FreeElement& x) {
  const std::size_t n = P_.ngens();
  if (x.ngens != n || x.p != P_.p()) {
    throw MalformedPresentation("element does not belong to this presentation");
  }
  NCPoly out(n, P_.p());
  for (const auto& term : x.terms) {
    NCPoly cur = NCPoly::constant(n, P_.p(), 1);
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
      if (it->gen >= n) throw MalformedPresentation("word uses an unknown generator");
      if (it->power < 0 && !(P_.invertible() && *P_.invertible() == it->gen)) {
        throw MalformedPresentation("negative power of non-invertible generator " + P_.name(it->gen));
      }
      const int letter = it->power > 0 ? static_cast<int>(it->gen) : kInverse;
      for (int r = 0; r < (it->power > 0 ? it->power : -it->power); ++r) {
        cur = left_multiply(letter, cur);
      }
    }
    out.add_scaled(cur, term.coef);
  }
  return out;
}

NCPoly normal_form(const FreeElement& x, const AlgebraPresentation& P) {
  return PbwRing(P).normal_form(x);
}

NCPoly multiply(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& P) {
  return PbwRing(P).multiply(a, b);
}

NCPoly commutator(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& P) {
  return PbwRing(P).commutator(a, b);
}

}  // namespace nbe
