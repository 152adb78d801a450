#include "nbe/normnbe/comm_poly.hpp"

#include <algorithm>
#include <map>

namespace nbe {

namespace {

constexpr unsigned kExpBits = 12;
constexpr CommPoly::Key kExpMask = (CommPoly::Key{1} << kExpBits) - 1;

unsigned shift_of(std::size_t i) { return static_cast<unsigned>(36 - kExpBits * i); }

bool divides(CommPoly::Key a, CommPoly::Key b) {
  for (std::size_t i = 0; i < CommPoly::kMaxVars; ++i) {
    if (((a >> shift_of(i)) & kExpMask) > ((b >> shift_of(i)) & kExpMask)) return false;
  }
  return true;
}

}  // namespace

CommPoly::CommPoly(std::size_t nvars, Coef p, VarFamily family)
    : nvars_(nvars), p_(p), family_(family) {
  if (nvars > kMaxVars) throw Unsupported("commutative polynomials support at most 4 variables");
}

CommPoly CommPoly::constant(std::size_t nvars, Coef p, Coef c, VarFamily family) {
  return monomial(nvars, p, Exponents{}, c, family);
}

CommPoly CommPoly::variable(std::size_t nvars, Coef p, std::size_t i, VarFamily family) {
  Exponents e{};
  e[i] = 1;
  return monomial(nvars, p, e, 1, family);
}

CommPoly CommPoly::monomial(std::size_t nvars, Coef p, const Exponents& e, Coef c,
                            VarFamily family) {
  CommPoly r(nvars, p, family);
  c = static_cast<Coef>(c % p);
  if (c != 0) r.terms_.emplace_back(pack(e), c);
  return r;
}

CommPoly::Key CommPoly::pack(const Exponents& e) {
  Key k = 0;
  long long deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] < 0 || e[i] > kMaxExponent) throw TooLarge("commutative exponent out of range");
    k |= static_cast<Key>(e[i]) << shift_of(i);
    deg += e[i];
  }
  if (deg > 0xFFFF) throw TooLarge("commutative degree out of range");
  return k | (static_cast<Key>(deg) << 48);
}

CommPoly::Exponents CommPoly::unpack(Key k) {
  Exponents e{};
  for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<int>((k >> shift_of(i)) & kExpMask);
  return e;
}

CommPoly CommPoly::from_terms(std::size_t nvars, Coef p, VarFamily family, std::vector<Term> terms) {
  CommPoly r(nvars, p, family);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (const auto& [k, c] : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == k) {
      r.terms_.back().second = static_cast<Coef>((r.terms_.back().second + c) % p);
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (c % p != 0) {
      r.terms_.emplace_back(k, static_cast<Coef>(c % p));
    }
  }
  return r;
}

Coef CommPoly::coefficient(const Exponents& e) const {
  const Key k = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Key key) { return t.first < key; });
  return it != terms_.end() && it->first == k ? it->second : Coef{0};
}

CommPoly CommPoly::homogeneous_part(int d) const {
  CommPoly r(nvars_, p_, family_);
  for (const auto& t : terms_)
    if (key_degree(t.first) == d) r.terms_.push_back(t);
  return r;
}

CommPoly CommPoly::leading_form() const {
  return is_zero() ? *this : homogeneous_part(degree());
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(nvars_, p_, family_, std::move(all));
}

CommPoly CommPoly::operator-(const CommPoly& o) const { return *this + o.scaled(static_cast<Coef>(p_ - 1)); }

CommPoly CommPoly::scaled(Coef c) const {
  CommPoly r(nvars_, p_, family_);
  c = static_cast<Coef>(c % p_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = static_cast<Coef>(t.second * c % p_);
  return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
  if (is_zero() || o.is_zero()) return CommPoly(nvars_, p_, family_);
  // Each exponent is at most the total degree, so bounding the degree sum
  // rules out carries between packed fields.
  if (degree() + o.degree() > kMaxExponent) throw TooLarge("commutative product degree out of range");
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) all.emplace_back(ka + kb, static_cast<Coef>(ca * cb % p_));
  return from_terms(nvars_, p_, family_, std::move(all));
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly r = constant(nvars_, p_, 1, family_);
  CommPoly b = *this;
  while (e != 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e != 0) b = b * b;
  }
  return r;
}

CommPoly CommPoly::divide_exact(const CommPoly& o) const {
  if (o.is_zero()) throw InternalInconsistency("division by the zero polynomial");
  const PrimeField F(p_);
  const auto [lead_key, lead_c] = o.terms_.back();
  const Coef lead_inv = F.inv(lead_c);
  std::map<Key, Coef> rem(terms_.begin(), terms_.end());
  std::vector<Term> quot;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    const Key k = top->first;
    if (!divides(lead_key, k)) throw InternalInconsistency("inexact polynomial division");
    const Key qk = k - lead_key;
    const Coef qc = F.mul(top->second, lead_inv);
    quot.emplace_back(qk, qc);
    for (const auto& [ok, oc] : o.terms_) {
      auto [it, inserted] = rem.try_emplace(qk + ok, Coef{0});
      it->second = F.sub(it->second, F.mul(qc, oc));
      if (it->second == 0) rem.erase(it);
    }
  }
  return from_terms(nvars_, p_, family_, std::move(quot));
}

std::optional<CommPoly> CommPoly::frobenius_root(int q) const {
  CommPoly r(nvars_, p_, family_);
  for (const auto& [k, c] : terms_) {
    Exponents e = unpack(k);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] % q != 0) return std::nullopt;
      e[i] /= q;
    }
    r.terms_.emplace_back(pack(e), c);
  }
  // Dividing every exponent by q preserves graded-lex order.
  return r;
}

CommPoly CommPoly::lift_to_t() const {
  if (family_ != VarFamily::X) throw InternalInconsistency("lift_to_t expects x-coordinates");
  CommPoly r(nvars_, p_, VarFamily::T);
  for (const auto& [k, c] : terms_) {
    Exponents e = unpack(k);
    for (auto& v : e) v *= p_;
    r.terms_.emplace_back(pack(e), c);
  }
  return r;
}

std::string to_string(const CommPoly& f) {
  if (f.is_zero()) return "0";
  const char var = f.family() == VarFamily::X ? 'x' : 't';
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto e = CommPoly::unpack(it->first);
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var + std::to_string(i + 1);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += std::to_string(it->second);
    } else {
      if (it->second != 1) out += std::to_string(it->second) + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace nbe
