#include "nbe/ncalg/ncpoly.hpp"

#include <algorithm>

namespace nbe {

NCPoly NCPoly::constant(std::size_t ngens, Coef p, Coef c) {
  NCPoly r(ngens, p);
  r.add_term(Monomial(ngens), c);
  return r;
}

NCPoly NCPoly::monomial(const Monomial& m, Coef c, Coef p) {
  NCPoly r(m.size(), p);
  r.add_term(m, c);
  return r;
}

Coef NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coef{0} : it->second;
}

void NCPoly::add_term(const Monomial& m, Coef c) {
  c = static_cast<Coef>(c % p_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = static_cast<Coef>((it->second + c) % p_);
  if (it->second == 0) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  const PrimeField f(p_);
  for (const auto& [m, c] : o.terms_) add_term(m, f.neg(c));
  return *this;
}

void NCPoly::add_scaled(const NCPoly& o, Coef c) {
  const PrimeField f(p_);
  c = static_cast<Coef>(c % p_);
  if (c == 0) return;
  for (const auto& [m, v] : o.terms_) add_term(m, f.mul(v, c));
}

NCPoly NCPoly::scaled(Coef c) const {
  NCPoly r(ngens_, p_);
  r.add_scaled(*this, c);
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly NCPoly::operator-() const { return scaled(PrimeField(p_).neg(1)); }

int NCPoly::degree() const {
  int d = kNegInfDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int NCPoly::weighted_degree(std::span<const int> weights) const {
  int d = kNegInfDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(weights));
  return d;
}

NCPoly NCPoly::homogeneous_part(int d) const {
  NCPoly r(ngens_, p_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == d) r.terms_.emplace(m, c);
  return r;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const NCPoly& x, std::span<const std::string> names) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<Monomial, Coef>> terms(x.terms().begin(), x.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.total_degree();
    const int db = b.first.total_degree();
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    const std::string mono = to_string(m, names);
    if (m.is_one()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace nbe
