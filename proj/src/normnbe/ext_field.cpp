#include "nbe/normnbe/ext_field.hpp"

namespace nbe {

namespace {

using Digits = std::vector<unsigned>;

Digits to_digits(std::uint32_t v, Coef p, int k) {
  Digits d(static_cast<std::size_t>(k));
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, Coef p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// True when x has multiplicative order exactly q - 1 modulo the monic
// polynomial x^k + f, with f given by its low digits.
bool is_primitive(const Digits& f, Coef p, int k, std::uint32_t q) {
  if (f[0] == 0) return false;
  Digits cur(static_cast<std::size_t>(k), 0);
  cur[0] = 1;
  for (std::uint32_t i = 1; i < q; ++i) {
    // cur *= x
    const unsigned top = cur[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = static_cast<std::size_t>(k - 1); j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) cur[j] = (cur[j] + (p - f[j]) * top) % p;
    bool is_one = cur[0] == 1;
    for (std::size_t j = 1; j < static_cast<std::size_t>(k) && is_one; ++j) is_one = cur[j] == 0;
    if (is_one) return i == q - 1;
  }
  return false;
}

}  // namespace

ExtField::ExtField(Coef p, int k) : p_(PrimeField::checked(p).p), k_(k) {
  if (k < 1) throw Unsupported("extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxOrder) throw TooLarge("extension field larger than 2^20");
  q_ = static_cast<std::uint32_t>(q);

  Digits f;
  bool found = false;
  for (std::uint32_t cand = 0; cand < q_ && !found; ++cand) {
    f = to_digits(cand, p_, k_);
    found = is_primitive(f, p_, k_, q_);
  }
  if (!found) throw InternalInconsistency("no primitive polynomial found");

  log_.assign(q_, 0);
  exp_.assign(q_, 0);
  Digits cur(static_cast<std::size_t>(k_), 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const std::uint32_t v = from_digits(cur, p_);
    exp_[i] = v;
    log_[v] = i;
    const unsigned top = cur[static_cast<std::size_t>(k_ - 1)];
    for (std::size_t j = static_cast<std::size_t>(k_ - 1); j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(k_); ++j) cur[j] = (cur[j] + (p_ - f[j]) * top) % p_;
  }
  exp_[q_ - 1] = 1;

  // Zech logarithms: 1 + g^l = g^{zech[l]}, with kNoLog when it vanishes.
  if (p_ != 2) {
    zech_.assign(q_ - 1, kNoLog);
    for (std::uint32_t l = 0; l + 1 < q_; ++l) {
      Digits d = to_digits(exp_[l], p_, k_);
      d[0] = (d[0] + 1) % p_;
      const std::uint32_t v = from_digits(d, p_);
      if (v != 0) zech_[l] = log_[v];
    }
  }
}

ExtField ExtField::with_order_at_least(Coef p, std::uint64_t min_order) {
  int k = 1;
  std::uint64_t q = p;
  while (q < min_order) {
    q *= p;
    ++k;
  }
  return ExtField(p, k);
}

ExtField::Elem ExtField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a];
  std::uint32_t d = log_[b] + (q_ - 1) - la;
  if (d >= q_ - 1) d -= q_ - 1;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  std::uint32_t s = la + z;
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

ExtField::Elem ExtField::neg(Elem a) const {
  if (p_ == 2) return a;
  return mul(a, p_ - 1);
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a == 0) throw InternalInconsistency("inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

ExtField::Elem ExtField::frobenius(Elem a, int j) const {
  std::uint64_t e = 1;
  for (int i = 0; i < ((j % k_) + k_) % k_; ++i) e *= p_;
  return pow(a, e);
}

}  // namespace nbe
