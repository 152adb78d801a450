#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbe/linalg/prime_field.hpp"
#include "nbe/ncalg/monomial.hpp"

namespace nbe {

/// Which coordinates a CommPoly is written in: x_i = gamma_i^p on X, or the
/// p-th roots t_i with t_i^p = x_i on the inverse Frobenius pull-back.
enum class VarFamily { X, T };

/// Commutative polynomial over F_p in at most four variables.
///
/// Monomials are packed into a 64-bit key [total degree:16 | e0:12 | e1:12 |
/// e2:12 | e3:12] so that integer order is graded-lex order and key addition
/// is monomial multiplication. Terms are kept sorted by key, zero
/// coefficients are never stored.
class CommPoly {
 public:
  static constexpr std::size_t kMaxVars = 4;
  static constexpr int kMaxExponent = 4095;
  using Key = std::uint64_t;
  using Exponents = std::array<int, kMaxVars>;
  using Term = std::pair<Key, Coef>;

  CommPoly() = default;
  CommPoly(std::size_t nvars, Coef p, VarFamily family = VarFamily::X);

  static CommPoly constant(std::size_t nvars, Coef p, Coef c, VarFamily family = VarFamily::X);
  static CommPoly variable(std::size_t nvars, Coef p, std::size_t i, VarFamily family = VarFamily::X);
  static CommPoly monomial(std::size_t nvars, Coef p, const Exponents& e, Coef c,
                           VarFamily family = VarFamily::X);

  static Key pack(const Exponents& e);
  static Exponents unpack(Key k);
  static int key_degree(Key k) { return static_cast<int>(k >> 48); }

  std::size_t nvars() const { return nvars_; }
  Coef p() const { return p_; }
  VarFamily family() const { return family_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coef coefficient(const Exponents& e) const;

  /// Total degree; kNegInfDegree for zero.
  int degree() const { return terms_.empty() ? kNegInfDegree : key_degree(terms_.back().first); }
  /// Homogeneous component of top total degree.
  CommPoly leading_form() const;
  CommPoly homogeneous_part(int d) const;

  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly scaled(Coef c) const;
  CommPoly pow(unsigned e) const;
  /// Exact quotient; throws InternalInconsistency when o does not divide.
  CommPoly divide_exact(const CommPoly& o) const;

  /// The unique g with g^q = *this when every exponent is divisible by q
  /// (q a power of p; coefficients are fixed by Frobenius on F_p).
  std::optional<CommPoly> frobenius_root(int q) const;
  /// x^a -> t^{p a}: reads a central polynomial in the t-coordinates.
  CommPoly lift_to_t() const;

  CommPoly with_family(VarFamily f) const {
    CommPoly r = *this;
    r.family_ = f;
    return r;
  }

  /// Evaluation in any field type providing add/mul/pow/from_prime.
  template <class Field>
  typename Field::Elem evaluate(const Field& F, std::span<const typename Field::Elem> point) const {
    typename Field::Elem acc = F.zero();
    for (const auto& [k, c] : terms_) {
      const Exponents e = unpack(k);
      typename Field::Elem v = F.from_prime(c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] != 0) v = F.mul(v, F.pow(point[i], static_cast<unsigned>(e[i])));
      }
      acc = F.add(acc, v);
    }
    return acc;
  }

  bool operator==(const CommPoly& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && family_ == o.family_ && terms_ == o.terms_;
  }

  /// Builds from unsorted, possibly repeated terms.
  static CommPoly from_terms(std::size_t nvars, Coef p, VarFamily family, std::vector<Term> terms);

 private:
  std::size_t nvars_ = 0;
  Coef p_ = 2;
  VarFamily family_ = VarFamily::X;
  std::vector<Term> terms_;
};

/// Renders with variables x1..x4 or t1..t4, highest degree first.
std::string to_string(const CommPoly& f);

}  // namespace nbe
