#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nbe/linalg/prime_field.hpp"
#include "nbe/ncalg/monomial.hpp"

namespace nbe {

/// Finite F_p-combination of PBW monomials. Zero coefficients are never
/// stored; the monomials are normal words by construction.
class NCPoly {
 public:
  using TermMap = std::map<Monomial, Coef>;

  NCPoly() = default;
  NCPoly(std::size_t ngens, Coef p) : ngens_(ngens), p_(p) {}

  static NCPoly constant(std::size_t ngens, Coef p, Coef c);
  static NCPoly monomial(const Monomial& m, Coef c, Coef p);

  std::size_t ngens() const { return ngens_; }
  Coef p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coef coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Coef c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  void add_scaled(const NCPoly& o, Coef c);
  NCPoly scaled(Coef c) const;
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;

  /// Total degree; kNegInfDegree for zero.
  int degree() const;
  int weighted_degree(std::span<const int> weights) const;
  /// Terms of total degree exactly d.
  NCPoly homogeneous_part(int d) const;

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

 private:
  std::size_t ngens_ = 0;
  Coef p_ = 2;
  TermMap terms_;
};

std::string to_string(const Monomial& m, std::span<const std::string> names);
/// Deterministic rendering: higher total degree first.
std::string to_string(const NCPoly& x, std::span<const std::string> names);

/// One factor g^power of a word; a negative power is only meaningful for the
/// invertible generator.
struct Letter {
  std::size_t gen;
  int power;
};

using Word = std::vector<Letter>;

struct FreeTerm {
  Coef coef;
  Word word;
};

/// Element of the free algebra: a combination of arbitrary words, not yet
/// reduced against any relations.
struct FreeElement {
  std::size_t ngens = 0;
  Coef p = 2;
  std::vector<FreeTerm> terms;

  static FreeElement word(std::size_t ngens, Coef p, Word w, Coef c = 1) {
    FreeElement e{ngens, p, {}};
    e.terms.push_back({c, std::move(w)});
    return e;
  }
};

}  // namespace nbe
