#include "nbe/cli/element.hpp"

#include <cctype>
#include <string>

#include "nbe/error.hpp"

namespace nbe::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, PbwRing& ring) : s_(text), ring_(ring), P_(ring.presentation()) {}

  NCPoly parse() {
    NCPoly x = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("element \"" + std::string(s_) + "\", column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  NCPoly sum() {
    NCPoly acc = P_.zero();
    bool negate = eat('-');
    if (!negate) eat('+');
    for (;;) {
      NCPoly t = product();
      acc = negate ? acc - t : acc + t;
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else return acc;
    }
  }

  NCPoly product() {
    NCPoly acc = power();
    while (eat('*')) acc = ring_.multiply(acc, power());
    return acc;
  }

  NCPoly power() {
    skip();
    const std::size_t start = pos_;
    std::optional<std::size_t> gen;
    NCPoly base = atom(gen);
    if (!eat('^')) return base;
    const bool neg = eat('-');
    const long long e = integer();
    if (e > 4096) fail("exponent too large");
    if (neg) {
      if (!gen || P_.invertible() != gen) {
        pos_ = start;
        fail("negative powers need the invertible generator");
      }
      return P_.generator(*gen, -static_cast<int>(e));
    }
    if (gen) return P_.generator(*gen, static_cast<int>(e));
    return ring_.power(base, static_cast<unsigned>(e));
  }

  NCPoly atom(std::optional<std::size_t>& gen) {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      NCPoly x = sum();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return P_.constant(static_cast<Coef>(integer() % P_.p()));
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    const std::string_view name = s_.substr(start, pos_ - start);
    gen = P_.index_of(name);
    if (!gen) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    return P_.generator(*gen);
  }

  std::string_view s_;
  PbwRing& ring_;
  const AlgebraPresentation& P_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_element(std::string_view text, PbwRing& ring) { return Parser(text, ring).parse(); }

}  // namespace nbe::cli
