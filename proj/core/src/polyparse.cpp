#include "tamejumps/polyparse.hpp"

#include "tamejumps/error.hpp"

#include <cctype>
#include <cstdlib>

namespace tamejumps {

namespace {

constexpr std::int64_t kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  BivariatePoly equation() {
    BivariatePoly lhs = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      BivariatePoly rhs = expr();
      lhs = lhs - rhs;
    }
    skip_ws();
    if (pos_ != src_.size()) unexpected();
    if (lhs.is_zero()) throw Error(Errc::kEmptyPolynomial, "all terms cancel");
    return lhs;
  }

  std::map<LatticePoint, Rat> form() {
    std::map<LatticePoint, Rat> out;
    bool first = true;
    for (;;) {
      skip_ws();
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      skip_ws();
      Rat coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(') {
        coeff = peek() == '(' ? paren_rational() : rational();
        have_coeff = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
        }
      }
      if (peek() == 'w') {
        ++pos_;
        expect('(');
        const std::int64_t i = integer_literal(true);
        expect(',');
        const std::int64_t j = integer_literal(true);
        expect(')');
        out[{i, j}] += sign * coeff;
      } else if (have_coeff && coeff == 0) {
        // "0" denotes the zero form
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        throw ParseError(Errc::kUnknownVariable, pos_, std::string("unknown basis label '") + peek() + "'");
      } else {
        unexpected();
      }
    }
    skip_ws();
    if (pos_ != src_.size()) unexpected();
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void unexpected() const {
    if (pos_ >= src_.size()) throw ParseError(Errc::kParseError, pos_, "unexpected end of input");
    throw ParseError(Errc::kParseError, pos_, std::string("unexpected '") + src_[pos_] + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) unexpected();
    ++pos_;
  }

  bool starts_base() const {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  BivariatePoly expr() {
    BivariatePoly acc = term(true);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BivariatePoly t = term(false);
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  BivariatePoly term(bool allow_sign) {
    skip_ws();
    bool negate = false;
    if (allow_sign) {
      while (peek() == '+' || peek() == '-') {
        negate ^= peek() == '-';
        ++pos_;
        skip_ws();
      }
    }
    BivariatePoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_base()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  BivariatePoly factor() {
    skip_ws();
    const std::size_t start = pos_;
    BivariatePoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t exp_pos = pos_;
    const std::int64_t e = integer_literal(true);
    if (e > kMaxExponent || e < -kMaxExponent) throw ParseError(Errc::kParseError, exp_pos, "exponent too large");
    return power(b, e, start);
  }

  BivariatePoly power(const BivariatePoly& b, std::int64_t e, std::size_t at) const {
    if (b.size() == 1) {
      const auto& [mono, c] = *b.terms().begin();
      return BivariatePoly::monomial(pow_rat(c, e), mono.i * e, mono.j * e);
    }
    if (b.is_zero()) {
      if (e <= 0) throw ParseError(Errc::kParseError, at, "nonpositive power of zero");
      return b;
    }
    if (e < 0) throw ParseError(Errc::kParseError, at, "negative power of a non-monomial");
    BivariatePoly acc = BivariatePoly::constant(1);
    for (std::int64_t k = 0; k < e; ++k) acc = acc * b;
    return acc;
  }

  BivariatePoly base() {
    skip_ws();
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return BivariatePoly::monomial(1, 1, 0);
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePoly::monomial(1, 0, 1);
    }
    if (c == '(') {
      ++pos_;
      BivariatePoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Rat q = rational();
      BivariatePoly out;
      return q == 0 ? out : BivariatePoly::constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(Errc::kUnknownVariable, pos_, std::string("unknown variable '") + c + "'");
    }
    unexpected();
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) unexpected();
    return std::string(src_.substr(start, pos_ - start));
  }

  Rat rational() {
    const BigInt num(digits());
    skip_ws();
    if (peek() != '/') return Rat(num);
    ++pos_;
    skip_ws();
    const std::size_t den_pos = pos_;
    const BigInt den(digits());
    if (den == 0) throw ParseError(Errc::kParseError, den_pos, "zero denominator");
    return Rat(num, den);
  }

  Rat paren_rational() {
    expect('(');
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    Rat q = rational();
    expect(')');
    return neg ? Rat(-q) : q;
  }

  std::int64_t integer_literal(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 12) throw ParseError(Errc::kParseError, at, "integer too large");
    const std::int64_t v = std::strtoll(d.c_str(), nullptr, 10);
    return neg ? -v : v;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(std::string_view source) { return Parser(source).equation(); }

std::map<LatticePoint, Rat> parse_form(std::string_view source) { return Parser(source).form(); }

}  // namespace tamejumps
