#include "tamejumps/rational.hpp"

#include "tamejumps/error.hpp"

#include <cctype>

namespace tamejumps {

const Rat& ExtRat::value() const {
  if (!value_) throw Error(Errc::kOutOfRange, "infinite value has no rational part");
  return *value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtRat::infinity();
  return ExtRat(*a.value_ + *b.value_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*a.value_ > *b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

std::string to_string(const Rat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const ExtRat& q) {
  return q.is_infinite() ? std::string("infinity") : to_string(q.value());
}

std::ostream& operator<<(std::ostream& os, const ExtRat& q) { return os << to_string(q); }

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw Error(Errc::kParseError, "malformed rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw Error(Errc::kParseError, "malformed rational '" + text + "'");
      }
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(Errc::kParseError, "nonpositive denominator in '" + text + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::kInvalidPrime, std::to_string(p) + " is not prime");
}

std::int64_t val_p_int(const BigInt& a, std::uint64_t p) {
  if (a == 0) throw Error(Errc::kOutOfRange, "valuation of zero is infinite");
  BigInt n = abs(a);
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t val_p_int(const Rat& a, std::uint64_t p) {
  return val_p_int(BigInt(boost::multiprecision::numerator(a)), p) -
         val_p_int(BigInt(boost::multiprecision::denominator(a)), p);
}

ExtRat val_p(const Rat& a, std::uint64_t p) {
  require_prime(p);
  if (a == 0) return ExtRat::infinity();
  return ExtRat(Rat(val_p_int(a, p)));
}

BigInt floor_rat(const Rat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

Rat pow_rat(const Rat& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(Errc::kOutOfRange, "negative power of zero");
    return pow_rat(Rat(1) / base, -exponent);
  }
  Rat result = 1;
  Rat b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

std::int64_t to_int64(const BigInt& n) {
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) {
    throw Error(Errc::kOutOfRange, "integer " + n.str() + " exceeds 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace tamejumps
