#pragma once

// Exact rationals, p-adic valuations and the extended value set Q u {inf}.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tamejumps {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A rational number or +infinity. Infinity absorbs addition and exceeds every rational.
class ExtRat {
 public:
  ExtRat() = default;  // infinity
  ExtRat(const Rat& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long value) : value_(Rat(value)) {}   // NOLINT(google-explicit-constructor)

  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rat& value() const;

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  std::optional<Rat> value_;
};

ExtRat min(const ExtRat& a, const ExtRat& b);

std::string to_string(const Rat& q);     // "n" or "n/d"
std::string to_string(const ExtRat& q);  // ... or "infinity"
std::ostream& operator<<(std::ostream& os, const ExtRat& q);

/// Parses "n" or "n/d"; throws Error(kParseError) on malformed text.
Rat parse_rat(const std::string& text);

bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t p);

/// p-adic valuation; infinity at zero.
ExtRat val_p(const Rat& a, std::uint64_t p);
/// Valuation of a nonzero rational as an integer.
std::int64_t val_p_int(const Rat& a, std::uint64_t p);
std::int64_t val_p_int(const BigInt& a, std::uint64_t p);

BigInt floor_rat(const Rat& q);
/// Decimal part q - floor(q), in [0, 1).
Rat frac_part(const Rat& q);
bool is_integer(const Rat& q);
Rat pow_rat(const Rat& base, std::int64_t exponent);

std::int64_t to_int64(const BigInt& n);

}  // namespace tamejumps
