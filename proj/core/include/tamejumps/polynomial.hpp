#pragma once

#include "tamejumps/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tamejumps {

/// Integer lattice point / exponent pair (i, j) of x^i y^j.
struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(const LatticePoint& p);  // "(i,j)"

/// Laurent polynomial sum a_ij x^i y^j with exact rational coefficients.
/// Only nonzero coefficients are stored.
class BivariatePoly {
 public:
  using TermMap = std::map<LatticePoint, Rat>;

  BivariatePoly() = default;
  explicit BivariatePoly(TermMap terms);

  static BivariatePoly constant(const Rat& c);
  static BivariatePoly monomial(const Rat& c, std::int64_t i, std::int64_t j);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const LatticePoint& p) const;
  std::vector<LatticePoint> support() const;

  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// x * df/dx and y * df/dy.
  BivariatePoly x_dx() const;
  BivariatePoly y_dy() const;

  /// Canonical text, terms ordered by descending (j, i); re-parses to the same polynomial.
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace tamejumps
