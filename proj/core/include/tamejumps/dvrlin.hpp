#pragma once

// Valued vector spaces over a discretely valued field and lattice linear algebra
// over the local ring Z_(p).

#include "tamejumps/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tamejumps {

/// A space with an orthogonal basis w_i of values lambda(w_i) in (1/e) Z.
struct ValuedSpace {
  std::vector<std::string> labels;
  std::vector<Rat> values;
  std::int64_t granularity = 1;

  /// Validates sizes, e >= 1 and e * value in Z.
  static ValuedSpace make(std::vector<std::string> labels, std::vector<Rat> values, std::int64_t granularity);

  std::size_t dim() const { return values.size(); }
  /// min_i (val_p(a_i) + lambda(w_i)); infinity for the zero vector.
  ExtRat valuation(const std::vector<Rat>& coeffs, std::uint64_t p) const;
};

/// Matrix with entries of nonnegative p-adic valuation.
class LocalMatrix {
 public:
  LocalMatrix(std::uint32_t p, std::vector<std::vector<Rat>> rows);
  static LocalMatrix identity(std::uint32_t p, std::size_t n);
  static LocalMatrix diagonal(std::uint32_t p, const std::vector<Rat>& entries);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return m_.size(); }
  std::size_t cols() const { return m_.empty() ? 0 : m_.front().size(); }
  const Rat& at(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const std::vector<std::vector<Rat>>& data() const { return m_; }

  LocalMatrix transpose() const;
  friend LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b);

 private:
  std::uint32_t p_;
  std::vector<std::vector<Rat>> m_;
};

/// Valuations c_1 <= ... <= c_g of the elementary divisors.
using ElemDivisors = std::vector<std::int64_t>;

/// Basis pi'^i w_j (0 <= i < d) with values i + d * lambda(w_j), ordered by j then i.
/// Throws kNotCoprime unless gcd(d, e) = 1.
ValuedSpace prolong(const ValuedSpace& w, std::int64_t d);

/// Whether the classes i + (d/e) Z, 0 <= i < d, are pairwise disjoint (by enumeration).
bool class_disjointness(std::int64_t d, std::int64_t e);

/// floor(-d * value), nondecreasing; values must lie in (-1, 0] (kOutOfRange).
std::vector<std::int64_t> lattice_exponents(const std::vector<Rat>& values, std::int64_t d);

/// Smith form over Z_(p), pivoting on the first entry of least valuation in row-major
/// order. Throws kSingularMatrix for singular or non-square input.
ElemDivisors snf_local(const LocalMatrix& m);

/// c_i / d.
std::vector<Rat> relative_jumps_from_matrix(const LocalMatrix& m, std::int64_t d);

}  // namespace tamejumps
