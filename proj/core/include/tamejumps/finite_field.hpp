#pragma once

// Finite fields F_{p^d} with deterministic moduli, and univariate polynomials over them.

#include "tamejumps/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tamejumps {

/// F_{p^d} represented as F_p[a]/(m(a)) where m is the lexicographically smallest
/// irreducible monic polynomial of degree d. Elements are encoded as integers
/// sum c_i p^i from their coefficient vectors. Instances are interned and live
/// for the whole program, so raw pointers to them stay valid.
class FiniteField {
 public:
  using Code = std::uint64_t;

  static const FiniteField& get(std::uint32_t p, int degree);
  static const FiniteField& prime_field(std::uint32_t p) { return get(p, 1); }

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  /// Monic modulus, coefficients low to high (size degree + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Code from_int(std::int64_t n) const;
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, const BigInt& e) const;
  Code pow(Code a, std::uint64_t e) const;
  /// The class of the indeterminate a, a root of modulus().
  Code generator() const;

  std::vector<std::uint32_t> digits(Code a) const;
  Code encode(const std::vector<std::uint32_t>& digits) const;
  /// "0", "1", "a^2+a+1", ... ("a" names the generator).
  std::string format(Code a) const;
  /// "GF(p)" or "GF(p^d)".
  std::string name() const;

 private:
  FiniteField(std::uint32_t p, int degree, std::vector<std::uint32_t> modulus);
  Code slow_mul(Code a, Code b) const;
  void build_tables();

  std::uint32_t p_;
  int degree_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // empty unless order_ is small
  std::vector<std::uint32_t> log_;
};

class FFElem {
 public:
  using Code = FiniteField::Code;

  FFElem(const FiniteField& field, Code code) : field_(&field), code_(code) {}

  static FFElem from_int(const FiniteField& field, std::int64_t n) {
    return FFElem(field, field.from_int(n));
  }

  const FiniteField& field() const { return *field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FFElem inverse() const;
  FFElem pow(std::uint64_t e) const { return FFElem(*field_, field_->pow(code_, e)); }

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  FFElem operator-() const { return FFElem(*field_, field_->neg(code_)); }
  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

  std::string to_string() const { return field_->format(code_); }

 private:
  const FiniteField* field_;
  Code code_;
};

/// Image of a in F_p; requires val_p(a) >= 0.
FFElem residue(const Rat& a, std::uint32_t p);

/// Lexicographically smallest irreducible monic polynomial of degree d over F_p
/// (coefficients low to high; ordering is by the base-p number c_0 + c_1 p + ...).
std::vector<std::uint32_t> ff_extend(std::uint32_t p, int degree);

/// Image of x under the embedding F_{p^a} -> F_{p^b} (a | b) that sends the
/// generator to the smallest root of its modulus in the target.
FFElem embed(const FFElem& x, const FiniteField& target);

/// Dense univariate polynomial over a finite field; leading coefficient nonzero.
class FFPoly {
 public:
  using Code = FiniteField::Code;

  explicit FFPoly(const FiniteField& field) : field_(&field) {}
  FFPoly(const FiniteField& field, std::vector<Code> coeffs);

  static FFPoly constant(const FiniteField& field, Code c);
  static FFPoly monomial(const FiniteField& field, Code c, int degree);
  /// Coefficients given as integers, reduced mod p.
  static FFPoly from_ints(const FiniteField& field, const std::vector<std::int64_t>& coeffs);

  const FiniteField& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Code coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Code lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Code>& coeffs() const { return c_; }

  FFPoly monic() const;
  FFPoly derivative() const;
  FFElem eval(const FFElem& x) const;
  /// Number of leading zero coefficients at t^0 (the t-adic order); 0 for the zero polynomial.
  int low_order() const;
  FFPoly strip_low_powers() const;
  /// Same coefficients read in a larger field of the same characteristic (prime-field coefficients only).
  FFPoly lifted(const FiniteField& target) const;

  friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  FFPoly scaled(Code c) const;
  friend bool operator==(const FFPoly& a, const FFPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FFPoly, FFPoly> divmod(const FFPoly& divisor) const;
  FFPoly operator%(const FFPoly& m) const { return divmod(m).second; }
  FFPoly operator/(const FFPoly& m) const { return divmod(m).first; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  const FiniteField* field_;
  std::vector<Code> c_;
};

struct FFFactor {
  FFPoly factor;
  int multiplicity;
};

/// Monic gcd; gcd(0, 0) = 0.
FFPoly ff_gcd(const FFPoly& a, const FFPoly& b);
FFPoly powmod(const FFPoly& base, const BigInt& e, const FFPoly& m);
/// Monic squarefree, pairwise coprime parts g_i with a = lc * prod g_i^i.
std::vector<FFFactor> squarefree_decomposition(const FFPoly& a);
/// Distinct-degree split of a squarefree monic polynomial: (product of degree-k factors, k).
std::vector<FFFactor> distinct_degree_factor(const FFPoly& a);
/// Splits a squarefree monic product of degree-k irreducibles.
std::vector<FFPoly> equal_degree_factor(const FFPoly& a, int k);
/// Monic irreducible factors with multiplicity, sorted by degree then coefficients.
std::vector<FFFactor> ff_factor(const FFPoly& a);
bool is_irreducible(const FFPoly& a);
bool is_squarefree(const FFPoly& a);
/// Distinct roots in the coefficient field, ascending by code.
std::vector<FFElem> roots(const FFPoly& a);

}  // namespace tamejumps
