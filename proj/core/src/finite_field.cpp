#include "tamejumps/finite_field.hpp"

#include "tamejumps/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace tamejumps {

namespace {

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint64_t kTableLimit = 1U << 16;

}  // namespace

// ---------------------------------------------------------------------------
// FiniteField

const FiniteField& FiniteField::get(std::uint32_t p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FiniteField>> registry;
  require_prime(p);
  if (degree < 1) throw Error(Errc::kInvalidDegree, "field degree must be positive");
  if (static_cast<double>(degree) * std::log2(static_cast<double>(p)) > 62.0) {
    throw Error(Errc::kOutOfRange, "field too large to encode");
  }
  const auto key = std::make_pair(p, degree);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
  }
  // Computing the modulus may itself need the prime field, so do it unlocked.
  std::vector<std::uint32_t> mod = degree == 1 ? std::vector<std::uint32_t>{0, 1} : ff_extend(p, degree);
  std::unique_ptr<FiniteField> field(new FiniteField(p, degree, std::move(mod)));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(key, std::move(field));
  return *it->second;
}

FiniteField::FiniteField(std::uint32_t p, int degree, std::vector<std::uint32_t> modulus)
    : p_(p), degree_(degree), order_(ipow(p, degree)), modulus_(std::move(modulus)) {
  if (order_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t n = order_ - 1;
  const auto factors = prime_factors(n);
  Code primitive = 1;
  for (Code g = 1; g < order_; ++g) {
    bool ok = true;
    for (auto r : factors) {
      Code acc = 1;
      Code b = g;
      std::uint64_t e = n / r;
      while (e) {
        if (e & 1U) acc = slow_mul(acc, b);
        b = slow_mul(b, b);
        e >>= 1U;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive = g;
      break;
    }
  }
  exp_.assign(n, 0);
  log_.assign(order_, 0);
  Code x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, primitive);
  }
}

FiniteField::Code FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::vector<std::uint32_t> FiniteField::digits(Code a) const {
  std::vector<std::uint32_t> d(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

FiniteField::Code FiniteField::encode(const std::vector<std::uint32_t>& digits) const {
  Code c = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) c = c * p_ + digits[i] % p_;
  return c;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (degree_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Code out = 0;
  Code scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (degree_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  Code out = 0;
  Code scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::slow_mul(Code a, Code b) const {
  if (degree_ == 1) return (a * b) % p_;
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (int k = 2 * degree_ - 2; k >= degree_; --k) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int i = 0; i < degree_; ++i) {
      prod[k - degree_ + i] = (prod[k - degree_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::vector<std::uint32_t> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(out);
}

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[(std::uint64_t{log_[a]} + log_[b]) % (order_ - 1)];
  return slow_mul(a, b);
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[(std::uint64_t{log_[a]} * (e % (order_ - 1))) % (order_ - 1)];
  Code r = 1;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

FiniteField::Code FiniteField::pow(Code a, const BigInt& e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const BigInt reduced = e % (order_ - 1);
  return pow(a, reduced.convert_to<std::uint64_t>());
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw Error(Errc::kOutOfRange, "inverse of zero in " + name());
  if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

FiniteField::Code FiniteField::generator() const { return degree_ == 1 ? from_int(-std::int64_t{modulus_[0]}) : p_; }

std::string FiniteField::format(Code a) const {
  if (degree_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto d = digits(a);
  std::string out;
  for (int i = degree_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += i == 1 ? std::string("a") : "a^" + std::to_string(i);
  }
  return out;
}

std::string FiniteField::name() const {
  return degree_ == 1 ? "GF(" + std::to_string(p_) + ")"
                      : "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
}

// ---------------------------------------------------------------------------
// FFElem

namespace {
void check_same(const FiniteField& a, const FiniteField& b) {
  if (&a != &b) throw Error(Errc::kFieldMismatch, a.name() + " vs " + b.name());
}
}  // namespace

FFElem FFElem::inverse() const { return FFElem(*field_, field_->inv(code_)); }

FFElem operator+(const FFElem& a, const FFElem& b) {
  check_same(*a.field_, *b.field_);
  return FFElem(*a.field_, a.field_->add(a.code_, b.code_));
}
FFElem operator-(const FFElem& a, const FFElem& b) {
  check_same(*a.field_, *b.field_);
  return FFElem(*a.field_, a.field_->sub(a.code_, b.code_));
}
FFElem operator*(const FFElem& a, const FFElem& b) {
  check_same(*a.field_, *b.field_);
  return FFElem(*a.field_, a.field_->mul(a.code_, b.code_));
}
FFElem operator/(const FFElem& a, const FFElem& b) {
  check_same(*a.field_, *b.field_);
  return FFElem(*a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_)));
}

FFElem residue(const Rat& a, std::uint32_t p) {
  require_prime(p);
  const auto& fp = FiniteField::prime_field(p);
  if (a == 0) return FFElem(fp, 0);
  if (val_p_int(a, p) < 0) throw Error(Errc::kNotIntegral, to_string(a) + " is not " + std::to_string(p) + "-integral");
  const BigInt num = boost::multiprecision::numerator(a);
  const BigInt den = boost::multiprecision::denominator(a);
  const BigInt pp(p);
  BigInt n = num % pp;
  if (n < 0) n += pp;
  const auto den_code = static_cast<FiniteField::Code>((den % pp).convert_to<std::uint64_t>());
  return FFElem(fp, fp.mul(n.convert_to<std::uint64_t>(), fp.inv(den_code)));
}

// ---------------------------------------------------------------------------
// FFPoly

FFPoly::FFPoly(const FiniteField& field, std::vector<Code> coeffs) : field_(&field), c_(std::move(coeffs)) {
  trim();
}

FFPoly FFPoly::constant(const FiniteField& field, Code c) { return FFPoly(field, {c}); }

FFPoly FFPoly::monomial(const FiniteField& field, Code c, int degree) {
  std::vector<Code> v(degree + 1, 0);
  v[degree] = c;
  return FFPoly(field, std::move(v));
}

FFPoly FFPoly::from_ints(const FiniteField& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Code> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return FFPoly(field, std::move(v));
}

void FFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

FFPoly FFPoly::scaled(Code c) const {
  std::vector<Code> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return FFPoly(*field_, std::move(v));
}

FFPoly FFPoly::derivative() const {
  if (c_.size() <= 1) return FFPoly(*field_);
  std::vector<Code> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  return FFPoly(*field_, std::move(v));
}

FFElem FFPoly::eval(const FFElem& x) const {
  check_same(*field_, x.field());
  Code acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x.code()), *it);
  return FFElem(*field_, acc);
}

int FFPoly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return is_zero() ? 0 : k;
}

FFPoly FFPoly::strip_low_powers() const {
  const int k = low_order();
  return FFPoly(*field_, std::vector<Code>(c_.begin() + k, c_.end()));
}

FFPoly FFPoly::lifted(const FiniteField& target) const {
  if (&target == field_) return *this;
  std::vector<Code> v;
  v.reserve(c_.size());
  for (auto c : c_) v.push_back(field_->degree() == 1 && target.characteristic() == field_->characteristic()
                                    ? c
                                    : embed(FFElem(*field_, c), target).code());
  return FFPoly(target, std::move(v));
}

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
  check_same(*a.field_, *b.field_);
  std::vector<FFPoly::Code> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FFPoly(*a.field_, std::move(v));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) {
  check_same(*a.field_, *b.field_);
  std::vector<FFPoly::Code> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FFPoly(*a.field_, std::move(v));
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  check_same(*a.field_, *b.field_);
  if (a.is_zero() || b.is_zero()) return FFPoly(*a.field_);
  const auto& f = *a.field_;
  std::vector<FFPoly::Code> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return FFPoly(f, std::move(v));
}

std::pair<FFPoly, FFPoly> FFPoly::divmod(const FFPoly& divisor) const {
  check_same(*field_, *divisor.field_);
  if (divisor.is_zero()) throw Error(Errc::kZeroPolynomial, "division by the zero polynomial");
  const auto& f = *field_;
  if (degree() < divisor.degree()) return {FFPoly(f), *this};
  std::vector<Code> rem = c_;
  std::vector<Code> quot(c_.size() - divisor.c_.size() + 1, 0);
  const Code inv_lead = f.inv(divisor.lead());
  const int dd = divisor.degree();
  for (int k = degree(); k >= dd; --k) {
    const Code c = rem[k];
    if (!c) continue;
    const Code q = f.mul(c, inv_lead);
    quot[k - dd] = q;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(q, divisor.c_[i]));
  }
  rem.resize(dd);
  return {FFPoly(f, std::move(quot)), FFPoly(f, std::move(rem))};
}

std::string FFPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Code c = c_[i];
    if (!c) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = field_->format(c);
    if (field_->degree() > 1 && coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c != 1) out += coeff + "*";
    out += i == 1 ? var : var + "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algorithms

FFPoly ff_gcd(const FFPoly& a, const FFPoly& b) {
  check_same(a.field(), b.field());
  FFPoly x = a;
  FFPoly y = b;
  while (!y.is_zero()) {
    FFPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FFPoly powmod(const FFPoly& base, const BigInt& e, const FFPoly& m) {
  FFPoly result = FFPoly::constant(base.field(), 1) % m;
  FFPoly b = base % m;
  BigInt k = e;
  while (k > 0) {
    if (bit_test(k, 0)) result = (result * b) % m;
    k >>= 1;
    if (k > 0) b = (b * b) % m;
  }
  return result;
}

namespace {

FFPoly x_poly(const FiniteField& f) { return FFPoly::monomial(f, 1, 1); }

// f(x) = g(x^p) with coefficients; returns the p-th root g^{1/p}.
FFPoly pth_root(const FFPoly& a) {
  const auto& f = a.field();
  const std::uint32_t p = f.characteristic();
  const std::uint64_t root_exp = f.order() / p;  // c -> c^(q/p) inverts Frobenius
  std::vector<FFPoly::Code> v(a.degree() / p + 1, 0);
  for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) v[i / p] = f.pow(a.coeff(i), root_exp);
  return FFPoly(f, std::move(v));
}

void sff_into(const FFPoly& a, int scale, std::map<int, FFPoly>& out) {
  const auto& f = a.field();
  const int p = static_cast<int>(f.characteristic());
  auto push = [&](const FFPoly& g, int mult) {
    if (g.degree() <= 0) return;
    auto it = out.find(mult);
    if (it == out.end()) {
      out.emplace(mult, g.monic());
    } else {
      it->second = (it->second * g).monic();
    }
  };
  const FFPoly one = FFPoly::constant(f, 1);
  const FFPoly d = a.derivative();
  if (d.is_zero()) {
    sff_into(pth_root(a), scale * p, out);
    return;
  }
  FFPoly c = ff_gcd(a, d);
  FFPoly w = a / c;
  int i = 1;
  while (!(w == one) && w.degree() > 0) {
    FFPoly y = ff_gcd(w, c);
    push(w / y, i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) sff_into(pth_root(c.monic()), scale * p, out);
}

BigInt field_order(const FiniteField& f) { return BigInt(f.order()); }

}  // namespace

std::vector<FFFactor> squarefree_decomposition(const FFPoly& a) {
  if (a.is_zero()) throw Error(Errc::kZeroPolynomial, "squarefree decomposition of zero");
  std::map<int, FFPoly> parts;
  sff_into(a.monic(), 1, parts);
  std::vector<FFFactor> out;
  for (auto& [m, g] : parts) out.push_back({g, m});
  return out;
}

std::vector<FFFactor> distinct_degree_factor(const FFPoly& a) {
  const auto& f = a.field();
  std::vector<FFFactor> out;
  FFPoly rest = a.monic();
  const FFPoly x = x_poly(f);
  FFPoly h = x % rest;
  const BigInt q = field_order(f);
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    h = powmod(h, q, rest);
    FFPoly g = ff_gcd(rest, h - x);
    if (g.degree() > 0) {
      out.push_back({g, k});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

std::vector<FFPoly> equal_degree_factor(const FFPoly& a, int k) {
  const auto& f = a.field();
  FFPoly g = a.monic();
  if (g.degree() <= k) return {g};
  const std::uint64_t q = f.order();
  const BigInt qk = pow(BigInt(q), static_cast<unsigned>(k));
  const bool char2 = f.characteristic() == 2;
  const BigInt half = (qk - 1) / 2;
  const int trace_terms = f.degree() * k;
  const FFPoly one = FFPoly::constant(f, 1);

  // Deterministic candidates: the polynomial whose base-q coefficient digits spell n.
  for (std::uint64_t n = q;; ++n) {
    std::vector<FFPoly::Code> coeffs;
    for (std::uint64_t m = n; m; m /= q) coeffs.push_back(m % q);
    FFPoly cand(f, std::move(coeffs));
    if (cand.degree() >= g.degree()) break;
    FFPoly b(f);
    if (char2) {
      FFPoly t = cand % g;
      b = t;
      for (int i = 1; i < trace_terms; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      b = powmod(cand, half, g) - one;
    }
    FFPoly d = ff_gcd(g, b);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      auto left = equal_degree_factor(d, k);
      auto right = equal_degree_factor(g / d, k);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw Error(Errc::kOutOfRange, "equal-degree splitting found no separating candidate");
}

std::vector<FFFactor> ff_factor(const FFPoly& a) {
  if (a.is_zero()) throw Error(Errc::kZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<FFFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(a)) {
    for (const auto& [block, k] : distinct_degree_factor(part)) {
      for (auto& g : equal_degree_factor(block, k)) out.push_back({g, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FFFactor& l, const FFFactor& r) {
    if (l.factor.degree() != r.factor.degree()) return l.factor.degree() < r.factor.degree();
    return l.factor.coeffs() < r.factor.coeffs();
  });
  return out;
}

bool is_squarefree(const FFPoly& a) {
  if (a.is_zero()) return false;
  if (a.degree() <= 0) return true;
  return ff_gcd(a, a.derivative()).degree() == 0;
}

bool is_irreducible(const FFPoly& a) {
  const int n = a.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto& f = a.field();
  const FFPoly m = a.monic();
  const FFPoly x = x_poly(f);
  const BigInt q = field_order(f);
  // x^(q^n) = x mod m, and gcd(x^(q^(n/r)) - x, m) = 1 for primes r | n.
  auto frob = [&](int times) {
    FFPoly h = x % m;
    for (int i = 0; i < times; ++i) h = powmod(h, q, m);
    return h;
  };
  if (!(frob(n) == x % m)) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    if (ff_gcd(frob(n / static_cast<int>(r)) - x, m).degree() != 0) return false;
  }
  return true;
}

std::vector<FFElem> roots(const FFPoly& a) {
  if (a.is_zero()) throw Error(Errc::kZeroPolynomial, "roots of the zero polynomial");
  const auto& f = a.field();
  std::vector<FFElem> out;
  if (a.degree() <= 0) return out;
  const FFPoly m = a.monic();
  const FFPoly x = x_poly(f);
  FFPoly split = ff_gcd(m, powmod(x, field_order(f), m) - x);
  if (split.degree() <= 0) return out;
  for (const auto& lin : equal_degree_factor(split, 1)) out.emplace_back(f, f.neg(lin.coeff(0)));
  std::sort(out.begin(), out.end(), [](const FFElem& l, const FFElem& r) { return l.code() < r.code(); });
  return out;
}

std::vector<std::uint32_t> ff_extend(std::uint32_t p, int degree) {
  require_prime(p);
  if (degree < 1) throw Error(Errc::kInvalidDegree, "extension degree must be positive");
  if (degree == 1) return {0, 1};
  const auto& fp = FiniteField::prime_field(p);
  const std::uint64_t count = ipow(p, degree);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<FFPoly::Code> coeffs(degree + 1, 0);
    std::uint64_t m = n;
    for (int i = 0; i < degree; ++i) {
      coeffs[i] = m % p;
      m /= p;
    }
    coeffs[degree] = 1;
    if (coeffs[0] == 0) continue;  // divisible by x
    FFPoly cand(fp, coeffs);
    if (is_irreducible(cand)) {
      std::vector<std::uint32_t> out(coeffs.begin(), coeffs.end());
      return out;
    }
  }
  throw Error(Errc::kOutOfRange, "no irreducible polynomial found");
}

FFElem embed(const FFElem& x, const FiniteField& target) {
  const auto& src = x.field();
  if (&src == &target) return x;
  if (src.characteristic() != target.characteristic() || target.degree() % src.degree() != 0) {
    throw Error(Errc::kFieldMismatch, "cannot embed " + src.name() + " into " + target.name());
  }
  if (src.degree() == 1) return FFElem(target, x.code());
  std::vector<FFPoly::Code> mod(src.modulus().begin(), src.modulus().end());
  const auto rts = roots(FFPoly(target, mod));
  const FFElem gen = rts.front();
  const auto digits = src.digits(x.code());
  FFElem acc(target, 0);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) acc = acc * gen + FFElem(target, digits[i]);
  return acc;
}

}  // namespace tamejumps
