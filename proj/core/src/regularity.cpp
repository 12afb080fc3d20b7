#include "tamejumps/regularity.hpp"

#include "tamejumps/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace tamejumps {

FFBiPoly::FFBiPoly(const FiniteField& field, const TermMap& terms) : field_(&field) {
  for (const auto& [p, c] : terms) add_term(p, c);
}

FFBiPoly::Code FFBiPoly::coeff(const LatticePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void FFBiPoly::add_term(const LatticePoint& p, Code c) {
  Code sum = field_->add(coeff(p), c);
  if (sum == 0) {
    terms_.erase(p);
  } else {
    terms_[p] = sum;
  }
}

FFBiPoly FFBiPoly::x_dx() const {
  FFBiPoly out(*field_);
  for (const auto& [p, c] : terms_) out.add_term(p, field_->mul(field_->from_int(p.i), c));
  return out;
}

FFBiPoly FFBiPoly::y_dy() const {
  FFBiPoly out(*field_);
  for (const auto& [p, c] : terms_) out.add_term(p, field_->mul(field_->from_int(p.j), c));
  return out;
}

namespace {

FFElem int_pow(const FFElem& x, std::int64_t e) {
  if (e >= 0) return x.pow(static_cast<std::uint64_t>(e));
  return x.inverse().pow(static_cast<std::uint64_t>(-e));
}

std::string monomial_text(std::int64_t i, std::int64_t j) {
  std::string out;
  auto put = [&out](const char* var, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  put("x", i);
  put("y", j);
  return out;
}

}  // namespace

FFElem FFBiPoly::eval(const FFElem& x, const FFElem& y) const {
  const FiniteField& k = x.field();
  if (&y.field() != &k) throw Error(Errc::kFieldMismatch, "coordinates in different fields");
  if (k.characteristic() != field_->characteristic() || field_->degree() != 1) {
    throw Error(Errc::kFieldMismatch, "evaluation needs prime-field coefficients of the same characteristic");
  }
  FFElem sum(k, 0);
  for (const auto& [p, c] : terms_) {
    sum = sum + FFElem(k, c) * int_pow(x, p.i) * int_pow(y, p.j);
  }
  return sum;
}

std::string FFBiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<LatticePoint, Code>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.j, a.first.i) > std::tie(b.first.j, b.first.i);
  });
  std::string out;
  for (const auto& [p, c] : ordered) {
    std::string mono = monomial_text(p.i, p.j);
    std::string coef = field_->format(c);
    bool compound = coef.find('+') != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (c == 1) {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::string to_string(const TorusPoint& w) {
  return "x = " + w.x.to_string() + ", y = " + w.y.to_string() + " in " + w.x.field().name();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

// ---------------------------------------------------------------------------
// Common zeros on the torus.

namespace {

using Code = FiniteField::Code;

// Dense polynomial in y whose coefficients are polynomials in x over F_p.
struct Bi {
  const FiniteField* k;
  std::vector<FFPoly> c;  // c[n] multiplies y^n; back() nonzero

  explicit Bi(const FiniteField& field) : k(&field) {}

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  bool constant() const { return c.size() == 1 && c[0].degree() == 0; }
  const FFPoly& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

FFPoly shift_down(const FFPoly& a, int n) {
  if (n == 0 || a.is_zero()) return a;
  std::vector<Code> cs(a.coeffs().begin() + n, a.coeffs().end());
  return FFPoly(a.field(), std::move(cs));
}

Bi from_sparse(const FFBiPoly& f) {
  Bi out(f.field());
  if (f.is_zero()) return out;
  std::int64_t mi = std::numeric_limits<std::int64_t>::max();
  std::int64_t mj = mi;
  for (const auto& [p, c] : f.terms()) {
    mi = std::min(mi, p.i);
    mj = std::min(mj, p.j);
  }
  std::vector<std::vector<Code>> rows;
  for (const auto& [p, c] : f.terms()) {
    auto j = static_cast<std::size_t>(p.j - mj);
    auto i = static_cast<std::size_t>(p.i - mi);
    if (rows.size() <= j) rows.resize(j + 1);
    if (rows[j].size() <= i) rows[j].resize(i + 1, 0);
    rows[j][i] = c;
  }
  for (auto& r : rows) out.c.emplace_back(f.field(), std::move(r));
  out.trim();
  return out;
}

// Removes every monomial factor x^a y^b.
Bi strip(Bi a) {
  if (a.zero()) return a;
  std::size_t lowy = 0;
  while (a.c[lowy].is_zero()) ++lowy;
  a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(lowy));
  int lowx = std::numeric_limits<int>::max();
  for (const auto& q : a.c) {
    if (!q.is_zero()) lowx = std::min(lowx, q.low_order());
  }
  for (auto& q : a.c) q = shift_down(q, lowx);
  return a;
}

Bi sub(const Bi& a, const Bi& b) {
  Bi out(*a.k);
  out.c.resize(std::max(a.c.size(), b.c.size()), FFPoly(*a.k));
  for (std::size_t n = 0; n < out.c.size(); ++n) {
    FFPoly x = n < a.c.size() ? a.c[n] : FFPoly(*a.k);
    FFPoly y = n < b.c.size() ? b.c[n] : FFPoly(*a.k);
    out.c[n] = x - y;
  }
  out.trim();
  return out;
}

// m * y^shift * a
Bi mul_shift(const Bi& a, const FFPoly& m, int shift) {
  Bi out(*a.k);
  out.c.assign(static_cast<std::size_t>(shift), FFPoly(*a.k));
  for (const auto& q : a.c) out.c.push_back(q * m);
  out.trim();
  return out;
}

FFPoly content(const Bi& a) {
  FFPoly g(*a.k);
  for (const auto& q : a.c) g = ff_gcd(g, q);
  return g;
}

Bi div_coeffs(const Bi& a, const FFPoly& d) {
  Bi out(*a.k);
  for (const auto& q : a.c) out.c.push_back(q / d);
  out.trim();
  return out;
}

Bi primitive(const Bi& a) { return a.zero() ? a : div_coeffs(a, content(a)); }

Bi prem(Bi r, const Bi& b) {
  while (!r.zero() && r.deg() >= b.deg()) {
    FFPoly lr = r.lead();
    int shift = r.deg() - b.deg();
    Bi scaled(*r.k);
    for (const auto& q : r.c) scaled.c.push_back(q * b.lead());
    r = sub(scaled, mul_shift(b, lr, shift));
  }
  return r;
}

Bi bigcd(const Bi& a, const Bi& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  FFPoly cg = ff_gcd(content(a), content(b));
  Bi u = primitive(a);
  Bi v = primitive(b);
  if (u.deg() < v.deg()) std::swap(u, v);
  while (!v.zero()) {
    Bi r = prem(u, v);
    u = v;
    v = primitive(r);
  }
  Bi g = mul_shift(u, cg, 0);
  Code inv = g.k->inv(g.lead().lead());
  for (auto& q : g.c) q = q.scaled(inv);
  return g;
}

// a / g, g known to divide a.
Bi exact_div(Bi r, const Bi& g) {
  Bi q(*r.k);
  while (!r.zero()) {
    int shift = r.deg() - g.deg();
    auto [cq, rem] = r.lead().divmod(g.lead());
    if (shift < 0 || !rem.is_zero()) throw Error(Errc::kIndeterminateSystem, "inexact bivariate division");
    if (q.c.size() <= static_cast<std::size_t>(shift)) q.c.resize(static_cast<std::size_t>(shift) + 1, FFPoly(*r.k));
    q.c[static_cast<std::size_t>(shift)] = cq;
    r = sub(r, mul_shift(g, cq, shift));
  }
  q.trim();
  return q;
}

// Determinant by fraction-free elimination.
FFPoly bareiss_det(std::vector<std::vector<FFPoly>> m, const FiniteField& k) {
  const std::size_t n = m.size();
  FFPoly prev = FFPoly::constant(k, 1);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return FFPoly(k);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      negate = !negate;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) / prev;
      }
      m[i][col] = FFPoly(k);
    }
    prev = m[col][col];
  }
  return negate ? FFPoly(k) - prev : prev;
}

FFPoly power(const FFPoly& a, int e) {
  FFPoly out = FFPoly::constant(a.field(), 1);
  for (int n = 0; n < e; ++n) out = out * a;
  return out;
}

FFPoly resultant_y(const Bi& a, const Bi& b) {
  const FiniteField& k = *a.k;
  const int m = a.deg();
  const int n = b.deg();
  if (m == 0 && n == 0) return FFPoly::constant(k, 1);
  if (m == 0) return power(a.c[0], n);
  if (n == 0) return power(b.c[0], m);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<FFPoly>> s(size, std::vector<FFPoly>(size, FFPoly(k)));
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t <= m; ++t) s[r][r + t] = a.c[static_cast<std::size_t>(m - t)];
  }
  for (int r = 0; r < m; ++r) {
    for (int t = 0; t <= n; ++t) s[n + r][r + t] = b.c[static_cast<std::size_t>(n - t)];
  }
  return bareiss_det(std::move(s), k);
}

FFPoly specialize(const Bi& a, const FFElem& x0) {
  const FiniteField& big = x0.field();
  std::vector<Code> cs;
  for (const auto& q : a.c) cs.push_back(q.lifted(big).eval(x0).code());
  return FFPoly(big, std::move(cs));
}

int min_factor_degree(const FFPoly& g) {
  int best = std::numeric_limits<int>::max();
  for (const auto& f : ff_factor(g)) best = std::min(best, f.factor.degree());
  return best;
}

const FiniteField& ext(const FiniteField& base, int d) {
  // order must stay representable in a code
  long double bits = static_cast<long double>(d) * std::log2(static_cast<long double>(base.characteristic()));
  if (bits > 62) throw Error(Errc::kIndeterminateSystem, "extension of degree " + std::to_string(d) + " is too large");
  return FiniteField::get(base.characteristic(), d);
}

using Found = std::optional<TorusPoint>;

Found better(Found a, Found b) {
  if (!a) return b;
  if (!b) return a;
  return b->degree < a->degree ? b : a;
}

// y-root of the specialized system over the field of x0 (all of whose members vanish at x0 when none survive)
std::optional<FFElem> y_root(const std::vector<Bi>& sys, const FFElem& x0) {
  const FiniteField& k = x0.field();
  FFPoly g(k);
  for (const auto& s : sys) g = ff_gcd(g, specialize(s, x0));
  if (g.is_zero()) return FFElem(k, 1);
  g = g.strip_low_powers();
  if (g.degree() < 1) return std::nullopt;
  auto rs = roots(g);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

Found curve_zero(const Bi& h) {
  const FiniteField& fp = *h.k;
  if (h.deg() == 0) {
    FFPoly q = h.c[0].strip_low_powers();
    for (const auto& f : ff_factor(q)) {
      const FiniteField& k = ext(fp, f.factor.degree());
      FFElem x0 = roots(f.factor.lifted(k)).front();
      return TorusPoint{x0, FFElem(k, 1), k.degree()};
    }
  }
  bool x_free = std::all_of(h.c.begin(), h.c.end(), [](const FFPoly& q) { return q.degree() <= 0; });
  if (x_free) {
    std::vector<Code> cs;
    for (const auto& q : h.c) cs.push_back(q.coeff(0));
    FFPoly q = FFPoly(fp, cs).strip_low_powers();
    for (const auto& f : ff_factor(q)) {
      const FiniteField& k = ext(fp, f.factor.degree());
      FFElem y0 = roots(f.factor.lifted(k)).front();
      return TorusPoint{FFElem(k, 1), y0, k.degree()};
    }
  }
  const std::vector<Bi> sys{h};
  int bound = std::numeric_limits<int>::max();
  std::optional<FFElem> bound_x;
  for (int d = 1; d < bound; ++d) {
    const FiniteField& k = ext(fp, d);
    for (Code code = 1; code < k.order(); ++code) {
      FFElem x0(k, code);
      FFPoly g = specialize(h, x0);
      if (g.is_zero()) return TorusPoint{x0, FFElem(k, 1), d};
      g = g.strip_low_powers();
      if (g.degree() < 1) continue;
      auto rs = roots(g);
      if (!rs.empty()) return TorusPoint{x0, rs.front(), d};
      if (2 * d < bound) {
        int e = min_factor_degree(g);
        if (d * e < bound) {
          bound = d * e;
          bound_x = x0;
        }
      }
    }
  }
  const FiniteField& k = ext(fp, bound);
  FFElem x0 = embed(*bound_x, k);
  return TorusPoint{x0, *y_root(sys, x0), bound};
}

Found finite_zeros(const Bi& a, const Bi& b, const std::vector<Bi>& rest, int cap) {
  if (a.constant() || b.constant()) return std::nullopt;
  FFPoly r = resultant_y(a, b);
  if (r.is_zero()) throw Error(Errc::kIndeterminateSystem, "vanishing resultant of coprime polynomials");
  r = r.strip_low_powers();
  if (r.degree() < 1) return std::nullopt;
  std::vector<Bi> sys{a, b};
  sys.insert(sys.end(), rest.begin(), rest.end());
  Found best;
  for (const auto& f : ff_factor(r)) {
    const int d = f.factor.degree();
    if (d >= cap || (best && d >= best->degree)) continue;
    const FiniteField& k = ext(*a.k, d);
    FFElem x0 = roots(f.factor.lifted(k)).front();
    FFPoly g(k);
    for (const auto& s : sys) g = ff_gcd(g, specialize(s, x0));
    int e = 1;
    if (!g.is_zero()) {
      g = g.strip_low_powers();
      if (g.degree() < 1) continue;
      e = min_factor_degree(g);
    }
    if (best && d * e >= best->degree) continue;
    const FiniteField& big = ext(*a.k, d * e);
    FFElem xb = embed(x0, big);
    best = TorusPoint{xb, *y_root(sys, xb), d * e};
  }
  return best;
}

Found solve(const std::vector<Bi>& sys) {
  for (const auto& s : sys) {
    if (s.constant()) return std::nullopt;
  }
  if (sys.size() == 1) return curve_zero(sys[0]);
  const Bi& a = sys[0];
  const Bi& b = sys[1];
  std::vector<Bi> rest(sys.begin() + 2, sys.end());
  Bi g = strip(bigcd(a, b));
  Found best;
  if (!g.constant()) {
    std::vector<Bi> sub_sys{g};
    sub_sys.insert(sub_sys.end(), rest.begin(), rest.end());
    best = solve(sub_sys);
  }
  int cap = best ? best->degree : std::numeric_limits<int>::max();
  return better(best, finite_zeros(strip(exact_div(a, g)), strip(exact_div(b, g)), rest, cap));
}

}  // namespace

TorusZeroResult has_common_torus_zero(const std::vector<FFBiPoly>& polys) {
  if (polys.empty()) throw Error(Errc::kIndeterminateSystem, "empty system");
  std::vector<Bi> sys;
  for (const auto& f : polys) {
    if (f.field().degree() != 1 || f.field().characteristic() != polys.front().field().characteristic()) {
      throw Error(Errc::kFieldMismatch, "system must be over a single prime field");
    }
    if (!f.is_zero()) sys.push_back(strip(from_sparse(f)));
  }
  if (sys.empty()) throw Error(Errc::kIndeterminateSystem, "all polynomials are zero");
  TorusZeroResult out;
  out.witness = solve(sys);
  out.found = out.witness.has_value();
  return out;
}

// ---------------------------------------------------------------------------
// Residue polynomials.

namespace {

std::optional<Code> residue_coeff(const BivariatePoly& f, const SubdividedPolygon& sd, const LatticePoint& p,
                                  const Rat& v) {
  Rat a = f.coeff(p);
  if (a == 0 || !is_integer(v)) return std::nullopt;
  auto lift = sd.lift.find(p);
  if (lift == sd.lift.end() || lift->second != v) return std::nullopt;
  std::int64_t val = val_p_int(a, sd.prime);
  return residue(a * pow_rat(Rat(sd.prime), -val), sd.prime).code();
}

std::vector<LatticePoint> edge_points(const VFace& edge) {
  const LatticePoint& p0 = edge.polygon.vertices().front();
  const LatticePoint& p1 = edge.polygon.vertices().back();
  std::int64_t di = p1.i - p0.i;
  std::int64_t dj = p1.j - p0.j;
  std::int64_t n = std::gcd(di, dj);
  std::vector<LatticePoint> out;
  for (std::int64_t k = 0; k <= n; ++k) out.push_back({p0.i + k * (di / n), p0.j + k * (dj / n)});
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod(s0, m);
}

}  // namespace

FFBiPoly residue_face_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& face) {
  const FiniteField& k = FiniteField::prime_field(sd.prime);
  FFBiPoly out(k);
  for (const auto& p : face.polygon.lattice_points()) {
    if (auto c = residue_coeff(f, sd, p, face.affine(p))) out.add_term(p, *c);
  }
  return out;
}

FFPoly residue_edge_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& edge) {
  const FiniteField& k = FiniteField::prime_field(sd.prime);
  std::vector<Code> cs;
  for (const auto& p : edge_points(edge)) cs.push_back(residue_coeff(f, sd, p, edge.affine(p)).value_or(0));
  return FFPoly(k, std::move(cs));
}

FFPoly edge_chart_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& edge) {
  auto pts = edge_points(edge);
  std::size_t step = 1;
  while (step + 1 < pts.size() && !is_integer(edge.affine(pts[step]))) ++step;
  FFPoly full = residue_edge_poly(f, sd, edge);
  std::vector<Code> cs;
  for (std::size_t n = 0; n < pts.size(); n += step) cs.push_back(full.coeff(static_cast<int>(n)));
  return FFPoly(full.field(), std::move(cs));
}

FFBiPoly face_chart_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& face) {
  const std::int64_t delta = face.delta;
  const std::int64_t a_coef = mod(to_int64(numerator(face.fstar.a)), delta);
  const std::int64_t b_coef = mod(to_int64(numerator(face.fstar.b)), delta);
  const std::int64_t ga = std::gcd(a_coef, delta);
  const std::int64_t step_i = delta / ga;
  const std::int64_t e = ga / std::gcd(ga, b_coef);
  // a_coef * i0 = -b_coef * e  (mod delta); both sides divisible by ga
  std::int64_t i0 = 0;
  if (step_i > 1) {
    std::int64_t rhs = mod(-b_coef * e, delta) / ga;
    i0 = mod(rhs * inverse_mod(a_coef / ga, step_i), step_i);
  }
  const LatticePoint origin = face.polygon.vertices().front();
  FFBiPoly residue = residue_face_poly(f, sd, face);
  FFBiPoly::TermMap chart;
  for (const auto& [p, c] : residue.terms()) {
    std::int64_t qi = p.i - origin.i;
    std::int64_t qj = p.j - origin.j;
    std::int64_t t = qj / e;
    std::int64_t s = (qi - t * i0) / step_i;
    chart[{s, t}] = c;
  }
  std::int64_t ms = 0, mt = 0;
  for (const auto& [q, c] : chart) {
    ms = std::min(ms, q.i);
    mt = std::min(mt, q.j);
  }
  FFBiPoly out(residue.field());
  for (const auto& [q, c] : chart) out.add_term({q.i - ms, q.j - mt}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Q.

namespace {

struct QPoly {
  std::vector<Rat> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  QPoly stripped() const {
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    return QPoly{std::vector<Rat>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end())};
  }
  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

QPoly qmod(QPoly a, const QPoly& b) {
  while (!a.zero() && a.deg() >= b.deg()) {
    Rat q = a.c.back() / b.c.back();
    int shift = a.deg() - b.deg();
    for (int n = 0; n <= b.deg(); ++n) a.c[static_cast<std::size_t>(n + shift)] -= q * b.c[static_cast<std::size_t>(n)];
    a.c.pop_back();
    a.trim();
  }
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  a.trim();
  b.trim();
  while (!b.zero()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) {
    Rat lc = a.c.back();
    for (auto& x : a.c) x /= lc;
  }
  return a;
}

std::string edge_id(const PolygonEdge& e) {
  LatticePoint a = std::min(e.from, e.to);
  LatticePoint b = std::max(e.from, e.to);
  return "L" + to_string(a) + to_string(b);
}

}  // namespace

bool squarefree_over_q(const BivariatePoly& f) {
  if (f.is_zero()) return false;
  std::int64_t mi = std::numeric_limits<std::int64_t>::max();
  std::int64_t mj = mi;
  for (const auto& [p, c] : f.terms()) {
    mi = std::min(mi, p.i);
    mj = std::min(mj, p.j);
  }
  std::vector<QPoly> col;  // col[n](x) multiplies y^n
  std::int64_t max_i = 0;
  for (const auto& [p, c] : f.terms()) {
    auto j = static_cast<std::size_t>(p.j - mj);
    auto i = static_cast<std::size_t>(p.i - mi);
    if (col.size() <= j) col.resize(j + 1);
    if (col[j].c.size() <= i) col[j].c.resize(i + 1, Rat(0));
    col[j].c[i] = c;
    max_i = std::max(max_i, p.i - mi);
  }
  for (auto& q : col) q.trim();
  const auto n = static_cast<std::int64_t>(col.size()) - 1;
  if (n == 0) return false;

  QPoly content;
  for (const auto& q : col) content = qgcd(content, q);
  if (content.stripped().deg() > 0) return false;

  // disc_y(f) has degree at most (2n - 1) * max_i in x
  const std::int64_t needed = (2 * n - 1) * max_i + 1;
  std::int64_t tried = 0;
  for (std::int64_t x0 = 1; tried < needed; ++x0) {
    if (col.back().eval(Rat(x0)) == 0) continue;
    ++tried;
    QPoly g;
    QPoly dg;
    for (std::size_t k = 0; k < col.size(); ++k) {
      Rat v = col[k].eval(Rat(x0));
      g.c.push_back(v);
      if (k > 0) dg.c.push_back(v * static_cast<long>(k));
    }
    if (qgcd(g, dg).deg() == 0) return true;
  }
  return false;
}

RegularityVerdict baker_nondegenerate(const BivariatePoly& f) {
  RegularityVerdict out;
  LatticePolygon poly = newton_polygon(f);
  std::vector<PolygonEdge> edges = poly.edges();
  std::vector<std::string> seen;
  for (const auto& e : edges) {
    std::string id = edge_id(e);
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    LatticePoint p0 = std::min(e.from, e.to);
    LatticePoint p1 = std::max(e.from, e.to);
    std::int64_t n = e.lattice_length;
    QPoly fl, xl, yl;
    for (std::int64_t k = 0; k <= n; ++k) {
      LatticePoint p{p0.i + k * ((p1.i - p0.i) / n), p0.j + k * ((p1.j - p0.j) / n)};
      Rat a = f.coeff(p);
      fl.c.push_back(a);
      xl.c.push_back(a * p.i);
      yl.c.push_back(a * p.j);
    }
    QPoly g = qgcd(qgcd(fl, xl), yl).stripped();
    RegularityItem item;
    item.id = id;
    item.check = "edge_nondegenerate";
    item.status = g.deg() > 0 ? Status::kFail : Status::kPass;
    if (g.deg() > 0) item.detail = "common factor of degree " + std::to_string(g.deg());
    out.items.push_back(std::move(item));
  }
  out.overall = std::any_of(out.items.begin(), out.items.end(),
                            [](const RegularityItem& i) { return i.status != Status::kPass; })
                    ? Status::kFail
                    : Status::kPass;
  return out;
}

RegularityVerdict is_delta_v_regular(const BivariatePoly& f, std::uint32_t p) {
  return is_delta_v_regular(f, subdivide(f, p));
}

RegularityVerdict is_delta_v_regular(const BivariatePoly& f, const SubdividedPolygon& sd) {
  RegularityVerdict out;
  for (const auto& face : sd.faces) {
    RegularityItem item;
    item.id = face.id();
    item.check = "face_smooth";
    FFBiPoly g = face_chart_poly(f, sd, face);
    item.detail = residue_face_poly(f, sd, face).to_string();
    try {
      TorusZeroResult r = has_common_torus_zero({g, g.x_dx(), g.y_dy()});
      item.status = r.found ? Status::kFail : Status::kPass;
      item.witness = r.witness;
    } catch (const Error& e) {
      if (e.code() != Errc::kIndeterminateSystem) throw;
      item.status = Status::kIndeterminate;
    }
    out.items.push_back(std::move(item));
  }
  for (const auto& edge : sd.vedges) {
    RegularityItem item;
    item.id = edge.id();
    item.check = "edge_squarefree";
    item.detail = residue_edge_poly(f, sd, edge).to_string("t");
    FFPoly u = edge_chart_poly(f, sd, edge).strip_low_powers();
    item.status = !u.is_zero() && is_squarefree(u) ? Status::kPass : Status::kFail;
    out.items.push_back(std::move(item));
  }
  RegularityItem guard;
  guard.id = "f";
  guard.check = "squarefree_over_Q";
  guard.status = squarefree_over_q(f) ? Status::kPass : Status::kFail;
  out.items.push_back(std::move(guard));

  out.overall = Status::kPass;
  for (const auto& item : out.items) {
    if (item.status == Status::kFail) {
      out.overall = Status::kFail;
    } else if (item.status == Status::kIndeterminate && out.overall == Status::kPass) {
      out.overall = Status::kIndeterminate;
    }
  }
  return out;
}

}  // namespace tamejumps
