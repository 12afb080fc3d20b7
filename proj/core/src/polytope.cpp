#include "tamejumps/polytope.hpp"

#include "tamejumps/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace tamejumps {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

i128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<i128>(a.i - o.i) * (b.j - o.j) - static_cast<i128>(a.j - o.j) * (b.i - o.i);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / gcd(a, b) * b; }

// x, y with a*x + b*y = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolygon

LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon out;
  if (pts.empty()) return out;
  if (pts.size() == 1) {
    out.vertices_ = pts;
    out.dim_ = 0;
    return out;
  }
  // Monotone chain, dropping collinear points.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() <= 2) {
    out.vertices_ = {pts.front(), pts.back()};
    out.dim_ = 1;
    return out;
  }
  out.vertices_ = std::move(h);  // starts at the smallest point, counterclockwise
  out.dim_ = 2;
  return out;
}

std::vector<PolygonEdge> LatticePolygon::edges() const {
  std::vector<PolygonEdge> out;
  if (dim_ == 0 || vertices_.empty()) return out;
  if (dim_ == 1) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    out.push_back({a, b, gcd64(b.i - a.i, b.j - a.j)});
    return out;
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& a = vertices_[k];
    const auto& b = vertices_[(k + 1) % vertices_.size()];
    out.push_back({a, b, gcd64(b.i - a.i, b.j - a.j)});
  }
  return out;
}

std::int64_t LatticePolygon::twice_area() const {
  if (dim_ < 2) return 0;
  i128 s = 0;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& a = vertices_[k];
    const auto& b = vertices_[(k + 1) % vertices_.size()];
    s += static_cast<i128>(a.i) * b.j - static_cast<i128>(a.j) * b.i;
  }
  return static_cast<std::int64_t>(s);
}

bool LatticePolygon::contains(const RatPoint& p) const {
  if (vertices_.empty()) return false;
  auto orient = [&](const LatticePoint& a, const LatticePoint& b) {
    return Rat(b.i - a.i) * (p.j - a.j) - Rat(b.j - a.j) * (p.i - a.i);
  };
  if (dim_ == 0) return p.i == vertices_[0].i && p.j == vertices_[0].j;
  if (dim_ == 1) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    if (orient(a, b) != 0) return false;
    const Rat t_num = (p.i - a.i) * (b.i - a.i) + (p.j - a.j) * (b.j - a.j);
    const Rat len = Rat((b.i - a.i) * (b.i - a.i) + (b.j - a.j) * (b.j - a.j));
    return t_num >= 0 && t_num <= len;
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (orient(vertices_[k], vertices_[(k + 1) % vertices_.size()]) < 0) return false;
  }
  return true;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (dim_ < 2) return contains(RatPoint{Rat(p.i), Rat(p.j)});
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (cross(vertices_[k], vertices_[(k + 1) % vertices_.size()], p) < 0) return false;
  }
  return true;
}

bool LatticePolygon::on_boundary(const LatticePoint& p) const {
  if (!contains(p)) return false;
  if (dim_ < 2) return true;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (cross(vertices_[k], vertices_[(k + 1) % vertices_.size()], p) == 0) return true;
  }
  return false;
}

bool LatticePolygon::strictly_inside(const LatticePoint& p) const {
  return dim_ == 2 && contains(p) && !on_boundary(p);
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
  std::vector<LatticePoint> out;
  if (vertices_.empty()) return out;
  std::int64_t lo_i = vertices_[0].i, hi_i = lo_i, lo_j = vertices_[0].j, hi_j = lo_j;
  for (const auto& v : vertices_) {
    lo_i = std::min(lo_i, v.i);
    hi_i = std::max(hi_i, v.i);
    lo_j = std::min(lo_j, v.j);
    hi_j = std::max(hi_j, v.j);
  }
  for (std::int64_t i = lo_i; i <= hi_i; ++i) {
    for (std::int64_t j = lo_j; j <= hi_j; ++j) {
      if (contains(LatticePoint{i, j})) out.push_back({i, j});
    }
  }
  return out;
}

std::string to_string(const AffineFn& f) {
  return "{a: " + to_string(f.a) + ", b: " + to_string(f.b) + ", c: " + to_string(f.c) + "}";
}

std::string VFace::id() const {
  std::string out = dim == 2 ? "F" : "L";
  for (const auto& v : polygon.vertices()) out += to_string(v);
  return out;
}

LatticePolygon newton_polygon(const BivariatePoly& f) { return LatticePolygon::hull(f.support()); }

std::vector<LatticePoint> interior_points(const LatticePolygon& polygon) {
  std::vector<LatticePoint> out;
  if (polygon.dim() < 2) return out;
  for (const auto& p : polygon.lattice_points()) {
    if (!polygon.on_boundary(p)) out.push_back(p);
  }
  return out;
}

std::int64_t boundary_count(const LatticePolygon& polygon) {
  std::int64_t n = 0;
  for (const auto& e : polygon.edges()) n += e.lattice_length;
  return n;
}

Rat face_valuation(const VFace& face, const LatticePoint& point) { return face.fstar(point) / face.delta; }

// ---------------------------------------------------------------------------
// Lower hull

namespace {

struct Lifted {
  LatticePoint p;
  std::int64_t h;
};

// Plane nx*i + ny*j + nz*h + d = 0 with nz > 0, reduced by the content.
struct Plane {
  i128 nx, ny, nz, d;
  auto key() const { return std::make_tuple(nx, ny, nz, d); }
  bool operator<(const Plane& o) const { return key() < o.key(); }
  i128 side(const Lifted& q) const { return nx * q.p.i + ny * q.p.j + nz * q.h + d; }
};

std::int64_t denominator_lcm(const AffineFn& f) {
  BigInt l = 1;
  for (const Rat* r : {&f.a, &f.b, &f.c}) l = lcm_big(l, BigInt(boost::multiprecision::denominator(*r)));
  return to_int64(l);
}

Rat to_rat(i128 n, i128 d) {
  // Values stay far below 64 bits for any realistic input; BigInt keeps this exact regardless.
  auto to_big = [](i128 v) {
    const bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    BigInt b = 0;
    BigInt scale = 1;
    while (u) {
      b += scale * static_cast<unsigned>(u % 1000000000U);
      u /= 1000000000U;
      scale *= 1000000000U;
    }
    return neg ? BigInt(-b) : b;
  };
  return Rat(to_big(n), to_big(d));
}

VFace make_edge(const LatticePoint& a, const LatticePoint& b, const AffineFn& v, bool boundary) {
  VFace e;
  e.dim = 1;
  e.polygon = LatticePolygon::hull({a, b});
  e.affine = v;
  e.boundary = boundary;
  const std::int64_t g = gcd64(b.i - a.i, b.j - a.j);
  const LatticePoint u{(b.i - a.i) / g, (b.j - a.j) / g};
  const LatticePoint& p0 = e.polygon.vertices()[0];
  const Rat v0 = v(p0);
  const Rat slope = v(LatticePoint{p0.i + u.i, p0.j + u.j}) - v0;
  const BigInt den = lcm_big(BigInt(boost::multiprecision::denominator(v0)),
                             BigInt(boost::multiprecision::denominator(slope)));
  e.delta = to_int64(den);
  // Integral (alpha, beta) with alpha*u.i + beta*u.j = -delta*slope.
  std::int64_t x = 0, y = 0;
  ext_gcd(u.i, u.j, x, y);
  const std::int64_t target = to_int64(BigInt(boost::multiprecision::numerator(Rat(-slope * e.delta))));
  const Rat alpha(x * target), beta(y * target);
  e.fstar = {alpha, beta, Rat(-v0 * e.delta) - alpha * p0.i - beta * p0.j};
  return e;
}

}  // namespace

SubdividedPolygon subdivide(const BivariatePoly& f, std::uint32_t p, std::int64_t height_scale) {
  require_prime(p);
  if (height_scale < 1) throw Error(Errc::kInvalidDegree, "height scale must be positive");
  SubdividedPolygon sd;
  sd.polygon = newton_polygon(f);
  sd.prime = p;
  sd.height_scale = height_scale;
  if (sd.polygon.dim() < 2) {
    throw Error(Errc::kDegeneratePolygon, "Newton polygon has dimension " + std::to_string(sd.polygon.dim()));
  }
  std::vector<Lifted> pts;
  for (const auto& [e, c] : f.terms()) {
    const std::int64_t h = val_p_int(c, p) * height_scale;
    pts.push_back({e, h});
    sd.lift.emplace(e, Rat(h));
  }

  std::set<Plane> planes;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const i128 ux = pts[b].p.i - pts[a].p.i, uy = pts[b].p.j - pts[a].p.j, uh = pts[b].h - pts[a].h;
        const i128 wx = pts[c].p.i - pts[a].p.i, wy = pts[c].p.j - pts[a].p.j, wh = pts[c].h - pts[a].h;
        Plane pl{uy * wh - uh * wy, uh * wx - ux * wh, ux * wy - uy * wx, 0};
        if (pl.nz == 0) continue;
        if (pl.nz < 0) {
          pl.nx = -pl.nx;
          pl.ny = -pl.ny;
          pl.nz = -pl.nz;
        }
        pl.d = -(pl.nx * pts[a].p.i + pl.ny * pts[a].p.j + pl.nz * pts[a].h);
        const i128 g = gcd128(gcd128(pl.nx, pl.ny), gcd128(pl.nz, pl.d));
        pl.nx /= g;
        pl.ny /= g;
        pl.nz /= g;
        pl.d /= g;
        if (planes.count(pl)) continue;
        const bool lower = std::all_of(pts.begin(), pts.end(), [&](const Lifted& q) { return pl.side(q) >= 0; });
        if (lower) planes.insert(pl);
      }
    }
  }

  for (const auto& pl : planes) {
    std::vector<LatticePoint> on;
    for (const auto& q : pts) {
      if (pl.side(q) == 0) on.push_back(q.p);
    }
    VFace face;
    face.dim = 2;
    face.polygon = LatticePolygon::hull(on);
    face.affine = {to_rat(-pl.nx, pl.nz), to_rat(-pl.ny, pl.nz), to_rat(-pl.d, pl.nz)};
    face.delta = denominator_lcm(face.affine);
    face.fstar = face.affine.scaled(Rat(-face.delta));
    sd.faces.push_back(std::move(face));
  }
  std::sort(sd.faces.begin(), sd.faces.end(), [](const VFace& l, const VFace& r) {
    return l.polygon.vertices() < r.polygon.vertices();
  });

  std::map<std::pair<LatticePoint, LatticePoint>, std::vector<std::size_t>> edge_faces;
  for (std::size_t k = 0; k < sd.faces.size(); ++k) {
    for (const auto& e : sd.faces[k].polygon.edges()) {
      edge_faces[std::minmax(e.from, e.to)].push_back(k);
    }
  }
  for (const auto& [ends, owners] : edge_faces) {
    sd.vedges.push_back(make_edge(ends.first, ends.second, sd.faces[owners.front()].affine, owners.size() == 1));
  }
  return sd;
}

Rat v_eval(const SubdividedPolygon& sd, const RatPoint& point) {
  if (!sd.polygon.contains(point)) {
    throw Error(Errc::kOutsidePolygon, "(" + to_string(point.i) + "," + to_string(point.j) + ") lies outside the Newton polygon");
  }
  Rat best = sd.faces.front().affine(point);
  for (const auto& f : sd.faces) best = std::max(best, f.affine(point));
  return best;
}

Rat v_eval(const SubdividedPolygon& sd, const LatticePoint& point) {
  return v_eval(sd, RatPoint{Rat(point.i), Rat(point.j)});
}

std::vector<std::size_t> faces_containing(const SubdividedPolygon& sd, const LatticePoint& point) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sd.faces.size(); ++k) {
    if (sd.faces[k].polygon.contains(point)) out.push_back(k);
  }
  return out;
}

}  // namespace tamejumps
