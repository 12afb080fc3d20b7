#pragma once

// Newton polygons, the lower convex hull of valuation-lifted support points,
// and the piecewise affine function v it induces on the polygon.

#include "tamejumps/polynomial.hpp"
#include "tamejumps/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tamejumps {

struct RatPoint {
  Rat i;
  Rat j;
};

struct PolygonEdge {
  LatticePoint from;
  LatticePoint to;
  /// |L cap Z^2| - 1
  std::int64_t lattice_length;
};

/// Convex lattice polygon given by its extreme points in counterclockwise order,
/// starting from the lexicographically smallest vertex. Degenerate hulls keep
/// one vertex (dim 0) or the two endpoints (dim 1).
class LatticePolygon {
 public:
  LatticePolygon() = default;
  static LatticePolygon hull(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  int dim() const { return dim_; }
  std::vector<PolygonEdge> edges() const;

  /// Twice the Euclidean area (an integer for lattice polygons).
  std::int64_t twice_area() const;
  bool contains(const LatticePoint& p) const;
  bool contains(const RatPoint& p) const;
  bool on_boundary(const LatticePoint& p) const;
  bool strictly_inside(const LatticePoint& p) const;
  /// All lattice points of the closed polygon, sorted lexicographically.
  std::vector<LatticePoint> lattice_points() const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<LatticePoint> vertices_;
  int dim_ = 0;
};

/// (i, j) -> a*i + b*j + c
struct AffineFn {
  Rat a;
  Rat b;
  Rat c;

  Rat operator()(const LatticePoint& p) const { return a * p.i + b * p.j + c; }
  Rat operator()(const RatPoint& p) const { return a * p.i + b * p.j + c; }
  AffineFn scaled(const Rat& s) const { return {a * s, b * s, c * s}; }

  friend bool operator==(const AffineFn&, const AffineFn&) = default;
};

std::string to_string(const AffineFn& f);

/// A v-face (dim 2) or v-edge (dim 1) of the subdivision.
///
/// For faces, `affine` is v on the face, `delta` the least positive integer making
/// delta*affine integral and `fstar = -delta * affine`. For edges, `affine` is
/// inherited from an adjacent face, `delta` is the least positive integer with
/// delta*v integral at the lattice points of the edge, and `fstar` is an integral
/// affine function agreeing with -delta*v there.
struct VFace {
  int dim = 2;
  LatticePolygon polygon;
  AffineFn affine;
  std::int64_t delta = 1;
  AffineFn fstar;
  bool boundary = false;  // edges only: lies on the boundary of the Newton polygon

  std::string id() const;
};

struct SubdividedPolygon {
  LatticePolygon polygon;
  std::uint32_t prime = 2;
  std::int64_t height_scale = 1;
  std::vector<VFace> faces;   // sorted by vertex list
  std::vector<VFace> vedges;  // sorted by endpoints
  /// Support point -> height_scale * val_p(coefficient).
  std::map<LatticePoint, Rat> lift;
};

LatticePolygon newton_polygon(const BivariatePoly& f);

/// Projects the lower facets of the hull of {(i, j, d * val_p(a_ij))}. Requires a
/// two-dimensional Newton polygon (Errc::kDegeneratePolygon otherwise).
SubdividedPolygon subdivide(const BivariatePoly& f, std::uint32_t p, std::int64_t height_scale = 1);

/// Value of v at a point of the polygon (Errc::kOutsidePolygon otherwise).
Rat v_eval(const SubdividedPolygon& sd, const RatPoint& point);
Rat v_eval(const SubdividedPolygon& sd, const LatticePoint& point);

std::vector<LatticePoint> interior_points(const LatticePolygon& polygon);
std::int64_t boundary_count(const LatticePolygon& polygon);

/// F*(P) / delta_F.
Rat face_valuation(const VFace& face, const LatticePoint& point);

/// Faces (indices into sd.faces) whose closed polygon contains the point.
std::vector<std::size_t> faces_containing(const SubdividedPolygon& sd, const LatticePoint& point);

}  // namespace tamejumps
