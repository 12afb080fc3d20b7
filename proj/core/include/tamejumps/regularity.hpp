#pragma once

// Residue polynomials of v-faces and v-edges and the regularity tests built on them.

#include "tamejumps/finite_field.hpp"
#include "tamejumps/polynomial.hpp"
#include "tamejumps/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tamejumps {

/// Sparse Laurent polynomial in x, y over a finite field.
class FFBiPoly {
 public:
  using Code = FiniteField::Code;
  using TermMap = std::map<LatticePoint, Code>;

  explicit FFBiPoly(const FiniteField& field) : field_(&field) {}
  FFBiPoly(const FiniteField& field, const TermMap& terms);

  const FiniteField& field() const { return *field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Code coeff(const LatticePoint& p) const;
  void add_term(const LatticePoint& p, Code c);

  FFBiPoly x_dx() const;
  FFBiPoly y_dy() const;
  /// Value at a torus point of an extension field of the same characteristic
  /// (coefficients must lie in the prime field).
  FFElem eval(const FFElem& x, const FFElem& y) const;

  /// Terms by descending (j, i): "y^2 + x^3 + 1".
  std::string to_string() const;
  friend bool operator==(const FFBiPoly&, const FFBiPoly&) = default;

 private:
  const FiniteField* field_;
  TermMap terms_;
};

struct TorusPoint {
  FFElem x;
  FFElem y;
  /// Degree over F_p of the field the coordinates live in.
  int degree;
};

struct TorusZeroResult {
  bool found = false;
  /// A common zero of least possible degree over F_p.
  std::optional<TorusPoint> witness;
};

/// Decides whether polynomials over F_p share a zero with x, y != 0 over the
/// algebraic closure. Zero polynomials impose no condition; a list of only zero
/// polynomials throws Error(kIndeterminateSystem).
TorusZeroResult has_common_torus_zero(const std::vector<FFBiPoly>& polys);

/// Coefficient at P is residue(a_P p^-v(P)) when val_p(a_P) = v(P), else 0.
FFBiPoly residue_face_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& face);

/// sum_n c_n t^n over the lattice points of the edge, smaller endpoint first.
FFPoly residue_edge_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& edge);

/// The face residue polynomial rewritten in coordinates of the lattice of points
/// with integral v (origin at the first face vertex), shifted to nonnegative exponents.
FFBiPoly face_chart_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& face);

/// The edge residue polynomial in the variable u = t^s, s being the lattice step
/// between consecutive points with integral v.
FFPoly edge_chart_poly(const BivariatePoly& f, const SubdividedPolygon& sd, const VFace& edge);

enum class Status { kPass, kFail, kIndeterminate };
std::string to_string(Status s);  // "pass" | "fail" | "indeterminate"

struct RegularityItem {
  std::string id;     // face/edge id, or "f" for whole-curve checks
  std::string check;  // "face_smooth", "edge_squarefree", "squarefree_over_Q", ...
  Status status = Status::kPass;
  std::optional<TorusPoint> witness;
  std::string detail;
};

struct RegularityVerdict {
  Status overall = Status::kPass;
  std::vector<RegularityItem> items;
};

/// Runs the face, edge and squarefreeness checks for every v-face and v-edge.
RegularityVerdict is_delta_v_regular(const BivariatePoly& f, std::uint32_t p);
RegularityVerdict is_delta_v_regular(const BivariatePoly& f, const SubdividedPolygon& sd);

/// Nondegeneracy of f along the boundary edges of its Newton polygon, over Q.
RegularityVerdict baker_nondegenerate(const BivariatePoly& f);

/// gcd(f, df/dy) is constant (up to monomials) over Q.
bool squarefree_over_q(const BivariatePoly& f);

std::string to_string(const TorusPoint& w);

}  // namespace tamejumps
