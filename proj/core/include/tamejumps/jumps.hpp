#pragma once

// Canonical valuations of holomorphic forms in the Baker basis and the jumps
// they determine, together with the tame base-change formulas.

#include "tamejumps/polynomial.hpp"
#include "tamejumps/polytope.hpp"
#include "tamejumps/rational.hpp"
#include "tamejumps/regularity.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tamejumps {

/// The form x^(i-1) y^(j-1) dx / f_y attached to an interior point (i, j).
struct BakerForm {
  LatticePoint index;
  /// e.g. "dx/(2*y)" or "x*dx/(2*y)"
  std::string display;
};

/// Coefficients in the Baker basis, keyed by interior point; the empty map is the zero form.
using CanonicalForm = std::map<LatticePoint, Rat>;

struct JumpEntry {
  Rat value;
  std::int64_t multiplicity;

  friend bool operator==(const JumpEntry&, const JumpEntry&) = default;
};

struct PointValue {
  LatticePoint point;
  Rat v;
  Rat vcan;
};

struct JumpsReport {
  std::int64_t genus = 0;
  std::vector<JumpEntry> jumps;  // ascending
  std::int64_t stabilisation_index = 1;
  RegularityVerdict regularity;
  std::vector<PointValue> per_point;
  bool conditional = false;
  std::vector<std::string> warnings;
  std::vector<std::string> assumptions;
  SubdividedPolygon subdivision;
};

/// One form per interior lattice point, in lexicographic order.
std::vector<BakerForm> baker_basis(const BivariatePoly& f);

/// -v(P). Throws kNotInterior off the interior and kHypothesisViolation when the
/// value leaves (-1, 0].
Rat vcan_point(const SubdividedPolygon& sd, const LatticePoint& point);

/// min over the support of val_p(a_P) - v(P); infinity for the zero form.
/// Throws kNotHolomorphic when the support leaves the interior.
ExtRat vcan_form(const SubdividedPolygon& sd, const CanonicalForm& form);

/// Decimal parts of v over the interior lattice points.
JumpsReport jumps(const BivariatePoly& f, std::uint32_t p);

/// Multiplicity of j as a jump; j must lie in [0, 1) (kOutOfRange otherwise).
std::int64_t graded_dim(const JumpsReport& report, const Rat& j);

/// q is congruent to -j mod 1 for some jump j.
bool vcan_image_contains(const JumpsReport& report, const Rat& q);

/// floor(d j) / d for every jump with multiplicity, nondecreasing (kInvalidDegree for d < 1).
std::vector<Rat> relative_jumps(const JumpsReport& report, std::int64_t d);

/// The subdivision with all heights multiplied by d.
SubdividedPolygon base_change(const BivariatePoly& f, std::uint32_t p, std::int64_t d);

}  // namespace tamejumps
