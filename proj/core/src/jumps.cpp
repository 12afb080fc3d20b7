#include "tamejumps/jumps.hpp"

#include "tamejumps/error.hpp"

#include <algorithm>
#include <numeric>

namespace tamejumps {

namespace {

BivariatePoly d_dy(const BivariatePoly& f) {
  BivariatePoly::TermMap t;
  for (const auto& [p, c] : f.terms()) {
    if (p.j != 0) t[{p.i, p.j - 1}] = c * p.j;
  }
  return BivariatePoly(t);
}

bool is_interior(const SubdividedPolygon& sd, const LatticePoint& p) {
  return sd.polygon.dim() == 2 && sd.polygon.strictly_inside(p);
}

}  // namespace

std::vector<BakerForm> baker_basis(const BivariatePoly& f) {
  const std::string fy = d_dy(f).to_string();
  std::vector<BakerForm> out;
  for (const auto& p : interior_points(newton_polygon(f))) {
    std::string mono = BivariatePoly::monomial(1, p.i - 1, p.j - 1).to_string();
    std::string lead = mono == "1" ? "dx" : mono + "*dx";
    out.push_back({p, lead + "/(" + fy + ")"});
  }
  return out;
}

Rat vcan_point(const SubdividedPolygon& sd, const LatticePoint& point) {
  if (!is_interior(sd, point)) throw Error(Errc::kNotInterior, to_string(point) + " is not an interior lattice point");
  Rat value = -v_eval(sd, point);
  if (value <= -1 || value > 0) {
    throw Error(Errc::kHypothesisViolation, "v_can" + to_string(point) + " = " + to_string(value) + " outside (-1, 0]");
  }
  return value;
}

ExtRat vcan_form(const SubdividedPolygon& sd, const CanonicalForm& form) {
  ExtRat best = ExtRat::infinity();
  for (const auto& [p, a] : form) {
    if (!is_interior(sd, p)) throw Error(Errc::kNotHolomorphic, "basis index " + to_string(p) + " is not interior");
    if (a == 0) continue;
    best = min(best, ExtRat(Rat(val_p_int(a, sd.prime)) - v_eval(sd, p)));
  }
  return best;
}

JumpsReport jumps(const BivariatePoly& f, std::uint32_t p) {
  JumpsReport r;
  r.subdivision = subdivide(f, p);
  const auto& sd = r.subdivision;
  const auto interior = interior_points(sd.polygon);
  r.genus = static_cast<std::int64_t>(interior.size());
  r.regularity = is_delta_v_regular(f, sd);
  r.conditional = r.regularity.overall != Status::kPass;
  r.assumptions.push_back("the curve has a divisor of degree one over the base field");
  r.assumptions.push_back("f is irreducible over the base field");

  if (r.genus == 0) {
    r.warnings.push_back("genus 0: jumps require genus >= 1");
    return r;
  }
  if (baker_nondegenerate(f).overall != Status::kPass) {
    r.warnings.push_back("f is degenerate along a boundary edge of its Newton polygon");
  }

  std::map<Rat, std::int64_t> counts;
  for (const auto& pt : interior) {
    Rat v = v_eval(sd, pt);
    r.per_point.push_back({pt, v, -v});
    if (v < 0 || v >= 1) {
      r.warnings.push_back("v_can" + to_string(pt) + " = " + to_string(Rat(-v)) +
                           " lies outside (-1, 0]; its decimal part is used");
    }
    ++counts[frac_part(v)];
  }
  BigInt lcm = 1;
  for (const auto& [value, m] : counts) {
    r.jumps.push_back({value, m});
    BigInt den = denominator(value);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  r.stabilisation_index = to_int64(lcm);
  return r;
}

std::int64_t graded_dim(const JumpsReport& report, const Rat& j) {
  if (j < 0 || j >= 1) throw Error(Errc::kOutOfRange, to_string(j) + " is not in [0, 1)");
  for (const auto& e : report.jumps) {
    if (e.value == j) return e.multiplicity;
  }
  return 0;
}

bool vcan_image_contains(const JumpsReport& report, const Rat& q) {
  return std::any_of(report.jumps.begin(), report.jumps.end(),
                     [&q](const JumpEntry& e) { return is_integer(q + e.value); });
}

std::vector<Rat> relative_jumps(const JumpsReport& report, std::int64_t d) {
  if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive, got " + std::to_string(d));
  std::vector<Rat> out;
  for (const auto& e : report.jumps) {
    Rat value = Rat(floor_rat(e.value * d)) / d;
    out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubdividedPolygon base_change(const BivariatePoly& f, std::uint32_t p, std::int64_t d) {
  if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive, got " + std::to_string(d));
  return subdivide(f, p, d);
}

}  // namespace tamejumps
