#include "curves.hpp"
#include "hull_oracle.hpp"
#include "tamejumps/error.hpp"
#include "tamejumps/jumps.hpp"
#include "tamejumps/polyparse.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace tamejumps {
namespace {

using LP = LatticePoint;

const char* kGolden = "y^2 = 8*x^6 + x^3 + 2";

Rat q(long n, long d = 1) { return Rat(n) / d; }

template <typename F>
Errc error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::kParseError;
}

std::vector<Rat> expand(const JumpsReport& r) {
  std::vector<Rat> out;
  for (const auto& e : r.jumps) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

TEST(BakerBasis, Examples) {
  auto golden = baker_basis(parse_poly(kGolden));
  ASSERT_EQ(golden.size(), 2u);
  EXPECT_EQ(golden[0].index, (LP{1, 1}));
  EXPECT_EQ(golden[0].display, "dx/(2*y)");
  EXPECT_EQ(golden[1].index, (LP{2, 1}));
  EXPECT_EQ(golden[1].display, "x*dx/(2*y)");
  auto ell = baker_basis(parse_poly("y^2 - x^3 - 2"));
  ASSERT_EQ(ell.size(), 1u);
  EXPECT_EQ(ell[0].display, "dx/(2*y)");
  EXPECT_TRUE(baker_basis(parse_poly("1 + x + y + x*y")).empty());
}

TEST(VcanPoint, Examples) {
  const auto sd = subdivide(parse_poly(kGolden), 2);
  EXPECT_EQ(vcan_point(sd, {1, 1}), q(-1, 6));
  EXPECT_EQ(vcan_point(sd, {2, 1}), q(-1, 2));
  EXPECT_EQ(vcan_point(subdivide(parse_poly("y^2 - x^3 - 5"), 5), {1, 1}), q(-1, 6));
}

TEST(VcanPoint, Errors) {
  const auto sd = subdivide(parse_poly(kGolden), 2);
  EXPECT_EQ(error_of([&] { vcan_point(sd, {0, 0}); }), Errc::kNotInterior);
  EXPECT_EQ(error_of([&] { vcan_point(sd, {3, 0}); }), Errc::kNotInterior);
  EXPECT_EQ(error_of([&] { vcan_point(sd, {5, 5}); }), Errc::kNotInterior);
  const auto big = subdivide(parse_poly("y^2 + 49*x^6 + 134456"), 7);
  EXPECT_EQ(error_of([&] { vcan_point(big, {1, 1}); }), Errc::kHypothesisViolation);
}

TEST(VcanForm, Examples) {
  const auto sd = subdivide(parse_poly(kGolden), 2);
  EXPECT_EQ(vcan_form(sd, {{{1, 1}, 2}, {{2, 1}, 1}}), ExtRat(q(-1, 2)));
  EXPECT_TRUE(vcan_form(sd, {}).is_infinite());
  EXPECT_EQ(vcan_form(sd, {{{1, 1}, 4}}), ExtRat(q(11, 6)));
  EXPECT_EQ(vcan_form(sd, {{{1, 1}, q(1, 2)}}), ExtRat(q(-7, 6)));
  EXPECT_EQ(error_of([&] { vcan_form(sd, {{{0, 2}, 1}}); }), Errc::kNotHolomorphic);
}

TEST(Jumps, Golden) {
  const auto r = jumps(parse_poly(kGolden), 2);
  EXPECT_EQ(r.genus, 2);
  EXPECT_EQ(r.jumps, (std::vector<JumpEntry>{{q(1, 6), 1}, {q(1, 2), 1}}));
  EXPECT_EQ(r.stabilisation_index, 6);
  EXPECT_EQ(r.regularity.overall, Status::kPass);
  EXPECT_FALSE(r.conditional);
  EXPECT_TRUE(r.warnings.empty());
  ASSERT_EQ(r.per_point.size(), 2u);
  EXPECT_EQ(r.per_point[0].point, (LP{1, 1}));
  EXPECT_EQ(r.per_point[0].v, q(1, 6));
  EXPECT_EQ(r.per_point[0].vcan, q(-1, 6));
  EXPECT_EQ(r.per_point[1].point, (LP{2, 1}));
  EXPECT_EQ(r.per_point[1].vcan, q(-1, 2));
}

// Kodaira types of y^2 = x^3 + p^n for p >= 5 and their jumps n/6 mod 1.
TEST(Jumps, EllipticFamily) {
  const Rat table[] = {q(0), q(1, 6), q(1, 3), q(1, 2), q(2, 3), q(5, 6)};
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int n = 1; n <= 5; ++n) {
      BivariatePoly f = parse_poly("y^2 - x^3") - BivariatePoly::constant(pow_rat(Rat(p), n));
      const auto r = jumps(f, p);
      SCOPED_TRACE(f.to_string());
      EXPECT_EQ(r.genus, 1);
      EXPECT_EQ(r.regularity.overall, Status::kPass);
      ASSERT_EQ(r.jumps.size(), 1u);
      EXPECT_EQ(r.jumps[0].value, table[n]);
      EXPECT_EQ(r.stabilisation_index, static_cast<std::int64_t>(denominator(table[n])));
    }
  }
  EXPECT_EQ(jumps(parse_poly("y^2 - x^3 - 625"), 5).jumps, (std::vector<JumpEntry>{{q(2, 3), 1}}));
}

TEST(Jumps, GenusZeroAndDegenerate) {
  const auto r = jumps(parse_poly("1 + x + y + x*y"), 3);
  EXPECT_EQ(r.genus, 0);
  EXPECT_TRUE(r.jumps.empty());
  EXPECT_EQ(r.stabilisation_index, 1);
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_EQ(r.warnings[0], "genus 0: jumps require genus >= 1");
  EXPECT_EQ(graded_dim(r, q(1, 3)), 0);
  EXPECT_EQ(error_of([] { jumps(parse_poly("x + x^2*y"), 3); }), Errc::kDegeneratePolygon);
}

TEST(GradedDim, Examples) {
  const auto r = jumps(parse_poly(kGolden), 2);
  EXPECT_EQ(graded_dim(r, q(1, 6)), 1);
  EXPECT_EQ(graded_dim(r, q(1, 2)), 1);
  EXPECT_EQ(graded_dim(r, q(0)), 0);
  EXPECT_EQ(error_of([&] { graded_dim(r, q(1)); }), Errc::kOutOfRange);
  EXPECT_EQ(error_of([&] { graded_dim(r, q(-1, 6)); }), Errc::kOutOfRange);
}

TEST(VcanImage, Examples) {
  const auto r = jumps(parse_poly(kGolden), 2);
  EXPECT_TRUE(vcan_image_contains(r, q(-1, 6)));
  EXPECT_TRUE(vcan_image_contains(r, q(11, 6)));
  EXPECT_TRUE(vcan_image_contains(r, q(-5, 2)));
  EXPECT_FALSE(vcan_image_contains(r, q(1, 3)));
  EXPECT_FALSE(vcan_image_contains(r, q(0)));
}

TEST(RelativeJumps, Examples) {
  const auto r = jumps(parse_poly(kGolden), 2);
  EXPECT_EQ(relative_jumps(r, 5), (std::vector<Rat>{q(0), q(2, 5)}));
  EXPECT_EQ(relative_jumps(r, 1), (std::vector<Rat>{q(0), q(0)}));
  EXPECT_EQ(relative_jumps(r, 7), (std::vector<Rat>{q(1, 7), q(3, 7)}));
  EXPECT_EQ(error_of([&] { relative_jumps(r, 0); }), Errc::kInvalidDegree);
}

TEST(BaseChange, Examples) {
  const auto f = parse_poly(kGolden);
  const auto base = subdivide(f, 2);
  const auto sd5 = base_change(f, 2, 5);
  ASSERT_EQ(sd5.faces.size(), base.faces.size());
  for (std::size_t k = 0; k < base.faces.size(); ++k) {
    EXPECT_EQ(sd5.faces[k].polygon, base.faces[k].polygon);
    EXPECT_EQ(sd5.faces[k].affine, base.faces[k].affine.scaled(5));
  }
  EXPECT_EQ(v_eval(sd5, LP{1, 1}), q(5, 6));
  EXPECT_EQ(v_eval(sd5, LP{2, 1}), q(5, 2));
  const auto sd1 = base_change(f, 2, 1);
  EXPECT_EQ(sd1.faces.size(), base.faces.size());
  for (std::size_t k = 0; k < base.faces.size(); ++k) EXPECT_EQ(sd1.faces[k].affine, base.faces[k].affine);
  EXPECT_EQ(error_of([&] { base_change(f, 2, 0); }), Errc::kInvalidDegree);
}

struct Sample {
  BivariatePoly f;
  std::uint32_t p;
};

std::vector<Sample> samples() {
  std::mt19937_64 rng(4242);
  std::vector<Sample> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (auto& f : testing::random_regular_curves(rng, p, 6)) out.push_back({f, p});
  }
  return out;
}

CanonicalForm random_form(std::mt19937_64& rng, const std::vector<LP>& interior, std::uint32_t p) {
  CanonicalForm w;
  std::bernoulli_distribution keep(0.6);
  for (const auto& pt : interior) {
    if (keep(rng)) w[pt] = testing::unit_times_power(rng, p, 4) / pow_rat(Rat(p), 2);
  }
  return w;
}

CanonicalForm add(const CanonicalForm& a, const CanonicalForm& b) {
  CanonicalForm out = a;
  for (const auto& [pt, c] : b) {
    out[pt] += c;
    if (out[pt] == 0) out.erase(pt);
  }
  return out;
}

TEST(JumpsProperties, MatchTriangleOracle) {
  for (const auto& s : samples()) {
    const auto r = jumps(s.f, s.p);
    const auto lifted = testing::lifted_support(s.f, s.p);
    std::vector<Rat> want;
    for (const auto& pt : interior_points(newton_polygon(s.f))) {
      auto h = testing::hull_height(lifted, Rat(pt.i), Rat(pt.j));
      ASSERT_TRUE(h.has_value());
      want.push_back(frac_part(*h));
    }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(expand(r), want) << s.f.to_string();
  }
}

TEST(JumpsProperties, ReportInvariants) {
  for (const auto& s : samples()) {
    const auto r = jumps(s.f, s.p);
    std::int64_t total = 0;
    BigInt lcm = 1;
    for (const auto& e : r.jumps) {
      EXPECT_GE(e.value, 0);
      EXPECT_LT(e.value, 1);
      EXPECT_GT(e.multiplicity, 0);
      EXPECT_TRUE(is_integer(e.value * r.stabilisation_index));
      EXPECT_EQ(graded_dim(r, e.value), e.multiplicity);
      total += e.multiplicity;
      lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(e.value)));
    }
    EXPECT_EQ(total, r.genus);
    EXPECT_EQ(BigInt(r.stabilisation_index), lcm);
    EXPECT_TRUE(std::is_sorted(r.jumps.begin(), r.jumps.end(),
                               [](const JumpEntry& a, const JumpEntry& b) { return a.value < b.value; }));
  }
}

TEST(JumpsProperties, ValuationAxioms) {
  std::mt19937_64 rng(99);
  for (const auto& s : samples()) {
    const auto r = jumps(s.f, s.p);
    const auto& sd = r.subdivision;
    const auto interior = interior_points(sd.polygon);
    for (int trial = 0; trial < 40; ++trial) {
      auto w1 = random_form(rng, interior, s.p);
      auto w2 = random_form(rng, interior, s.p);
      ExtRat v1 = vcan_form(sd, w1), v2 = vcan_form(sd, w2), v12 = vcan_form(sd, add(w1, w2));
      EXPECT_GE(v12, min(v1, v2));
      if (v1 != v2) EXPECT_EQ(v12, min(v1, v2));

      Rat a = testing::unit_times_power(rng, s.p, 3) / s.p;
      CanonicalForm aw;
      for (const auto& [pt, c] : w1) aw[pt] = a * c;
      if (w1.empty()) {
        EXPECT_TRUE(vcan_form(sd, aw).is_infinite());
      } else {
        EXPECT_EQ(vcan_form(sd, aw), ExtRat(Rat(val_p_int(a, s.p)) + v1.value()));
        EXPECT_TRUE(is_integer(v1.value() * r.stabilisation_index));
      }

      ExtRat termwise = ExtRat::infinity();
      for (const auto& [pt, c] : w1) termwise = min(termwise, vcan_form(sd, {{pt, c}}));
      EXPECT_EQ(v1, termwise);
      if (!v1.is_infinite()) EXPECT_TRUE(vcan_image_contains(r, v1.value()));
    }
  }
}

TEST(JumpsProperties, RelativeJumpsConverge) {
  for (const auto& s : samples()) {
    const auto r = jumps(s.f, s.p);
    const auto full = expand(r);
    int seen = 0;
    for (std::int64_t d = 1; seen < 25; ++d) {
      if (std::gcd(d, r.stabilisation_index) != 1) continue;
      ++seen;
      const auto rel = relative_jumps(r, d);
      ASSERT_EQ(rel.size(), full.size());
      for (std::size_t k = 0; k < rel.size(); ++k) {
        EXPECT_LE(rel[k], full[k]);
        EXPECT_LE(full[k] - rel[k], Rat(1, d));
      }
    }
    for (std::int64_t d : {1, 5, 7}) {
      for (std::int64_t m : {2, 3, 5, 7}) {
        const auto a = relative_jumps(r, d);
        const auto b = relative_jumps(r, d * m);
        for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LE(a[k], b[k]);
      }
    }
  }
}

TEST(JumpsProperties, BaseChangeScalesDecimalParts) {
  auto check = [](const BivariatePoly& f, std::uint32_t p) {
    const auto r = jumps(f, p);
    for (std::int64_t d = 1; d <= 13; ++d) {
      if (std::gcd(d, r.stabilisation_index * static_cast<std::int64_t>(p)) != 1) continue;
      const auto sd = base_change(f, p, d);
      std::vector<Rat> got, want;
      for (const auto& pt : interior_points(sd.polygon)) got.push_back(frac_part(v_eval(sd, pt)));
      for (const auto& j : expand(r)) want.push_back(frac_part(j * d));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want) << f.to_string() << " d=" << d;
    }
  };
  check(parse_poly(kGolden), 2);
  for (int n = 1; n <= 5; ++n) check(parse_poly("y^2 - x^3") - BivariatePoly::constant(pow_rat(Rat(7), n)), 7);
  for (const auto& s : samples()) check(s.f, s.p);
}

}  // namespace
}  // namespace tamejumps
