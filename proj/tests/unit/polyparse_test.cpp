#include "tamejumps/error.hpp"
#include "tamejumps/polyparse.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tamejumps {
namespace {

BivariatePoly::TermMap T(std::initializer_list<std::pair<LatticePoint, Rat>> items) {
  return BivariatePoly::TermMap(items.begin(), items.end());
}

Errc code_of(std::string_view src) {
  try {
    parse_poly(src);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << src;
  return Errc::kOutOfRange;
}

TEST(ParsePoly, GoldenCurve) {
  const auto f = parse_poly("y^2 = 8*x^6 + x^3 + 2");
  EXPECT_EQ(f.terms(), T({{{0, 2}, 1}, {{6, 0}, -8}, {{3, 0}, -1}, {{0, 0}, -2}}));
}

TEST(ParsePoly, ImplicitMultiplication) {
  EXPECT_EQ(parse_poly("y^2 = 8x^6 + x^3 + 2"), parse_poly("y^2 = 8*x^6 + x^3 + 2"));
  EXPECT_EQ(parse_poly("2xy").terms(), T({{{1, 1}, 2}}));
  EXPECT_EQ(parse_poly("(x+1)(x-1)").terms(), T({{{2, 0}, 1}, {{0, 0}, -1}}));
}

TEST(ParsePoly, RationalLiteral) {
  EXPECT_EQ(parse_poly("y^2 - x^3 - 1/4").terms(), T({{{0, 2}, 1}, {{3, 0}, -1}, {{0, 0}, Rat(-1, 4)}}));
}

TEST(ParsePoly, LaurentExponents) {
  EXPECT_EQ(parse_poly("x^-1*y + 1").terms(), T({{{-1, 1}, 1}, {{0, 0}, 1}}));
  EXPECT_EQ(parse_poly("(2x)^-2").terms(), T({{{-2, 0}, Rat(1, 4)}}));
}

TEST(ParsePoly, Errors) {
  EXPECT_EQ(code_of("x*y - x*y"), Errc::kEmptyPolynomial);
  EXPECT_EQ(code_of("x + z"), Errc::kUnknownVariable);
  EXPECT_EQ(code_of("x + * y"), Errc::kParseError);
  EXPECT_EQ(code_of("(x + y)^-1"), Errc::kParseError);
  EXPECT_EQ(code_of("1/0 + x"), Errc::kParseError);
  EXPECT_EQ(code_of("x = y = 1"), Errc::kParseError);
}

TEST(ParsePoly, ErrorOffset) {
  try {
    parse_poly("y^2 + 3 $ x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 8U);
  }
  try {
    parse_poly("y + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownVariable);
    EXPECT_EQ(e.offset(), 4U);
  }
}

BivariatePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(1, 6), e(-2, 5), c(-20, 20), d(1, 9);
  BivariatePoly::TermMap m;
  const int terms = n(rng);
  for (int k = 0; k < terms; ++k) m[{e(rng), e(rng)}] += Rat(c(rng), d(rng));
  BivariatePoly out(m);
  return out.is_zero() ? BivariatePoly::constant(1) : out;
}

TEST(ParsePoly, CanonicalTextRoundTrips) {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_poly(rng);
    EXPECT_EQ(parse_poly(f.to_string()), f) << f.to_string();
  }
}

TEST(ParsePoly, EquationIsDifference) {
  std::mt19937 rng(19);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(rng), b = random_poly(rng);
    if (a == b) continue;
    const std::string as = a.to_string(), bs = b.to_string();
    EXPECT_EQ(parse_poly(as + " = " + bs), parse_poly("(" + as + ") - (" + bs + ")"));
  }
}

TEST(ParseForm, Examples) {
  EXPECT_EQ(parse_form("2*w(1,1) + w(2,1)"), (std::map<LatticePoint, Rat>{{{1, 1}, 2}, {{2, 1}, 1}}));
  EXPECT_TRUE(parse_form("0").empty());
  EXPECT_EQ(parse_form("4*w(1,1)"), (std::map<LatticePoint, Rat>{{{1, 1}, 4}}));
  EXPECT_EQ(parse_form("-1/3 w(2,1) + w(2,1)"), (std::map<LatticePoint, Rat>{{{2, 1}, Rat(2, 3)}}));
  EXPECT_THROW(parse_form("2*v(1,1)"), ParseError);
  EXPECT_THROW(parse_form("w(1,"), ParseError);
}

}  // namespace
}  // namespace tamejumps
