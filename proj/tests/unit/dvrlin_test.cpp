#include "matrices.hpp"
#include "tamejumps/dvrlin.hpp"
#include "tamejumps/error.hpp"
#include "tamejumps/jumps.hpp"
#include "tamejumps/polyparse.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace tamejumps {
namespace {

using testing::laplace_det;
using testing::random_local;

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

TEST(Prolong, Examples) {
  auto w = ValuedSpace::make({"w1", "w2"}, {q(-1, 6), q(-1, 2)}, 6);
  auto w5 = prolong(w, 5);
  ASSERT_EQ(w5.dim(), 10u);
  EXPECT_EQ(w5.labels[3], "pi^3*w1");
  EXPECT_EQ(w5.values[3], q(13, 6));
  for (std::size_t j = 0; j < 2; ++j) {
    for (int i = 0; i < 5; ++i) EXPECT_EQ(w5.values[j * 5 + i], Rat(i) + 5 * w.values[j]);
  }
  auto w1 = prolong(w, 1);
  EXPECT_EQ(w1.values, w.values);
  EXPECT_EQ(w1.labels, w.labels);
  EXPECT_EQ(prolong(ValuedSpace::make({"w"}, {q(0)}, 1), 3).values, (std::vector<Rat>{0, 1, 2}));
}

TEST(Prolong, Errors) {
  auto w = ValuedSpace::make({"w1", "w2"}, {q(-1, 6), q(-1, 2)}, 6);
  EXPECT_EQ(error_of([&] { prolong(w, 4); }), Errc::kNotCoprime);
  EXPECT_EQ(error_of([&] { prolong(w, 3); }), Errc::kNotCoprime);
  EXPECT_EQ(error_of([] { ValuedSpace::make({"w"}, {q(1, 4)}, 6); }), Errc::kNotIntegral);
}

TEST(Prolong, ValuesStayInDistinctClasses) {
  auto w = ValuedSpace::make({"w1", "w2", "w3"}, {q(-1, 6), q(-1, 2), q(-2, 3)}, 6);
  for (std::int64_t d : {1, 5, 7, 11, 13}) {
    auto wd = prolong(w, d);
    for (std::size_t a = 0; a < wd.dim(); ++a) {
      EXPECT_TRUE(is_integer(wd.values[a] * wd.granularity));
      for (std::size_t b = a + 1; b < wd.dim(); ++b) {
        // basis vectors coming from one w_j have values in distinct classes mod d/e * Z
        if (a / static_cast<std::size_t>(d) == b / static_cast<std::size_t>(d)) {
          EXPECT_FALSE(is_integer((wd.values[a] - wd.values[b]) * w.granularity / d));
        }
      }
    }
  }
}

TEST(ValuedSpace, OrthogonalValuation) {
  auto w = ValuedSpace::make({"w1", "w2"}, {q(-1, 6), q(-1, 2)}, 6);
  EXPECT_EQ(w.valuation({2, 1}, 2), ExtRat(q(-1, 2)));
  EXPECT_EQ(w.valuation({4, 0}, 2), ExtRat(q(11, 6)));
  EXPECT_TRUE(w.valuation({0, 0}, 2).is_infinite());
}

TEST(ClassDisjointness, Examples) {
  EXPECT_TRUE(class_disjointness(5, 6));
  EXPECT_FALSE(class_disjointness(4, 6));
  for (std::int64_t e = 1; e <= 12; ++e) EXPECT_TRUE(class_disjointness(1, e));
}

TEST(ClassDisjointness, MatchesGcd) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (std::int64_t e = 1; e <= 30; ++e) EXPECT_EQ(class_disjointness(d, e), std::gcd(d, e) == 1) << d << "," << e;
  }
}

TEST(LatticeExponents, Examples) {
  EXPECT_EQ(lattice_exponents({q(-1, 6), q(-1, 2)}, 5), (std::vector<std::int64_t>{0, 2}));
  EXPECT_EQ(lattice_exponents({q(0), q(0)}, 9), (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(lattice_exponents({q(-1, 2)}, 2), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(lattice_exponents({q(-1, 2), q(-1, 6)}, 7), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(error_of([] { lattice_exponents({q(-1)}, 2); }), Errc::kOutOfRange);
  EXPECT_EQ(error_of([] { lattice_exponents({q(1, 3)}, 2); }), Errc::kOutOfRange);
}

TEST(SnfLocal, Examples) {
  EXPECT_EQ(snf_local(LocalMatrix::diagonal(2, {1, 4})), (ElemDivisors{0, 2}));
  EXPECT_EQ(snf_local(LocalMatrix(2, {{2, 1}, {0, 4}})), (ElemDivisors{0, 3}));
  EXPECT_EQ(snf_local(LocalMatrix(5, {{6, 0}, {0, 10}})), (ElemDivisors{0, 1}));
  EXPECT_EQ(snf_local(LocalMatrix(3, {{9, 3}, {3, 9}})), (ElemDivisors{1, 1}));  // det = 72
}

TEST(SnfLocal, Errors) {
  EXPECT_EQ(error_of([] { snf_local(LocalMatrix(2, {{1, 2}, {2, 4}})); }), Errc::kSingularMatrix);
  EXPECT_EQ(error_of([] { snf_local(LocalMatrix(2, {{1, 2}})); }), Errc::kSingularMatrix);
  EXPECT_EQ(error_of([] { LocalMatrix(2, {{q(1, 2)}}); }), Errc::kNotIntegral);
  EXPECT_EQ(error_of([] { LocalMatrix(4, {{1}}); }), Errc::kInvalidPrime);
}

TEST(RelativeJumpsFromMatrix, Examples) {
  EXPECT_EQ(relative_jumps_from_matrix(LocalMatrix::diagonal(2, {1, 4}), 5), (std::vector<Rat>{0, q(2, 5)}));
  EXPECT_EQ(relative_jumps_from_matrix(LocalMatrix::identity(3, 3), 7), (std::vector<Rat>{0, 0, 0}));
  EXPECT_EQ(relative_jumps_from_matrix(LocalMatrix::diagonal(5, {5}), 2), (std::vector<Rat>{q(1, 2)}));
  EXPECT_EQ(error_of([] { relative_jumps_from_matrix(LocalMatrix::identity(3, 1), 0); }), Errc::kInvalidDegree);
}

TEST(SnfProperties, RandomMatrices) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> size(1, 5);
  const std::uint32_t primes[] = {2, 3, 5};
  int checked = 0;
  while (checked < 300) {
    const std::uint32_t p = primes[checked % 3];
    const auto n = static_cast<std::size_t>(size(rng));
    auto raw = random_local(rng, p, n, 6);
    Rat det = laplace_det(raw);
    if (det == 0) continue;
    ++checked;
    LocalMatrix m(p, raw);
    auto c = snf_local(m);
    ASSERT_EQ(c.size(), n);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_EQ(std::accumulate(c.begin(), c.end(), std::int64_t{0}), val_p_int(det, p));
    EXPECT_EQ(snf_local(m.transpose()), c);

    // random units of the matrix ring
    auto unimodular = [&] {
      for (;;) {
        auto u = random_local(rng, p, n, 2);
        Rat du = laplace_det(u);
        if (du != 0 && val_p_int(du, p) == 0) return LocalMatrix(p, u);
      }
    };
    EXPECT_EQ(snf_local(unimodular() * m * unimodular()), c);

    std::int64_t min_val = std::numeric_limits<std::int64_t>::max();
    for (const auto& row : raw) {
      for (const auto& x : row) {
        if (x != 0) min_val = std::min(min_val, val_p_int(x, p));
      }
    }
    EXPECT_EQ(c.front(), min_val);
  }
}

TEST(SnfProperties, DiagonalConsistency) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> exps;
    std::vector<Rat> diag;
    for (int k = 0; k < 1 + trial % 5; ++k) {
      exps.push_back(e(rng));
      diag.push_back(pow_rat(Rat(3), exps.back()) * (trial % 2 == 0 ? 1 : -2));
    }
    std::sort(exps.begin(), exps.end());
    EXPECT_EQ(snf_local(LocalMatrix::diagonal(3, diag)), exps);
  }
}

TEST(SnfProperties, PipelineConsistency) {
  const auto report = jumps(parse_poly("y^2 = 8*x^6 + x^3 + 2"), 2);
  std::vector<Rat> vcan;
  for (const auto& pv : report.per_point) vcan.push_back(pv.vcan);
  for (std::int64_t d = 1; d <= 50; ++d) {
    if (std::gcd(d, std::int64_t{6}) != 1) continue;
    auto exps = lattice_exponents(vcan, d);
    std::vector<Rat> diag;
    for (auto n : exps) diag.push_back(pow_rat(Rat(2), n));
    auto snf = snf_local(LocalMatrix::diagonal(2, diag));
    EXPECT_EQ(snf, exps);
    auto rel = relative_jumps(report, d);
    std::vector<std::int64_t> scaled;
    for (const auto& r : rel) scaled.push_back(to_int64(numerator(Rat(r * d))));
    EXPECT_EQ(scaled, exps) << d;
  }
}

}  // namespace
}  // namespace tamejumps
