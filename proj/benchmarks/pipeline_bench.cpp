#include "tamejumps/dvrlin.hpp"
#include "tamejumps/finite_field.hpp"
#include "tamejumps/jumps.hpp"
#include "tamejumps/polyparse.hpp"
#include "tamejumps/regularity.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tamejumps;

const char* kGolden = "y^2 = 8*x^6 + x^3 + 2";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_poly(kGolden));
}
BENCHMARK(BM_Parse);

void BM_Subdivide(benchmark::State& state) {
  const auto f = parse_poly(kGolden);
  for (auto _ : state) benchmark::DoNotOptimize(subdivide(f, 2));
}
BENCHMARK(BM_Subdivide);

void BM_Regularity(benchmark::State& state) {
  const auto f = parse_poly(kGolden);
  for (auto _ : state) benchmark::DoNotOptimize(is_delta_v_regular(f, 2));
}
BENCHMARK(BM_Regularity);

void BM_Jumps(benchmark::State& state) {
  const auto f = parse_poly(kGolden);
  for (auto _ : state) benchmark::DoNotOptimize(jumps(f, 2));
}
BENCHMARK(BM_Jumps);

// y^2 = x^n + p for growing n: polygon size grows linearly.
void BM_JumpsHyperelliptic(benchmark::State& state) {
  const auto n = state.range(0);
  const auto f = parse_poly("y^2 = x^" + std::to_string(n) + " + 5");
  for (auto _ : state) benchmark::DoNotOptimize(jumps(f, 5));
  state.SetComplexityN(n);
}
BENCHMARK(BM_JumpsHyperelliptic)->DenseRange(3, 15, 4)->Complexity();

void BM_Factor(benchmark::State& state) {
  const FiniteField& k = FiniteField::prime_field(3);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(state.range(0)) + 1, 1);
  coeffs.front() = 2;
  const FFPoly a = FFPoly::from_ints(k, coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(ff_factor(a));
}
BENCHMARK(BM_Factor)->RangeMultiplier(2)->Range(4, 32);

void BM_TorusZero(benchmark::State& state) {
  const FiniteField& k = FiniteField::prime_field(3);
  FFBiPoly a(k), b(k);
  a.add_term({0, 2}, 1);
  a.add_term({3, 0}, 2);
  a.add_term({1, 1}, 1);
  a.add_term({0, 0}, 1);
  b.add_term({2, 1}, 1);
  b.add_term({0, 3}, 1);
  b.add_term({1, 0}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(has_common_torus_zero({a, b}));
}
BENCHMARK(BM_TorusZero);

void BM_SnfLocal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>((i + 1) * (j + 2) + (i == j ? 7 : 0)));
  }
  const LocalMatrix lm(2, m);
  for (auto _ : state) benchmark::DoNotOptimize(snf_local(lm));
}
BENCHMARK(BM_SnfLocal)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
