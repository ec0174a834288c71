// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "superslice/catalogue.hpp"
#include "superslice/cohomology.hpp"

using namespace superslice;

namespace {

RationalMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  // force a rank drop so both paths do real elimination
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);
  return m;
}

void BM_RankParallel(benchmark::State& s) {
  auto m = random_matrix(static_cast<std::size_t>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(exact_rank(m));
}
void BM_RankSerial(benchmark::State& s) {
  auto m = random_matrix(static_cast<std::size_t>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(exact_rank_serial(m));
}
BENCHMARK(BM_RankParallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RankSerial)->Arg(16)->Arg(32)->Arg(64);

void BM_JacobiParallel(benchmark::State& s) {
  auto g = build_sl(static_cast<int>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(find_jacobi_violation(g));
}
void BM_JacobiSerial(benchmark::State& s) {
  auto g = build_sl(static_cast<int>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(find_jacobi_violation_serial(g));
}
BENCHMARK(BM_JacobiParallel)->Arg(2)->Arg(3);
BENCHMARK(BM_JacobiSerial)->Arg(2)->Arg(3);

GradedComplex slice_complex(int cutoff) {
  auto g = build_sl(2, 1);
  auto t = sl2_triple_for(g, *g.principal());
  static const SliceChart c = gauge_fix(g, t, dynkin_grading(g, t));
  return build_slice_ce_complex(c, cutoff);
}

void BM_CohomologyParallel(benchmark::State& s) {
  auto cx = slice_complex(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(compute_cohomology(cx, Execution::Parallel));
}
void BM_CohomologySerial(benchmark::State& s) {
  auto cx = slice_complex(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(compute_cohomology(cx, Execution::Serial));
}
BENCHMARK(BM_CohomologyParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CohomologySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
