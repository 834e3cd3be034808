#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

#include "agree/combinatorics.hpp"
#include "agree/constructions.hpp"
#include "agree/helly.hpp"
#include "agree/incidence.hpp"
#include "agree/oracle.hpp"
#include "agree/reference.hpp"
#include "agree/solvers.hpp"

using namespace agree;

namespace {

MarkedHypergraph random_min_marked(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> digits(binomial(n, 3));
  for (auto& d : digits) d = static_cast<std::uint32_t>(rng() % 3);
  return helly::clique_from_digits(MarkVariant::MinMarked, 3, n, digits);
}

int jobs_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? omp_get_max_threads() : static_cast<int>(state.range(0));
}

// range(0): 1 for serial, 0 for every available thread.
void BM_CensusExhaustive(benchmark::State& state) {
  const int jobs = jobs_arg(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        helly::census_exhaustive(MarkVariant::TwoExtreme, 3, 5, 4, {.jobs = jobs}));
  state.counters["jobs"] = jobs;
}
BENCHMARK(BM_CensusExhaustive)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_CensusSerialReference(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::census_serial(MarkVariant::TwoExtreme, 3, 4, 3));
}
BENCHMARK(BM_CensusSerialReference)->Unit(benchmark::kMillisecond);

void BM_CensusSmall(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::census_exhaustive(MarkVariant::TwoExtreme, 3, 4, 3));
}
BENCHMARK(BM_CensusSmall)->Unit(benchmark::kMillisecond);

void BM_OracleTight(benchmark::State& state) {
  const auto h = constructions::gen_two_extreme_tight(static_cast<int>(state.range(1)));
  const int jobs = jobs_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::decide(h, jobs));
  state.counters["jobs"] = jobs;
}
BENCHMARK(BM_OracleTight)->Args({1, 5})->Args({0, 5})->Args({1, 6})->Args({0, 6})
    ->Unit(benchmark::kMicrosecond);

void BM_OracleCount(benchmark::State& state) {
  const auto h = constructions::gen_natural(3, 7, MarkVariant::OneExtreme);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count(h));
}
BENCHMARK(BM_OracleCount)->Unit(benchmark::kMicrosecond);

void BM_BruteForceCount(benchmark::State& state) {
  const auto h = constructions::gen_natural(3, 7, MarkVariant::OneExtreme);
  for (auto _ : state) benchmark::DoNotOptimize(reference::brute_force(h));
}
BENCHMARK(BM_BruteForceCount)->Unit(benchmark::kMicrosecond);

void BM_ForbiddenFull(benchmark::State& state) {
  const auto m = incidence::build_matrix(random_min_marked(static_cast<int>(state.range(1)), 5));
  const int jobs = jobs_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(incidence::find_forbidden(m, {.jobs = jobs}));
}
BENCHMARK(BM_ForbiddenFull)->Args({1, 12})->Args({0, 12})->Unit(benchmark::kMicrosecond);

void BM_ForbiddenLocalized(benchmark::State& state) {
  const auto m = incidence::build_matrix(random_min_marked(static_cast<int>(state.range(1)), 5));
  const int jobs = jobs_arg(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(incidence::find_forbidden(m, {.localized = true, .jobs = jobs}));
}
BENCHMARK(BM_ForbiddenLocalized)->Args({1, 12})->Args({0, 12})->Unit(benchmark::kMicrosecond);

void BM_ForbiddenDenseReference(benchmark::State& state) {
  const auto h = random_min_marked(static_cast<int>(state.range(0)), 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::dense_scan(h, incidence::PatternKind::Forbidden));
}
BENCHMARK(BM_ForbiddenDenseReference)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ScanSubsets(benchmark::State& state) {
  const auto h = constructions::gen_one_extreme_cycle(3, 9);
  const int jobs = jobs_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(helly::scan_subsets(h, 8, solvers::Method::Oracle, jobs));
}
BENCHMARK(BM_ScanSubsets)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
