// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "eip/property.hpp"

using namespace eip;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<Scalar>(rng() % f.p()));
  return m;
}

const PrimeField kField(32003);

void BM_RankParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(kField, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}

void BM_RankSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(kField, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(serial::rank(m));
  state.SetComplexityN(state.range(0));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(kField, n, n, 2), b = random_matrix(kField, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(kField, n, n, 2), b = random_matrix(kField, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(a, b));
}

// EIP-style step ranks of P(0) in B(3, 4) over every point of P^3(F_7).
const PrimeField kSmall(7);
const BeilinsonRep kRep = projective(kSmall, 3, 4, 0);
const std::vector<ProjPoint> kPoints = projective_points(kSmall, 4);

std::size_t step_ranks(const ProjPoint& a) {
  std::size_t s = 0;
  for (const auto& step : alpha_operator(kRep, a)) s += rank(step);
  return s;
}

void BM_PointScanParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(map_points<std::size_t>(kPoints, step_ranks, jobs));
}

void BM_PointScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::map_points<std::size_t>(kPoints, step_ranks));
}

}  // namespace

BENCHMARK(BM_RankParallel)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointScanSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
