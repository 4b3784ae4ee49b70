#include <benchmark/benchmark.h>

#include <vector>

#include "sympflag/coset.hpp"
#include "sympflag/liealg.hpp"
#include "sympflag/quatmat.hpp"
#include "sympflag/random.hpp"
#include "sympflag/s4lb.hpp"

using namespace sympflag;

static void BM_QuatMatrixExp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  auto m = random_skew_adjoint(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(exp(m));
}
BENCHMARK(BM_QuatMatrixExp)->Arg(2)->Arg(4)->Arg(8);

static void BM_LftApply(benchmark::State& state) {
  const auto j = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  auto g = random_group_element(rng, 2 * j, 0.5);
  coset::GrassmannPoint x{random_matrix(rng, j, j, 0.5)};
  for (auto _ : state) benchmark::DoNotOptimize(coset::lft_apply(g, x));
}
BENCHMARK(BM_LftApply)->Arg(1)->Arg(2)->Arg(4);

static void BM_CommutationTable(benchmark::State& state) {
  const liealg::Dims dims{1, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(liealg::verify_commutation_table(dims, 2));
}
BENCHMARK(BM_CommutationTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EinsteinCheck(benchmark::State& state) {
  Rng rng(3);
  std::normal_distribution<double> g(0.0, 0.6);
  std::vector<s4lb::Point4> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = s4lb::Point4(g(rng), g(rng), g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(s4lb::einstein_check(pts));
}
BENCHMARK(BM_EinsteinCheck)->Arg(1)->Arg(20);

BENCHMARK_MAIN();
