#include <benchmark/benchmark.h>

#include <hf/exactmath.hpp>
#include <hf/gradedroot.hpp>
#include <hf/plumbing.hpp>
#include <hf/seifert.hpp>
#include <hf/tau.hpp>

using namespace hf;

namespace {

SeifertData bk(long a1, long a2, long a3) {
  return brieskorn(Int(a1), Int(a2), Int(a3));
}

void BM_DedekindNaive(benchmark::State& state) {
  Int h(static_cast<long>(state.range(0)) / 3), k(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(h - 1, k));
}

void BM_DedekindChain(benchmark::State& state) {
  Int h(static_cast<long>(state.range(0)) / 3), k(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_euclid(h - 1, k));
}

void BM_TauSequence(benchmark::State& state) {
  SeifertData s = bk(2, 7, 14 * state.range(0) + 5);
  for (auto _ : state) benchmark::DoNotOptimize(tau_sequence(s));
}

void BM_Determinant(benchmark::State& state) {
  SeifertData s = bk(2, 7, 14 * state.range(0) + 5);
  IntMatrix m = intersection_matrix(star_plumbing(s));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}

void BM_FullPipeline(benchmark::State& state) {
  SeifertData s = bk(2, 7, 14 * state.range(0) + 5);
  for (auto _ : state) benchmark::DoNotOptimize(hf_plus(s));
}

}  // namespace

BENCHMARK(BM_DedekindNaive)->Arg(101)->Arg(1009)->Arg(10007);
BENCHMARK(BM_DedekindChain)->Arg(101)->Arg(1009)->Arg(10007);
BENCHMARK(BM_TauSequence)->Arg(1)->Arg(4)->Arg(16);
BENCHMARK(BM_Determinant)->Arg(1)->Arg(4)->Arg(16);
BENCHMARK(BM_FullPipeline)->Arg(1)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
