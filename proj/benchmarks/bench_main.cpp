#include <benchmark/benchmark.h>

#include "fmop/cgk.hpp"
#include "fmop/quiver.hpp"

namespace {

using namespace fmop;

void BM_Rref(benchmark::State& state) {
  FieldConfig f(5);
  int n = static_cast<int>(state.range(0));
  Mat m(n, n, f);
  unsigned seed = 12345;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      seed = seed * 1664525u + 1013904223u;
      m.at(i, j) = static_cast<int>(seed % 5);
    }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateSubspaces(benchmark::State& state) {
  FieldConfig f(2);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_subspaces(n, f, std::nullopt, std::nullopt,
                        [&](const Subspace&) {
                          ++count;
                          return true;
                        });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(4)->Arg(5);

void BM_CountAll(benchmark::State& state) {
  ConormalContext ctx(FieldConfig(2), 1);
  FinSet base({1, 2, 3});
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  for (auto _ : state) benchmark::DoNotOptimize(count_all(rep));
}
BENCHMARK(BM_CountAll);

void BM_CgkCount(benchmark::State& state) {
  ConormalContext ctx(FieldConfig(2), 1);
  FinSet base({1, 2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(cgk_count(base, ctx));
}
BENCHMARK(BM_CgkCount);

}  // namespace

BENCHMARK_MAIN();
