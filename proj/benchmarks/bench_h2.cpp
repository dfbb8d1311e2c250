#include <benchmark/benchmark.h>

#include <liesym/cohomology.hpp>
#include <liesym/lie_algebra.hpp>
#include <liesym/registry.hpp>

using namespace liesym;

namespace {

void bench_h2_group(benchmark::State& state, const char* invocation) {
  const ValidatedAlgebra L = registry::build(invocation).algebra;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h2(L).dim_H2);
  }
}

void bench_jacobi(benchmark::State& state, const char* invocation) {
  const ValidatedAlgebra L = registry::build(invocation).algebra;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_check(L.algebra()).ok);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_h2_group, galilei3, "galilei(3)");
BENCHMARK_CAPTURE(bench_h2_group, so6, "so(6)");
BENCHMARK_CAPTURE(bench_h2_group, abelian20, "abelian(20)");
BENCHMARK_CAPTURE(bench_h2_group, abelian30, "abelian(30)");
BENCHMARK_CAPTURE(bench_h2_group, heisenberg10, "heisenberg(10)");
BENCHMARK_CAPTURE(bench_h2_group, heisenberg14, "heisenberg(14)");
BENCHMARK_CAPTURE(bench_jacobi, poincare13, "poincare(1,3)");
BENCHMARK_CAPTURE(bench_jacobi, abelian30, "abelian(30)");

BENCHMARK_MAIN();
