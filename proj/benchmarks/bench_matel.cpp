// Microbenchmarks for the matrix-element routes and the variational
// pipeline. Run the gkosc_bench binary directly; these are not registered
// with ctest.

#include <benchmark/benchmark.h>

#include "gkosc/gk_basis.hpp"
#include "gkosc/matrix_elements.hpp"
#include "gkosc/oracle.hpp"
#include "gkosc/variational.hpp"

namespace {

const gkosc::BasisParams kParams(0.5, 1.0);

void BM_MatelClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gkosc::MatElemQuery q{kParams, n, n, 1.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkosc::matel_gk(q));
  }
}
BENCHMARK(BM_MatelClosed)->Arg(2)->Arg(8)->Arg(32);

void BM_MatelTermwise(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gkosc::MatElemQuery q{kParams, n, n, 1.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkosc::matel_termwise(q));
  }
}
BENCHMARK(BM_MatelTermwise)->Arg(2)->Arg(8);

void BM_MatelQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gkosc::MatElemQuery q{kParams, n, n, 1.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkosc::matel_quadrature(q));
  }
}
BENCHMARK(BM_MatelQuadrature)->Arg(2)->Arg(8)->Arg(32);

void BM_AssembleHamiltonian(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gkosc::assemble_hamiltonian(kParams, 1.0, 0.5, size));
  }
}
BENCHMARK(BM_AssembleHamiltonian)->Arg(8)->Arg(32);

void BM_Spectrum(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkosc::spectrum(kParams, 1.0, 0.5, size));
  }
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(16)->Arg(32);

void BM_GaussLaguerreRule(benchmark::State& state) {
  const int npoints = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkosc::gauss_laguerre_rule(0.75, npoints));
  }
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
