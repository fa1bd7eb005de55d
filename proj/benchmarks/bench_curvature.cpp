#include <benchmark/benchmark.h>

#include "liecurv/connection_curvature.hpp"
#include "liecurv/oracles.hpp"

namespace {

using namespace liecurv;

void BM_MatrixExp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MatrixElement u = random_element(Seed{1}, n);
  u *= static_cast<double>(state.range(1)) / u.norm();
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exp(u));
}
BENCHMARK(BM_MatrixExp)->ArgsProduct({{2, 4, 8, 16}, {1, 10}});

void BM_MatrixExpComplex(benchmark::State& state) {
  const MatrixElement u = random_element(Seed{2}, static_cast<int>(state.range(0)), Field::kComplex);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exp(u));
}
BENCHMARK(BM_MatrixExpComplex)->Arg(4)->Arg(8);

void BM_Nabla(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CartanStructure s = gl_real(n);
  const MatrixElement u = random_element(Seed{3}, n);
  const MatrixElement v = random_element(Seed{4}, n);
  for (auto _ : state) benchmark::DoNotOptimize(nabla(s, u, v));
}
BENCHMARK(BM_Nabla)->Arg(3)->Arg(8)->Arg(16);

void BM_QuarticClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CartanStructure s = gl_real(n);
  const MatrixElement u = random_element(Seed{5}, n);
  const MatrixElement v = random_element(Seed{6}, n);
  for (auto _ : state) benchmark::DoNotOptimize(quartic(s, u, v));
}
BENCHMARK(BM_QuarticClosedForm)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

void BM_QuarticOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CartanStructure s = gl_real(n);
  const OrthonormalBasis basis = OrthonormalBasis::standard(s);
  const MatrixElement u = random_element(Seed{5}, n);
  const MatrixElement v = random_element(Seed{6}, n);
  for (auto _ : state) benchmark::DoNotOptimize(quartic_from_definition(s, u, v, basis));
}
BENCHMARK(BM_QuarticOracle)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

void BM_SectionalComplex(benchmark::State& state) {
  const CartanStructure s = gl_complex(static_cast<int>(state.range(0)));
  SampleStream stream(Seed{7});
  const MatrixElement u = random_in_algebra(s, stream);
  const MatrixElement v = random_in_algebra(s, stream);
  for (auto _ : state) benchmark::DoNotOptimize(sectional(s, u, v));
}
BENCHMARK(BM_SectionalComplex)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
