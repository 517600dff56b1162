#include <benchmark/benchmark.h>

#include "afd/circulant3.hpp"
#include "afd/embed.hpp"
#include "afd/oracle.hpp"
#include "afd/roots.hpp"

using namespace afd;

namespace {

StochasticMatrix example_a() {
  RealMatrix a(3, 3);
  a << 27, 9, 9, 18, 11, 16, 18, 16, 11;
  return StochasticMatrix::from(RealMatrix(a / 45.0));
}

RealMatrix generator(int n) {
  RealMatrix q = RealMatrix::Constant(n, n, 0.1);
  for (int i = 0; i < n; ++i) q(i, (i + 1) % n) += 0.3;
  for (int i = 0; i < n; ++i) q(i, i) = 0.0, q(i, i) = -q.row(i).sum();
  return q;
}

}  // namespace

static void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix a = matrix_exp(generator(n)).cast<Complex>();
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a));
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(6)->Arg(12);

static void BM_StochasticRoots(benchmark::State& state) {
  const StochasticMatrix a = example_a();
  const int c = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stochastic_roots(a, c));
}
BENCHMARK(BM_StochasticRoots)->Arg(3)->Arg(12)->Arg(201);

static void BM_ExpLog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RealMatrix q = generator(n);
  for (auto _ : state) {
    const RealMatrix a = matrix_exp(q);
    benchmark::DoNotOptimize(matrix_log_principal(a.cast<Complex>()));
  }
}
BENCHMARK(BM_ExpLog)->Arg(3)->Arg(8);

static void BM_CirculantClassify(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const CirculantParams p(0.2 * i, -3.0 + 0.6 * j);
        if (circulant_is_nonneg(p)) benchmark::DoNotOptimize(circulant_classify(p));
      }
    }
  }
}
BENCHMARK(BM_CirculantClassify);

static void BM_TwoByTwoOracle(benchmark::State& state) {
  Eigen::MatrixXd a(2, 2);
  a << 0.4, 0.6, 0.8, 0.2;
  oracle::GridSpec grid;
  grid.s_steps = grid.t_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_2x2_roots(a, 3, grid));
}
BENCHMARK(BM_TwoByTwoOracle)->Arg(100)->Arg(400);
BENCHMARK_MAIN();
