#include <benchmark/benchmark.h>

#include <random>

#include "hyperpolar/model.hpp"
#include "hyperpolar/pipeline.hpp"
#include "hyperpolar/polar.hpp"
#include "hyperpolar/transform.hpp"

namespace {

hyperpolar::ComplexSeries make_signal(std::size_t n) {
  hyperpolar::ModelSpec spec;
  spec.fs = static_cast<double>(n - 1) / 0.4;
  return hyperpolar::generate(spec).z;
}

void BM_QftJ(benchmark::State& state) {
  const auto z = make_signal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpolar::qft_j(z));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QftJ)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_QhtJ(benchmark::State& state) {
  const auto z = make_signal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpolar::qht_j(z));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QhtJ)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_Decompose(benchmark::State& state) {
  hyperpolar::ModelSpec spec;
  spec.fs = static_cast<double>(state.range(0)) / 0.4;
  const auto model = hyperpolar::generate(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpolar::decompose(model.truth.s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_FullPipeline(benchmark::State& state) {
  hyperpolar::ModelSpec spec;
  const auto model = hyperpolar::generate(spec);
  hyperpolar::AnalysisConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hyperpolar::run_pipeline(model.z, config, &model.truth));
  }
}
BENCHMARK(BM_FullPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
