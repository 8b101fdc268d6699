#include <benchmark/benchmark.h>

#include "chaingeo/verify.hpp"

using namespace chaingeo;

namespace {

const char* const kIds[] = {"BERG", "OO", "ERR", "SPAN"};

void run(benchmark::State& state, ExecMode mode) {
  const std::string id = kIds[state.range(0)];
  SampleConfig cfg;
  cfg.m = 2;
  cfg.n = 3;
  const std::size_t trials = 32;
  for (auto _ : state) {
    CheckReport r = run_check(id, cfg, trials, mode);
    if (r.status != CheckStatus::Pass) state.SkipWithError(("check " + id + " did not pass").c_str());
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(id + " threads=" + std::to_string(mode == ExecMode::Parallel ? thread_count() : 1));
  state.SetItemsProcessed(state.iterations() * trials);
}

void BM_Serial(benchmark::State& state) { run(state, ExecMode::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, ExecMode::Parallel); }

void BM_Rank(benchmark::State& state) {
  Sampler smp(HermSpace(3, 5), 1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix a = smp.matrix(dim, dim);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rank)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
