// Serial reference against the OpenMP campaign and mining kernels.

#include <benchmark/benchmark.h>

#include "rainbow/campaign.hpp"

using namespace rainbow;

namespace {

CampaignConfig main_theorem_campaign() {
  CampaignConfig c;
  c.theorem = TheoremId::MAIN_COMPLETE;
  c.params = default_params(c.theorem);
  c.generator = default_generator(c.theorem, c.params, 30, 1);
  c.trials = 16;
  c.budget = SearchBudget::nodes(10'000'000);
  return c;
}

MiningConfig exhaustive_mining() {
  MiningConfig m;
  m.theorem = TheoremId::RT_VERTEX;
  m.n_min = 3;
  m.n_max = 5;
  m.palette_max = 3;
  return m;
}

void BM_CampaignSerial(benchmark::State& state) {
  const auto c = main_theorem_campaign();
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign_serial(c));
}

void BM_CampaignParallel(benchmark::State& state) {
  auto c = main_theorem_campaign();
  c.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(c));
}

void BM_MiningSerial(benchmark::State& state) {
  const auto m = exhaustive_mining();
  for (auto _ : state) benchmark::DoNotOptimize(mine_counterexamples_serial(m));
}

void BM_MiningParallel(benchmark::State& state) {
  auto m = exhaustive_mining();
  m.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mine_counterexamples(m));
}

}  // namespace

BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MiningSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MiningParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
