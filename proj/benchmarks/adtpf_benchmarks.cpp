#include <benchmark/benchmark.h>

#include <random>

#include "adtpf/adtpf.hpp"

using namespace adtpf;

namespace {

Aadt instance(std::uint32_t nodes, Shape shape) {
  GenConfig cfg;
  cfg.node_count = nodes;
  cfg.seed = 42;
  cfg.shape = shape;
  return random_aadt(cfg);
}

void BM_BottomUp(benchmark::State& state) {
  const Aadt a = instance(static_cast<std::uint32_t>(state.range(0)), Shape::Tree);
  for (auto _ : state) benchmark::DoNotOptimize(bu_pareto(a));
}
BENCHMARK(BM_BottomUp)->Arg(25)->Arg(100)->Arg(325);

void BM_BddCompile(benchmark::State& state) {
  const Aadt a = instance(static_cast<std::uint32_t>(state.range(0)), Shape::Dag);
  for (auto _ : state) {
    BddManager mgr(default_defense_first_order(a.adt()));
    benchmark::DoNotOptimize(compile(mgr, a.adt()));
  }
}
BENCHMARK(BM_BddCompile)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BddPareto(benchmark::State& state) {
  const Aadt a = instance(static_cast<std::uint32_t>(state.range(0)), Shape::Dag);
  BddManager mgr(default_defense_first_order(a.adt()));
  const BddRef root = compile(mgr, a.adt());
  for (auto _ : state) benchmark::DoNotOptimize(bdd_bu(a, mgr, root));
}
BENCHMARK(BM_BddPareto)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Naive(benchmark::State& state) {
  const Aadt a = instance(static_cast<std::uint32_t>(state.range(0)), Shape::Tree);
  EnumerationOptions opts;
  opts.force = true;
  for (auto _ : state) benchmark::DoNotOptimize(naive_pareto(a, opts));
}
BENCHMARK(BM_Naive)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ParetoMin(benchmark::State& state) {
  const DomainPair doms{Domain(DomainKind::MinCost), Domain(DomainKind::MinCost)};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(0, 1000);
  std::vector<ValuePair> points(static_cast<std::size_t>(state.range(0)));
  for (auto& p : points) p = {static_cast<Value>(dist(rng)), static_cast<Value>(dist(rng))};
  for (auto _ : state) benchmark::DoNotOptimize(pareto_min(points, doms));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParetoMin)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
