// OpenMP kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include "gograph/algos.hpp"
#include "gograph/baselines.hpp"
#include "gograph/engine.hpp"
#include "gograph/generators.hpp"
#include "gograph/gograph.hpp"
#include "gograph/metric.hpp"
#include "gograph/oracle.hpp"

using namespace gograph;

namespace {

const Graph& er_graph() {
  static const Graph g = [] {
    GeneratorParams p;
    p.model = GraphModel::er;
    p.n = 20000;
    p.param = 100000;
    p.seed = 1;
    return build_graph(generate(p));
  }();
  return g;
}

const Graph& tiny_graph() {
  static const Graph g = [] {
    GeneratorParams p;
    p.model = GraphModel::er;
    p.n = 8;
    p.param = 16;
    p.seed = 3;
    return build_graph(generate(p));
  }();
  return g;
}

EngineConfig sync_config() {
  EngineConfig c;
  c.mode = Mode::sync;
  c.timing = false;
  return c;
}

void BM_MetricParallel(benchmark::State& state) {
  const Ordering o = random_order(er_graph(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_m(er_graph(), o).m_value);
}
void BM_MetricSerial(benchmark::State& state) {
  const Ordering o = random_order(er_graph(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_m_serial(er_graph(), o).m_value);
}

void BM_PageRankSyncParallel(benchmark::State& state) {
  const AlgorithmSpec spec = pagerank_spec();
  for (auto _ : state) benchmark::DoNotOptimize(run_sync(er_graph(), spec, sync_config()).total_sweeps);
}
void BM_PageRankSyncSerial(benchmark::State& state) {
  const AlgorithmSpec spec = pagerank_spec();
  for (auto _ : state) benchmark::DoNotOptimize(run_sync_serial(er_graph(), spec, sync_config()).total_sweeps);
}

void BM_ReorderParallel(benchmark::State& state) {
  GoGraphConfig cfg;
  cfg.parallel = true;
  for (auto _ : state) benchmark::DoNotOptimize(reorder(er_graph(), cfg).size());
}
void BM_ReorderSerial(benchmark::State& state) {
  GoGraphConfig cfg;
  cfg.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(reorder(er_graph(), cfg).size());
}

void BM_BruteForceParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_best_order(tiny_graph()).max_m);
}
void BM_BruteForceSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_best_order_serial(tiny_graph()).max_m);
}

void BM_MinRoundsParallel(benchmark::State& state) {
  const AlgorithmSpec spec = sssp_spec(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_rounds(tiny_graph(), spec, sync_config()).rounds);
}
void BM_MinRoundsSerial(benchmark::State& state) {
  const AlgorithmSpec spec = sssp_spec(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_min_rounds_serial(tiny_graph(), spec, sync_config()).rounds);
}

}  // namespace

BENCHMARK(BM_MetricParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MetricSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRankSyncParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRankSyncSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReorderParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReorderSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinRoundsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinRoundsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
