#include <benchmark/benchmark.h>

#include <random>

#include "cutpath/bench.hpp"
#include "cutpath/generators.hpp"
#include "cutpath/idpc.hpp"
#include "cutpath/ipc.hpp"
#include "cutpath/kernels.hpp"

using namespace cutpath;

namespace {

std::vector<Configuration> random_points(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Configuration> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return pts;
}

void BM_KnnSerial(benchmark::State& state) {
  const auto pts = random_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nearest_neighbors_serial(pts, 8));
}

void BM_KnnParallel(benchmark::State& state) {
  const auto pts = random_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nearest_neighbors(pts, 8));
}

void BM_LabelSerial(benchmark::State& state) {
  const Scene scene = bundled_scene("clutter", true);
  const Roadmap r = prm(scene, state.range(0), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::label_edges_serial(scene, r));
}

void BM_LabelParallel(benchmark::State& state) {
  const Scene scene = bundled_scene("clutter", true);
  const Roadmap r = prm(scene, state.range(0), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::label_edges(scene, r));
}

const std::vector<bench::Instance>& infeasible_instances() {
  static const auto instances = [] {
    bench::BenchConfig cfg;
    cfg.scenes = {"passage", "rooms", "zigzag", "clutter"};
    cfg.n_edges = {2000};
    cfg.infeasible_variants = {true};
    cfg.seeds = {1, 2};
    return bench::generate_instances(cfg);
  }();
  return instances;
}

void BM_Algorithm(benchmark::State& state, const char* name) {
  const auto& instances = infeasible_instances();
  for (auto _ : state)
    for (const auto& inst : instances) benchmark::DoNotOptimize(bench::run_algorithm(name, inst, 1));
}

}  // namespace

BENCHMARK(BM_KnnSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KnnParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelSerial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelParallel)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, ipc, "ipc")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, idpc, "idpc")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
