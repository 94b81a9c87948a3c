// Serial reference vs OpenMP kernels on the corpus varieties.

#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "gaussfano/kernels.hpp"

using namespace gaussfano;

namespace {

std::vector<LineRep> lines_of(const std::string& family) {
  std::vector<LineRep> out;
  for (const auto& inst : corpus::theorem_instances())
    if (inst.family == family) out.push_back(inst.line);
  return out;
}

void BM_FanoChartsSerial(benchmark::State& state) {
  const Ideal x = corpus::symmetroid();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fano_all_charts_serial(x));
}

void BM_FanoChartsParallel(benchmark::State& state) {
  const Ideal x = corpus::symmetroid();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fano_all_charts(x));
  state.counters["threads"] = kernels::max_threads();
}

void BM_TheoremChecksSerial(benchmark::State& state) {
  const Ideal x = corpus::cone();
  const auto lines = lines_of("cone ruling");
  for (auto _ : state) benchmark::DoNotOptimize(kernels::theorem_checks_serial(x, lines, 2));
}

void BM_TheoremChecksParallel(benchmark::State& state) {
  const Ideal x = corpus::cone();
  const auto lines = lines_of("cone ruling");
  for (auto _ : state) benchmark::DoNotOptimize(kernels::theorem_checks(x, lines, 2));
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_FanoChartsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FanoChartsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TheoremChecksSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TheoremChecksParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
