#include <benchmark/benchmark.h>

#include "coxsds/orientation.hpp"
#include "coxsds/tutte.hpp"

namespace {

using namespace coxsds;

void BM_TutteComplete(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte(g));
}
BENCHMARK(BM_TutteComplete)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_TutteCircle(benchmark::State& state) {
  const Graph g = Graph::circle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte(g));
}
BENCHMARK(BM_TutteCircle)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_AcyclicOrientations(benchmark::State& state) {
  const Graph g = Graph::circle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acyclic_orientations(g));
}
BENCHMARK(BM_AcyclicOrientations)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_KappaClasses(benchmark::State& state) {
  const Graph g = Graph::circle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_classes(g));
}
BENCHMARK(BM_KappaClasses)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
