#include <benchmark/benchmark.h>

#include "modelkit/saturation.hpp"

using namespace modelkit;

static void BM_TransferClosure(benchmark::State& state) {
  Lattice lat = Lattice::grid(2, 3);
  ArrowSet gen(lat);
  gen.add(Arrow{lat.at(0, 0), lat.at(2, 3)});
  gen.add(Arrow{lat.at(1, 0), lat.at(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(transfer_closure_set(gen));
}
BENCHMARK(BM_TransferClosure);

static void BM_EnumerateTransferSystems(benchmark::State& state) {
  Lattice lat = Lattice::grid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_transfer_systems(lat, {64, true}));
}
BENCHMARK(BM_EnumerateTransferSystems)->Arg(1)->Arg(2)->Arg(3);

static void BM_EnumerateModelStructures(benchmark::State& state) {
  Lattice lat = Lattice::grid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_model_structures(lat, {64, true}));
}
BENCHMARK(BM_EnumerateModelStructures)->Arg(1)->Arg(2)->Arg(3);

static void BM_RightLocalize(benchmark::State& state) {
  Lattice lat = Lattice::grid(2, 3);
  ArrowSet w(lat), af(lat);
  for (auto a : {Arrow{lat.at(0, 2), lat.at(0, 3)}, Arrow{lat.at(1, 1), lat.at(1, 2)},
                 Arrow{lat.at(1, 2), lat.at(1, 3)}, Arrow{lat.at(1, 1), lat.at(1, 3)},
                 Arrow{lat.at(2, 1), lat.at(2, 2)}})
    w.add(a);
  af.add(Arrow{lat.at(0, 2), lat.at(0, 3)});
  af.add(Arrow{lat.at(1, 2), lat.at(1, 3)});
  ModelStructure ms(lat, w, af);
  Arrow f{lat.at(1, 0), lat.at(1, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(right_localize(ms, f));
}
BENCHMARK(BM_RightLocalize);

static void BM_ZigzagRealize(benchmark::State& state) {
  Lattice lat = Lattice::grid(2, 1);
  ModelStructure ms(lat, ArrowSet::all(lat), ArrowSet::all(lat));
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_realize(ms));
}
BENCHMARK(BM_ZigzagRealize);

static void BM_ReachabilityGraph(benchmark::State& state) {
  Lattice lat = Lattice::grid(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reachability_graph(lat));
}
BENCHMARK(BM_ReachabilityGraph);

BENCHMARK_MAIN();
