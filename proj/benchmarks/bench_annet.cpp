#include <benchmark/benchmark.h>

#include "annet/circuit.hpp"
#include "annet/csan.hpp"
#include "annet/gadget.hpp"
#include "annet/gol.hpp"
#include "annet/network.hpp"
#include "annet/problems.hpp"

using namespace annet;

// One synchronous step of the Game of Life on an n-cycle.
static void BM_StepGameOfLife(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network net = csan_to_network(build_game_of_life(cycle_graph(n)));
  Configuration x(n, 0), y(n, 0);
  for (std::size_t v = 0; v < n; v += 3) x[v] = 1;
  for (auto _ : state) {
    step_into(net, x, y);
    std::swap(x, y);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_StepGameOfLife)->RangeMultiplier(4)->Range(64, 16384);

// Full attractor decomposition of rule 90 on an N-ring.
static void BM_AttractorsRule90(benchmark::State& state) {
  const Network net = csan_to_network(build_rule90_ring(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(attractors(net, default_state_cap(), 1));
}
BENCHMARK(BM_AttractorsRule90)->DenseRange(8, 16, 4);

static void BM_AnalyzeOrbitPrimeRotations(benchmark::State& state) {
  const auto pr = prime_rotations(static_cast<std::size_t>(state.range(0)));
  const Network net = gnetwork_to_network(pr.gn);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_orbit(net, pr.marked, std::uint64_t{1} << 32));
}
BENCHMARK(BM_AnalyzeOrbitPrimeRotations)->DenseRange(6, 10, 2);

static void BM_VerifyCertificate(benchmark::State& state) {
  const CoherentCertificate& cert = build_certificate();
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, 1));
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMillisecond);

static void BM_CompileNorPairToGol(benchmark::State& state) {
  const GNetwork gn = nor_pair_network();
  for (auto _ : state) benchmark::DoNotOptimize(compile_to_gol(gn, 1));
}
BENCHMARK(BM_CompileNorPairToGol)->Unit(benchmark::kMillisecond);

static void BM_DoubleRail(benchmark::State& state) {
  const Circuit c = random_closed_circuit(3, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(double_rail(c));
}
BENCHMARK(BM_DoubleRail)->DenseRange(2, 6, 2);

static void BM_BinaryPrediction(benchmark::State& state) {
  const auto pr = prime_rotations(8);
  const PredInstance inst{gnetwork_to_network(pr.gn), 0, pr.marked, 1, 6000000000ull, TimeEncoding::Binary};
  for (auto _ : state) benchmark::DoNotOptimize(b_pred(inst));
}
BENCHMARK(BM_BinaryPrediction);

static void BM_BruteForceSat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Cnf f{n, {}};
  for (std::size_t i = 1; i <= n; ++i) f.clauses.push_back({static_cast<int>(i), -static_cast<int>(i % n + 1)});
  f.clauses.push_back({-1});
  f.clauses.push_back({static_cast<int>(n)});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(f));
}
BENCHMARK(BM_BruteForceSat)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
