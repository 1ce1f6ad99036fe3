#include <benchmark/benchmark.h>

#include "guesswork/engine.hpp"
#include "guesswork/random.hpp"
#include "guesswork/simulate.hpp"

using namespace guesswork;

namespace {

Ensemble sweep_ensemble(int n) {
  Rng rng(871);
  return random_uniform_qubit_ensemble(n, rng);
}

EngineConfig sweep_config(Exec exec) {
  EngineConfig config;
  config.exec = exec;
  return config;
}

void BM_ScoreSweepSerial(benchmark::State& state) {
  Ensemble e = sweep_ensemble(static_cast<int>(state.range(0)));
  EngineConfig config = sweep_config(Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(score_sweep_serial(e, config));
}

void BM_ScoreSweepParallel(benchmark::State& state) {
  Ensemble e = sweep_ensemble(static_cast<int>(state.range(0)));
  EngineConfig config = sweep_config(Exec::parallel);
  for (auto _ : state) benchmark::DoNotOptimize(score_sweep_parallel(e, config));
}

struct Game {
  Ensemble ensemble;
  RankingPovm povm;
};

Game game_setup() {
  Rng rng(872);
  Ensemble e = random_uniform_qubit_ensemble(3, rng);
  Permutation sigma = find_dominant_permutation(e).value();
  RankingPovm povm = optimal_povm(e, sigma);
  return {std::move(e), std::move(povm)};
}

void BM_SimulateSerial(benchmark::State& state) {
  Game game = game_setup();
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_game(game.ensemble, game.povm, state.range(0), 99, Exec::serial));
}

void BM_SimulateParallel(benchmark::State& state) {
  Game game = game_setup();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        simulate_game(game.ensemble, game.povm, state.range(0), 99, Exec::parallel));
}

}  // namespace

BENCHMARK(BM_ScoreSweepSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreSweepParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
