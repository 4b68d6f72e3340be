#include <array>
#include <vector>

#include <benchmark/benchmark.h>

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dunkl3d.hpp"
#include "dunkl/dynamics.hpp"
#include "dunkl/oracle/checks.hpp"
#include "dunkl/oracle/operators.hpp"
#include "dunkl/oracle/propagator.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl;

namespace {

const dynamics::TrajectoryPoint kPoint{0.7, 1.2, 0.35, 0.5, 1.4, 0.3, 1.0};

dynamics::Scenario breathing(double t_end) {
  return {dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0}, dynamics::FrequencyForm::omega, 1.0, t_end};
}

void BM_Laguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::laguerre(n, 0.7, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(16)->Arg(64);

void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::jacobi(n, 0.2, 1.3, x));
    x += 1e-12;
  }
}
BENCHMARK(BM_Jacobi)->Arg(2)->Arg(16)->Arg(64);

void BM_Wavefunction1D(benchmark::State& state) {
  const Dunkl1DModel model(0.5);
  const StateSpec1D spec{static_cast<int>(state.range(0)), Parity::odd};
  double x = 0.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavefunction_1d(model, spec, x, kPoint));
    x += 1e-9;
  }
}
BENCHMARK(BM_Wavefunction1D)->Arg(0)->Arg(10);

void BM_Wavefunction3D(benchmark::State& state) {
  const Dunkl3DModel model({0.3, 0.5, 0.2});
  const StateSpec3D spec{2, HalfInteger::from_twice(3), HalfInteger::from_twice(3),
                         {Parity::even, Parity::odd, Parity::odd}};
  double r = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavefunction_3d(model, spec, r, 1.1, 0.4, kPoint));
    r += 1e-9;
  }
}
BENCHMARK(BM_Wavefunction3D);

void BM_SolvePinney(benchmark::State& state) {
  const auto scenario = breathing(static_cast<double>(state.range(0)));
  const auto options = dynamics::default_pinney_options(scenario);
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::solve_ermakov_pinney(scenario, options));
}
BENCHMARK(BM_SolvePinney)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CrankNicolsonStep(benchmark::State& state) {
  const Dunkl1DModel model(0.5);
  const auto scenario = breathing(1.0);
  const auto grid = oracle::SpatialGrid1D(12.0, static_cast<std::size_t>(state.range(0)));
  const auto initial = oracle::sample_state(model, {0, Parity::even}, grid, kPoint);
  for (auto _ : state) {
    oracle::crank_nicolson_propagate(initial, model, Parity::even, scenario, 1e-3, 10, 10,
                                     [](std::size_t, double, const oracle::DiscreteField& f) {
                                       benchmark::DoNotOptimize(f.values.data());
                                     });
  }
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_CrankNicolsonStep)->Arg(1200)->Arg(4800);

void BM_ParityHamiltonian(benchmark::State& state) {
  const Dunkl1DModel model(0.5);
  const auto grid = oracle::SpatialGrid1D(12.0, static_cast<std::size_t>(state.range(0)));
  const auto field = oracle::sample_state(model, {2, Parity::odd}, grid, kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::apply_parity_hamiltonian(field, model, Parity::odd, 1.0, 1.0));
}
BENCHMARK(BM_ParityHamiltonian)->Arg(1200)->Arg(4800);

void BM_Gram3D(benchmark::State& state) {
  const Dunkl3DModel model({0.3, 0.5, 0.2});
  const std::vector<StateSpec3D> states{
      {0, HalfInteger::integer(0), HalfInteger::integer(0), {Parity::even, Parity::even, Parity::even}},
      {1, HalfInteger::integer(1), HalfInteger::integer(1), {Parity::even, Parity::even, Parity::even}},
      {0, HalfInteger::from_twice(1), HalfInteger::from_twice(3), {Parity::even, Parity::odd, Parity::odd}},
  };
  for (auto _ : state) benchmark::DoNotOptimize(oracle::gram_matrix_3d(model, states, kPoint));
}
BENCHMARK(BM_Gram3D)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
