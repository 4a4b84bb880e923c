#include <benchmark/benchmark.h>

#include <numbers>

#include "qcm/channels.hpp"
#include "qcm/collisions.hpp"
#include "qcm/lindblad.hpp"
#include "qcm/matrix_functions.hpp"
#include "qcm/semigroup.hpp"

namespace {

const qcm::CollisionSpec& swap_spec() {
  static const qcm::CollisionSpec spec(qcm::Interaction::PartialSwap, 0.6, 1.0, qcm::QubitState(0.1, -0.2, 0.3));
  return spec;
}

void BM_OracleMap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::oracle_map(swap_spec()));
  }
}
BENCHMARK(BM_OracleMap);

void BM_InducedMap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::induced_map(swap_spec()));
  }
}
BENCHMARK(BM_InducedMap);

void BM_SimulateDiscrete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::simulate_discrete(swap_spec(), qcm::QubitState(0.5, 0, 0), n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateDiscrete)->Arg(10)->Arg(100)->Arg(1000);

void BM_Power(benchmark::State& state) {
  const qcm::TransferMatrix e = qcm::induced_map(swap_spec());
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::power(e, n));
  }
}
BENCHMARK(BM_Power)->Arg(8)->Arg(16)->Arg(17)->Arg(1024);

void BM_Expm(benchmark::State& state) {
  const qcm::Mat4 g = qcm::generator_analytic(qcm::homogenization_rates(swap_spec())).matrix();
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::expm(t * g));
  }
}
BENCHMARK(BM_Expm)->Arg(1)->Arg(100);

void BM_GeneratorNumeric(benchmark::State& state) {
  const qcm::TransferMatrix e = qcm::induced_map(swap_spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::generator_numeric(e, 1.0));
  }
}
BENCHMARK(BM_GeneratorNumeric);

void BM_ChoiVerdict(benchmark::State& state) {
  const qcm::TransferMatrix e = qcm::induced_map(swap_spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::is_completely_positive(e));
  }
}
BENCHMARK(BM_ChoiVerdict);

// RK4 against the closed-form exponential at the same horizon.
void BM_IntegrateMasterEquation(benchmark::State& state) {
  const qcm::LindbladForm l =
      qcm::lindblad_from_generator(qcm::generator_analytic(qcm::homogenization_rates(swap_spec())));
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::integrate_master_equation(l, qcm::QubitState(0.5, 0, 0), 10.0, dt));
  }
}
BENCHMARK(BM_IntegrateMasterEquation)->Arg(20)->Arg(100);

void BM_ContinuousMap(benchmark::State& state) {
  const qcm::HomogenizationRates r = qcm::homogenization_rates(swap_spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcm::apply(qcm::continuous_map(r, 10.0), qcm::QubitState(0.5, 0, 0)));
  }
}
BENCHMARK(BM_ContinuousMap);

}  // namespace
BENCHMARK_MAIN();
