// Microbenchmarks for the hot paths of the solver library: the film-phase
// amplitude root, the heat integral, the standard-phase gap solve, exact
// shell enumeration, and the dense operator-algebra kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "bcsreps/constants.hpp"
#include "bcsreps/fock.hpp"
#include "bcsreps/gap.hpp"
#include "bcsreps/thermo.hpp"

namespace gap = bcsreps::gap;
namespace thermo = bcsreps::thermo;
namespace fock = bcsreps::fock;

namespace {

void BM_eta(benchmark::State& state) {
  const double tau = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap::eta(tau));
  }
}
BENCHMARK(BM_eta)->Arg(50)->Arg(500)->Arg(990);

void BM_phi(benchmark::State& state) {
  const double eta = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermo::phi(eta));
  }
}
BENCHMARK(BM_phi)->Arg(500)->Arg(999);

void BM_condensation_function(benchmark::State& state) {
  const double tau = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermo::condensation_function(tau));
  }
}
BENCHMARK(BM_condensation_function)->Arg(100)->Arg(900);

void BM_bcs_gap_at(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap::bcs_gap_at(T, 0.2, 300.0));
  }
}
BENCHMARK(BM_bcs_gap_at)->Arg(5)->Arg(30);

void BM_lattice_count(benchmark::State& state) {
  const double L = static_cast<double>(state.range(0));
  double count = 0.0;
  for (auto _ : state) {
    count = gap::nu_count_lattice(1.0, 0.05, L, L * 1.1, L * 0.9).count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["modes"] = count;
}
BENCHMARK(BM_lattice_count)->Arg(50)->Arg(150)->Arg(400);

void BM_exp_iQ(benchmark::State& state) {
  const int pairs = static_cast<int>(state.range(0));
  const fock::OperatorSet ops = fock::build_mode_operators(pairs);
  fock::AlphaFamily family;
  for (int p = 0; p < pairs; ++p) {
    family.alpha.push_back(0.3 + 0.1 * p);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::exp_iQ(ops, family));
  }
}
BENCHMARK(BM_exp_iQ)->Arg(2)->Arg(3)->Arg(4);

void BM_verify_ring(benchmark::State& state) {
  const int pairs = static_cast<int>(state.range(0));
  const fock::OperatorSet ops = fock::build_mode_operators(pairs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::verify_ring(ops).max_abs_deviation);
  }
}
BENCHMARK(BM_verify_ring)->Arg(2)->Arg(3);

void BM_thermal_average(benchmark::State& state) {
  const int pairs = static_cast<int>(state.range(0));
  const fock::OperatorSet ops = fock::build_mode_operators(pairs);
  const std::vector<double> xi(static_cast<std::size_t>(pairs), 0.25);
  const Eigen::MatrixXcd h = fock::build_h02(ops, xi, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::thermal_anomalous_average(h, ops, 1.7, 0));
  }
}
BENCHMARK(BM_thermal_average)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
