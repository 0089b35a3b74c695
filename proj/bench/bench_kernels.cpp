#include <benchmark/benchmark.h>

#include "ppsim/eh_learn.hpp"
#include "ppsim/fss.hpp"
#include "ppsim/protocol.hpp"

using namespace ppsim;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "openmp" : "serial"); }

void BM_run_pp(benchmark::State& s) {
  const int N = 36;
  const auto C0 = ground_state(hopping_hamiltonian(flat_weights(N)));
  PPOptions o;
  o.t_max = 40;
  o.edge = left_edge(N, 2);
  o.bulks.push_back({"n10", centered_interval(N, 10), infinite_chain_segment(10)});
  o.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(run_pp(C0, parabolic_weights(N), o));
  label(s);
}

void BM_scaling_sweep(benchmark::State& s) {
  ScalingOptions o;
  o.bulks = {10};
  for (auto _ : s) benchmark::DoNotOptimize(scaling_sweep({20, 28, 36, 44}, o, exec_of(s)));
  label(s);
}

void BM_fit_scaling(benchmark::State& s) {
  const auto curves = fss::synthetic_family({8, 12, 16, 20}, 0.4, 0.9, 51, 0.6384, 0.125, 0.01, 1);
  const fss::Grid g{0.55, 0.75, -0.05, 0.35, 21, 21};
  for (auto _ : s) benchmark::DoNotOptimize(fss::fit_scaling(curves, g, 1.0, {}, exec_of(s)));
  label(s);
}

void BM_eh_series(benchmark::State& s) {
  const int N = 36;
  const auto C0 = thermal_state(hopping_hamiltonian(flat_weights(N)), 0.15);
  const auto H = hopping_hamiltonian(parabolic_weights(N));
  std::vector<double> t;
  for (int k = 0; k < 200; ++k) t.push_back(0.1 * k);
  for (auto _ : s) benchmark::DoNotOptimize(eh_series(C0, H, centered_interval(N, 28), t, exec_of(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_run_pp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scaling_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fit_scaling)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eh_series)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
