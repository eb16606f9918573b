#include <benchmark/benchmark.h>

#include <vector>

#include "qcoex/oracle.hpp"
#include "qcoex/scenario.hpp"

using namespace qcoex;

namespace {

FiberSpec bench_fiber(double length_km) {
  std::vector<RawSprsRow> rows;
  for (double pump : {1500.0, 1600.0})
    for (double shift : {-30000.0, -13200.0, 0.0, 13200.0, 30000.0}) {
      rows.push_back({pump, shift, shift < 0 ? 2e-11 : shift == 0 ? 0.0 : 2e-12});
    }
  FiberConstants c;
  c.beta2 = Dispersion::from_ps2_per_km(-21.1);
  c.gamma = Nonlinearity::from_per_w_km(1.3);
  return FiberSpec(Length::from_km(length_km),
                   AttenuationProfile::flat(Attenuation::from_db_per_km(0.2), Wavelength::from_nm(1260),
                                            Wavelength::from_nm(1700)),
                   SprsEfficiencyProfile::from_rows(rows, EfficiencyUnit::per_km_ghz), c);
}

Scenario bench_scenario() {
  Scenario s{.fiber = bench_fiber(25.0), .quantum = {Frequency::from_thz(194.7), Bandwidth::from_ghz(10.0)}};
  for (double off : {-100.0, -50.0, 50.0, 100.0}) {
    s.plan.push_back(cw_channel("t", Frequency::from_thz(194.7 + off * 1e-3), Power::from_dbm(6.0), Direction::co));
  }
  s.plan.push_back(ase_channel("ase", Frequency::from_thz(191.0), PowerDensity::from_dbm_per_ghz(-16.0),
                               Bandwidth::from_ghz(4000.0), Direction::counter));
  s.leakage = {{"skirt", PowerDensity::from_dbm_per_ghz(-60.0), Direction::counter}};
  return s;
}

const QuantumChannel quantum{Frequency::from_thz(194.7), Bandwidth::from_ghz(10.0)};
const auto pump = cw_channel("p", Frequency::from_thz(195.5), Power::from_dbm(0.0), Direction::co);

void SprsClosedForm(benchmark::State& state) {
  const auto fiber = bench_fiber(50.0);
  for (auto _ : state) benchmark::DoNotOptimize(sprs_power_co(pump, quantum, fiber));
}
BENCHMARK(SprsClosedForm);

void SprsOracle(benchmark::State& state) {
  const auto fiber = bench_fiber(50.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::integrate_sprs(pump, quantum, fiber, Direction::co));
}
BENCHMARK(SprsOracle);

void FwmClosedForm(benchmark::State& state) {
  const auto p = Power::from_dbm(6.0);
  const FwmTerms terms{3, Nonlinearity::from_per_w_km(1.3), p, p, p, Attenuation::from_db_per_km(0.2),
                       Length::from_km(50.0), PhaseMismatch::from_rad_per_km(static_cast<double>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(fwm_power(terms, EfficiencyMode::exact));
}
BENCHMARK(FwmClosedForm)->Arg(0)->Arg(2)->Arg(20);

void FwmOracle(benchmark::State& state) {
  const auto p = Power::from_dbm(6.0);
  const auto a = Attenuation::from_db_per_km(0.2);
  const oracle::FwmField field{3, Nonlinearity::from_per_w_km(1.3), p, p, p, a, a, a, a, Length::from_km(50.0),
                               PhaseMismatch::from_rad_per_km(static_cast<double>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::integrate_fwm_field(field));
}
BENCHMARK(FwmOracle)->Arg(0)->Arg(2)->Arg(20);

void Budget(benchmark::State& state) {
  const auto s = bench_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(run_budget(s));
}
BENCHMARK(Budget);

void LengthSweep(benchmark::State& state) {
  auto s = bench_scenario();
  s.sweep = Sweep{SweepAxis::length, 0.5, 100.0, 0.5};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(s, threads));
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(LengthSweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
