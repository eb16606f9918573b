#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcoex/channels.hpp"
#include "qcoex/errors.hpp"
#include "qcoex/fiber.hpp"
#include "qcoex/fwm.hpp"
#include "qcoex/leakage.hpp"
#include "qcoex/quadrature.hpp"
#include "qcoex/sprs.hpp"
#include "qcoex/units.hpp"

namespace qcoex {

inline constexpr int scenario_schema_version = 1;

/// Which FWM efficiency feeds the budget. `both` budgets the exact form and
/// reports the averaged one alongside it.
enum class FwmMode { exact, averaged, both };

enum class SweepAxis {
  length,             // fiber length, km
  quantum_frequency,  // quantum channel center, THz
  classical_power,    // uniform offset applied to every classical channel, dB
};

std::string_view to_string(FwmMode mode);
std::string_view to_string(SweepAxis axis);
FwmMode parse_fwm_mode(std::string_view text);
SweepAxis parse_sweep_axis(std::string_view text);

struct Sweep {
  SweepAxis axis;
  double start;
  double stop;
  double step;

  /// start, start + step, ... up to stop (inclusive within rounding).
  std::vector<double> points() const;
};

struct Scenario {
  std::string name;
  std::string description;
  std::vector<std::string> notes;
  FiberSpec fiber;
  std::vector<PumpChannel> plan;
  QuantumChannel quantum;
  std::vector<LeakageSource> leakage;
  PowerDensity background = PowerDensity::zero();
  FwmMode fwm_mode = FwmMode::exact;
  Bandwidth sprs_step = default_ase_step;
  std::optional<Sweep> sweep;
  QuadratureConfig oracle;
};

/// Checks that every wavelength and Raman shift the budget will query is
/// covered by the fiber profiles, plus the structural invariants (quantum
/// center distinct from every channel center, ordered sweep). Returns every
/// issue found; empty means valid.
std::vector<Issue> validate(const Scenario& scenario);

/// Scenario with the sweep axis set to `value` (and the sweep removed).
Scenario at_sweep_point(const Scenario& scenario, double value);

enum class Mechanism { sprs_co, sprs_counter, rayleigh_ase, co_leakage, fwm, background };

inline constexpr std::array<Mechanism, 6> all_mechanisms = {Mechanism::sprs_co,    Mechanism::sprs_counter,
                                                            Mechanism::rayleigh_ase, Mechanism::co_leakage,
                                                            Mechanism::fwm,        Mechanism::background};

std::string_view to_string(Mechanism mechanism);

struct BudgetEntry {
  std::string name;
  PowerDensity psd = PowerDensity::zero();
  Power power = Power::zero();
  double photons_per_s = 0.0;
  bool active = false;  // the geometry produces this mechanism at all
};

struct FwmProductReport {
  FwmProduct product;
  Power exact;
  Power averaged;
};

struct NoiseBudget {
  std::array<BudgetEntry, all_mechanisms.size()> entries;
  /// Averaged-efficiency FWM when the scenario asks for both modes. Not part of total.
  std::optional<BudgetEntry> fwm_alternate;
  BudgetEntry total;
  bool synthesized_anti_stokes = false;
  std::vector<FwmProductReport> fwm_products;

  const BudgetEntry& operator[](Mechanism m) const { return entries[static_cast<std::size_t>(m)]; }
  BudgetEntry& operator[](Mechanism m) { return entries[static_cast<std::size_t>(m)]; }
};

/// psd * B / (h f).
double psd_to_photon_rate(PowerDensity psd, Frequency frequency, Bandwidth bandwidth);

/// Throws ValidationError listing every issue from validate().
NoiseBudget run_budget(const Scenario& scenario);

/// Every entry (and the total) multiplied by 10^(-half_width/10) and
/// 10^(+half_width/10). Throws DomainError for a negative half width.
std::pair<NoiseBudget, NoiseBudget> model_uncertainty_band(const NoiseBudget& budget, double half_width_db = 1.0);

struct SweepPoint {
  double axis;
  std::optional<NoiseBudget> budget;
  std::vector<Issue> errors;  // set when budget is empty
};

/// One budget per sweep point, in axis order. Points run concurrently on up
/// to `threads` workers (0 picks the hardware concurrency). Throws
/// DomainError when the scenario has no sweep.
std::vector<SweepPoint> run_sweep(const Scenario& scenario, unsigned threads = 0);

}  // namespace qcoex
