#include "qcoex/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace qcoex {
namespace {

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

std::string channel_field(std::size_t index) { return "classical[" + std::to_string(index) + "]"; }

bool sprs_reachable(const FiberSpec& fiber, Frequency pump, Frequency quantum) {
  const auto& profile = fiber.sprs();
  const auto wavelength = to_wavelength(pump);
  const auto shift = quantum - pump;
  if (profile.covers(wavelength, shift)) return true;
  const bool side_missing = shift.is_stokes() ? !profile.has_stokes_side() : !profile.has_anti_stokes_side();
  return side_missing && shift.ghz() != 0.0 && profile.covers(wavelength, -shift);
}

// Coverage and structure of one evaluation point (sweep ignored).
std::vector<Issue> validate_point(const Scenario& s) {
  std::vector<Issue> issues;
  const auto& attenuation = s.fiber.attenuation();
  const auto q_wavelength = to_wavelength(s.quantum.center);
  if (!attenuation.covers(q_wavelength)) {
    issues.push_back({"quantum.frequency_thz", "quantum wavelength " + fmt(q_wavelength.nm()) + " nm (" +
                                                   fmt(s.quantum.center.thz()) + " THz) outside " +
                                                   attenuation.describe_range()});
  }
  for (std::size_t n = 0; n < s.plan.size(); ++n) {
    const auto& channel = s.plan[n];
    const auto field = channel_field(n);
    if (channel.is_cw() && std::abs(channel.center.thz() - s.quantum.center.thz()) < 1e-9) {
      issues.push_back({field, "channel '" + channel.label + "' coincides with the quantum channel center"});
    }
    for (const auto& slice : discretize(channel, s.sprs_step)) {
      const auto wavelength = to_wavelength(slice.center);
      if (!attenuation.covers(wavelength)) {
        issues.push_back({field, "channel '" + channel.label + "' wavelength " + fmt(wavelength.nm()) +
                                     " nm outside " + attenuation.describe_range()});
        break;
      }
      if (!sprs_reachable(s.fiber, slice.center, s.quantum.center)) {
        issues.push_back({field, "channel '" + channel.label + "' at " + fmt(wavelength.nm()) +
                                     " nm with shift " + fmt((s.quantum.center - slice.center).ghz()) +
                                     " GHz outside " + s.fiber.sprs().describe_range()});
        break;
      }
    }
  }
  return issues;
}

std::vector<Issue> validate_sweep(const Sweep& sweep) {
  std::vector<Issue> issues;
  if (!std::isfinite(sweep.start) || !std::isfinite(sweep.stop) || !std::isfinite(sweep.step)) {
    issues.push_back({"sweep", "start, stop and step must be finite"});
    return issues;
  }
  if (!(sweep.step > 0.0)) issues.push_back({"sweep.step", "must be > 0, got " + fmt(sweep.step)});
  if (sweep.stop < sweep.start) {
    issues.push_back({"sweep.stop", "must be >= start (" + fmt(sweep.start) + "), got " + fmt(sweep.stop)});
  }
  if (sweep.axis != SweepAxis::classical_power && !(sweep.start > 0.0)) {
    issues.push_back({"sweep.start", "must be > 0 for axis " + std::string(to_string(sweep.axis))});
  }
  return issues;
}

BudgetEntry make_entry(std::string name, PowerDensity psd, Power power, const QuantumChannel& q, bool active) {
  return BudgetEntry{std::move(name), psd, power, psd_to_photon_rate(psd, q.center, q.filter), active};
}

BudgetEntry from_power(std::string name, Power power, const QuantumChannel& q, bool active) {
  return make_entry(std::move(name), power / q.filter, power, q, active);
}

BudgetEntry from_psd(std::string name, PowerDensity psd, const QuantumChannel& q, bool active) {
  return make_entry(std::move(name), psd, psd * q.filter, q, active);
}

BudgetEntry scaled_entry(const BudgetEntry& entry, double factor) {
  BudgetEntry out = entry;
  out.psd = entry.psd * factor;
  out.power = entry.power * factor;
  out.photons_per_s = entry.photons_per_s * factor;
  return out;
}

NoiseBudget scaled_budget(const NoiseBudget& budget, double factor) {
  NoiseBudget out = budget;
  for (auto& entry : out.entries) entry = scaled_entry(entry, factor);
  if (out.fwm_alternate) out.fwm_alternate = scaled_entry(*out.fwm_alternate, factor);
  out.total = scaled_entry(budget.total, factor);
  for (auto& report : out.fwm_products) {
    report.exact = report.exact * factor;
    report.averaged = report.averaged * factor;
  }
  return out;
}

}  // namespace

std::string_view to_string(FwmMode mode) {
  switch (mode) {
    case FwmMode::exact:
      return "exact";
    case FwmMode::averaged:
      return "averaged";
    case FwmMode::both:
      return "both";
  }
  return {};
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::length:
      return "length";
    case SweepAxis::quantum_frequency:
      return "quantum-frequency";
    case SweepAxis::classical_power:
      return "classical-power";
  }
  return {};
}

FwmMode parse_fwm_mode(std::string_view text) {
  for (auto mode : {FwmMode::exact, FwmMode::averaged, FwmMode::both}) {
    if (to_string(mode) == text) return mode;
  }
  throw ParseError("fwm mode must be exact, averaged or both, got \"" + std::string(text) + "\"");
}

SweepAxis parse_sweep_axis(std::string_view text) {
  for (auto axis : {SweepAxis::length, SweepAxis::quantum_frequency, SweepAxis::classical_power}) {
    if (to_string(axis) == text) return axis;
  }
  throw ParseError("sweep axis must be length, quantum-frequency or classical-power, got \"" + std::string(text) +
                   "\"");
}

std::string_view to_string(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::sprs_co:
      return "sprs_co";
    case Mechanism::sprs_counter:
      return "sprs_counter";
    case Mechanism::rayleigh_ase:
      return "rayleigh_ase";
    case Mechanism::co_leakage:
      return "co_leakage";
    case Mechanism::fwm:
      return "fwm";
    case Mechanism::background:
      return "background";
  }
  return {};
}

std::vector<double> Sweep::points() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) values.push_back(start + static_cast<double>(n) * step);
  return values;
}

Scenario at_sweep_point(const Scenario& scenario, double value) {
  Scenario out = scenario;
  out.sweep.reset();
  if (!scenario.sweep) return out;
  switch (scenario.sweep->axis) {
    case SweepAxis::length:
      out.fiber = scenario.fiber.with_length(Length::from_km(value));
      break;
    case SweepAxis::quantum_frequency:
      out.quantum.center = Frequency::from_thz(value);
      break;
    case SweepAxis::classical_power: {
      const double factor = db_to_linear(value);
      for (auto& channel : out.plan) channel = channel.scaled(factor);
      break;
    }
  }
  return out;
}

std::vector<Issue> validate(const Scenario& scenario) {
  auto issues = validate_point(scenario);
  if (!scenario.sweep) return issues;
  auto sweep_issues = validate_sweep(*scenario.sweep);
  if (!sweep_issues.empty()) {
    issues.insert(issues.end(), sweep_issues.begin(), sweep_issues.end());
    return issues;
  }
  constexpr std::size_t max_reported_points = 5;
  std::size_t failing = 0;
  for (double value : scenario.sweep->points()) {
    std::vector<Issue> point_issues;
    try {
      point_issues = validate_point(at_sweep_point(scenario, value));
    } catch (const Error& e) {
      point_issues.push_back({"sweep", e.what()});
    }
    if (point_issues.empty()) continue;
    if (++failing > max_reported_points) continue;
    for (auto& issue : point_issues) {
      issues.push_back({"sweep[" + fmt(value) + "]." + issue.field, issue.message});
    }
  }
  if (failing > max_reported_points) {
    issues.push_back({"sweep", std::to_string(failing - max_reported_points) + " more sweep points fail"});
  }
  return issues;
}

double psd_to_photon_rate(PowerDensity psd, Frequency frequency, Bandwidth bandwidth) {
  return psd.w_per_hz() * bandwidth.hz() / (constants::planck * frequency.hz());
}

NoiseBudget run_budget(const Scenario& s) {
  if (auto issues = validate_point(s); !issues.empty()) throw ValidationError(std::move(issues));

  const auto& q = s.quantum;
  NoiseBudget budget;
  for (auto m : all_mechanisms) budget[m].name = std::string(to_string(m));

  const bool any_co = std::any_of(s.plan.begin(), s.plan.end(), [](const PumpChannel& c) {
    return c.direction == Direction::co;
  });
  const bool any_counter = std::any_of(s.plan.begin(), s.plan.end(), [](const PumpChannel& c) {
    return c.direction == Direction::counter;
  });
  const bool any_co_tone = std::any_of(s.plan.begin(), s.plan.end(), [](const PumpChannel& c) {
    return c.direction == Direction::co && c.is_cw();
  });

  const auto sprs = sprs_total(s.plan, q, s.fiber, s.sprs_step);
  budget[Mechanism::sprs_co] = from_power("sprs_co", sprs.co, q, any_co);
  budget[Mechanism::sprs_counter] = from_power("sprs_counter", sprs.counter, q, any_counter);
  budget.synthesized_anti_stokes = sprs.synthesized_anti_stokes;

  Power fwm_exact = Power::zero();
  Power fwm_averaged = Power::zero();
  for (const auto& product : enumerate_products(s.plan, q, s.fiber.beta2())) {
    const auto terms = fwm_terms(product, s.plan, s.fiber);
    FwmProductReport report{product, fwm_power(terms, EfficiencyMode::exact),
                            fwm_power(terms, EfficiencyMode::averaged)};
    fwm_exact += report.exact;
    fwm_averaged += report.averaged;
    budget.fwm_products.push_back(report);
  }
  const bool budget_exact = s.fwm_mode != FwmMode::averaged;
  budget[Mechanism::fwm] = from_power("fwm", budget_exact ? fwm_exact : fwm_averaged, q, any_co_tone);
  if (s.fwm_mode == FwmMode::both) budget.fwm_alternate = from_power("fwm_averaged", fwm_averaged, q, any_co_tone);

  PowerDensity rayleigh = PowerDensity::zero();
  PowerDensity co_leak = PowerDensity::zero();
  bool any_counter_leak = false;
  bool any_co_leak = false;
  for (const auto& source : s.leakage) {
    if (source.direction == Direction::counter) {
      rayleigh += rayleigh_backscatter(source, q, s.fiber);
      any_counter_leak = true;
    } else {
      co_leak += copropagated_leakage(source, q, s.fiber);
      any_co_leak = true;
    }
  }
  budget[Mechanism::rayleigh_ase] = from_psd("rayleigh_ase", rayleigh, q, any_counter_leak);
  budget[Mechanism::co_leakage] = from_psd("co_leakage", co_leak, q, any_co_leak);
  budget[Mechanism::background] = from_psd("background", s.background, q, true);

  PowerDensity psd = PowerDensity::zero();
  Power power = Power::zero();
  double photons = 0.0;
  for (const auto& entry : budget.entries) {
    psd += entry.psd;
    power += entry.power;
    photons += entry.photons_per_s;
  }
  budget.total = BudgetEntry{"total", psd, power, photons, true};
  return budget;
}

std::pair<NoiseBudget, NoiseBudget> model_uncertainty_band(const NoiseBudget& budget, double half_width_db) {
  if (!(half_width_db >= 0.0)) throw DomainError("uncertainty half width must be >= 0 dB");
  return {scaled_budget(budget, db_to_linear(-half_width_db)), scaled_budget(budget, db_to_linear(half_width_db))};
}

std::vector<SweepPoint> run_sweep(const Scenario& scenario, unsigned threads) {
  if (!scenario.sweep) throw DomainError("scenario '" + scenario.name + "' has no sweep");
  if (auto issues = validate_sweep(*scenario.sweep); !issues.empty()) throw ValidationError(std::move(issues));

  const auto values = scenario.sweep->points();
  std::vector<SweepPoint> results(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t n = next++; n < values.size(); n = next++) {
      auto& point = results[n];
      point.axis = values[n];
      try {
        point.budget = run_budget(at_sweep_point(scenario, values[n]));
      } catch (const ValidationError& e) {
        point.errors = e.issues();
      } catch (const Error& e) {
        point.errors.push_back({"sweep", e.what()});
      }
    }
  };

  unsigned count = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  count = static_cast<unsigned>(std::min<std::size_t>(count, values.size()));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace qcoex
