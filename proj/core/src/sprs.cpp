#include "qcoex/sprs.hpp"

#include <cmath>
#include <string>

#include "qcoex/errors.hpp"

namespace qcoex {

double antistokes_scale(FrequencyShift magnitude, Temperature temperature) {
  if (magnitude.ghz() < 0.0) throw DomainError("antistokes_scale expects a non-negative shift magnitude");
  return std::exp(-constants::planck * magnitude.hz() / (constants::boltzmann * temperature.kelvin()));
}

Length co_interaction_length(Attenuation pump, Attenuation quantum, Length length) {
  const double L = length.km();
  const double delta = pump.nepers_per_km() - quantum.nepers_per_km();
  const double x = delta * L;
  const double decay = std::exp(-quantum.nepers_per_km() * L);
  if (std::abs(x) < co_series_threshold) {
    // (1 - e^{-x}) / delta = L (1 - x/2 + x^2/6 - ...)
    return Length::from_km(decay * L * (1.0 - x / 2.0 + x * x / 6.0));
  }
  return Length::from_km(decay * -std::expm1(-x) / delta);
}

Length counter_interaction_length(Attenuation pump, Attenuation quantum, Length length) {
  const double sum = pump.nepers_per_km() + quantum.nepers_per_km();
  if (sum == 0.0) return length;
  return Length::from_km(-std::expm1(-sum * length.km()) / sum);
}

EfficiencyLookup sprs_efficiency(const FiberSpec& fiber, Frequency pump, Frequency quantum) {
  const auto& profile = fiber.sprs();
  const auto pump_wavelength = to_wavelength(pump);
  const auto shift = quantum - pump;
  if (profile.covers(pump_wavelength, shift)) return {profile.at(pump_wavelength, shift), false};

  const bool side_missing = shift.is_stokes() ? !profile.has_stokes_side() : !profile.has_anti_stokes_side();
  if (side_missing && shift.ghz() != 0.0 && profile.covers(pump_wavelength, -shift)) {
    const double scale = antistokes_scale(shift.magnitude(), fiber.temperature());
    const double mirrored = profile.at(pump_wavelength, -shift).per_km_ghz();
    const double value = shift.is_stokes() ? mirrored / scale : mirrored * scale;
    return {RamanEfficiency::from_per_km_ghz(value), true};
  }
  // Re-query to produce the range error with its message.
  return {profile.at(pump_wavelength, shift), false};
}

Power sprs_slice_power(const PumpSlice& slice, Direction geometry, const QuantumChannel& quantum,
                       const FiberSpec& fiber, bool* synthesized) {
  const auto lookup = sprs_efficiency(fiber, slice.center, quantum.center);
  if (synthesized != nullptr) *synthesized = *synthesized || lookup.synthesized;
  const auto alpha_p = fiber.attenuation().at(slice.center);
  const auto alpha_q = fiber.attenuation().at(quantum.center);
  const auto length = geometry == Direction::co ? co_interaction_length(alpha_p, alpha_q, fiber.length())
                                                : counter_interaction_length(alpha_p, alpha_q, fiber.length());
  return Power::from_watts(slice.power.watts() * lookup.efficiency.per_km_ghz() * quantum.filter.ghz() *
                           length.km());
}

namespace {

Power channel_power(const PumpChannel& pump, Direction geometry, const QuantumChannel& quantum,
                    const FiberSpec& fiber, Bandwidth ase_step, bool* synthesized) {
  Power total = Power::zero();
  for (const auto& slice : discretize(pump, ase_step)) {
    total += sprs_slice_power(slice, geometry, quantum, fiber, synthesized);
  }
  return total;
}

}  // namespace

Power sprs_power_co(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                    Bandwidth ase_step) {
  return channel_power(pump, Direction::co, quantum, fiber, ase_step, nullptr);
}

Power sprs_power_counter(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                         Bandwidth ase_step) {
  return channel_power(pump, Direction::counter, quantum, fiber, ase_step, nullptr);
}

SprsTotals sprs_total(std::span<const PumpChannel> plan, const QuantumChannel& quantum, const FiberSpec& fiber,
                      Bandwidth ase_step) {
  SprsTotals totals;
  for (const auto& pump : plan) {
    try {
      const auto power = channel_power(pump, pump.direction, quantum, fiber, ase_step, &totals.synthesized_anti_stokes);
      (pump.direction == Direction::co ? totals.co : totals.counter) += power;
    } catch (const RangeError& e) {
      throw RangeError("channel '" + pump.label + "': " + e.what());
    }
  }
  return totals;
}

}  // namespace qcoex
