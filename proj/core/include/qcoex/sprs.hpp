#pragma once

// Spontaneous Raman scattering noise at the quantum channel.
//
// A pump slice of power P at frequency f_p scatters into the quantum filter
// (center f_q, width B) with efficiency rho(lambda_p, f_q - f_p) per km and
// per GHz. Integrating along a uniform span of length L gives
//
//   co:      P rho B exp(-a_q L) (1 - exp(-(a_p - a_q) L)) / (a_p - a_q)
//   counter: P rho B (1 - exp(-(a_p + a_q) L)) / (a_p + a_q)
//
// with a_p, a_q the power attenuation (nepers/km) at pump and quantum
// wavelengths.

#include <span>

#include "qcoex/channels.hpp"
#include "qcoex/fiber.hpp"
#include "qcoex/units.hpp"

namespace qcoex {

inline const Bandwidth default_ase_step = Bandwidth::from_ghz(100.0);

/// Below this |a_p - a_q| L the co-propagating kernel uses its series.
inline constexpr double co_series_threshold = 1e-6;

/// exp(-h |shift| / (k_B T)): anti-Stokes / Stokes efficiency ratio at equal |shift|.
double antistokes_scale(FrequencyShift magnitude, Temperature temperature);

/// Effective interaction length of the co-propagating geometry,
/// integral over z of exp(-a_p z) exp(-a_q (L - z)).
Length co_interaction_length(Attenuation pump, Attenuation quantum, Length length);
/// Counter-propagating geometry: integral over z of exp(-(a_p + a_q) z).
Length counter_interaction_length(Attenuation pump, Attenuation quantum, Length length);

struct EfficiencyLookup {
  RamanEfficiency efficiency;
  bool synthesized;  // mirrored from the other side via antistokes_scale
};

/// Efficiency for scattering from pump into quantum. When the profile does
/// not cover the requested side at all, it is derived from the tabulated
/// opposite side with antistokes_scale at the fiber temperature.
EfficiencyLookup sprs_efficiency(const FiberSpec& fiber, Frequency pump, Frequency quantum);

/// Noise from one pump slice.
Power sprs_slice_power(const PumpSlice& slice, Direction geometry, const QuantumChannel& quantum,
                       const FiberSpec& fiber, bool* synthesized = nullptr);

/// Co-propagating closed form, whatever the direction stored in the channel.
Power sprs_power_co(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                    Bandwidth ase_step = default_ase_step);
Power sprs_power_counter(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                         Bandwidth ase_step = default_ase_step);

struct SprsTotals {
  Power co = Power::zero();
  Power counter = Power::zero();
  bool synthesized_anti_stokes = false;
};

/// Sums every channel into the geometry given by its direction. Range errors
/// are rethrown with the channel label attached.
SprsTotals sprs_total(std::span<const PumpChannel> plan, const QuantumChannel& quantum, const FiberSpec& fiber,
                      Bandwidth ase_step = default_ase_step);

}  // namespace qcoex
