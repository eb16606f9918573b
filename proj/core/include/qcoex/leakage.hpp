#pragma once

// Linear (power-independent of the fiber nonlinearity) noise reaching the
// quantum channel from light that already sits inside the quantum band at
// the classical transmitter, e.g. unfiltered ASE after the notch filter.

#include <string>

#include "qcoex/channels.hpp"
#include "qcoex/fiber.hpp"
#include "qcoex/units.hpp"

namespace qcoex {

struct LeakageSource {
  std::string label;
  PowerDensity psd;  // in-band PSD at the quantum frequency, fiber input
  Direction direction;
};

/// Counter-propagating geometry: leakage launched at the quantum receiver end
/// is Rayleigh backscattered into the receiver,
///   S0 r (1 - exp(-2 a L)) / (2 a),
/// with r the per-km Rayleigh efficiency and a the attenuation at the quantum
/// wavelength. Throws MisuseError for co-propagating sources.
PowerDensity rayleigh_backscatter(const LeakageSource& source, const QuantumChannel& quantum,
                                  const FiberSpec& fiber);

/// L -> infinity value S0 r / (2 a).
PowerDensity rayleigh_backscatter_limit(const LeakageSource& source, const QuantumChannel& quantum,
                                        const FiberSpec& fiber);

/// Co-propagating leakage simply attenuated along the span: S0 exp(-a L).
/// Throws MisuseError for counter-propagating sources.
PowerDensity copropagated_leakage(const LeakageSource& source, const QuantumChannel& quantum,
                                  const FiberSpec& fiber);

}  // namespace qcoex
