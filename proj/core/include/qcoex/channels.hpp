#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcoex/units.hpp"

namespace qcoex {

/// Propagation direction of a classical signal relative to the quantum signal.
enum class Direction { co, counter };

std::string_view to_string(Direction direction);
/// Accepts "co" and "counter"; throws ParseError otherwise.
Direction parse_direction(std::string_view text);

/// Unmodulated tone.
struct CwLoading {
  Power power;
};

/// Flat spectral loading (e.g. shaped ASE) of the given PSD over a band.
struct AseLoading {
  PowerDensity psd;
  Bandwidth bandwidth;
};

/// A classical channel acting as Raman/FWM pump.
struct PumpChannel {
  std::string label;
  Frequency center;
  Direction direction;
  std::variant<CwLoading, AseLoading> loading;

  bool is_cw() const noexcept { return std::holds_alternative<CwLoading>(loading); }
  Power total_power() const;
  /// Lowest and highest occupied frequency (equal to center for CW tones).
  Frequency lower_edge() const;
  Frequency upper_edge() const;
  /// Same channel with its power (or PSD) multiplied by factor >= 0.
  PumpChannel scaled(double factor) const;
  PumpChannel with_direction(Direction direction) const;
};

PumpChannel cw_channel(std::string label, Frequency center, Power power, Direction direction);
PumpChannel ase_channel(std::string label, Frequency center, PowerDensity psd, Bandwidth bandwidth,
                        Direction direction);

/// A narrow spectral piece of a pump, treated as a tone at its center.
struct PumpSlice {
  Frequency center;
  Power power;
};

/// CW channels give one slice. ASE loading is cut into equal slices no wider
/// than max_step, each carrying psd * width at its center.
std::vector<PumpSlice> discretize(const PumpChannel& channel, Bandwidth max_step);

/// The quantum channel seen through a rectangular receiver filter.
struct QuantumChannel {
  Frequency center;
  Bandwidth filter;
};

}  // namespace qcoex
