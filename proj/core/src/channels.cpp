#include "qcoex/channels.hpp"

#include <cmath>
#include <utility>

#include "qcoex/errors.hpp"

namespace qcoex {

std::string_view to_string(Direction direction) { return direction == Direction::co ? "co" : "counter"; }

Direction parse_direction(std::string_view text) {
  if (text == "co") return Direction::co;
  if (text == "counter") return Direction::counter;
  throw ParseError("direction must be \"co\" or \"counter\", got \"" + std::string(text) + "\"");
}

Power PumpChannel::total_power() const {
  if (const auto* cw = std::get_if<CwLoading>(&loading)) return cw->power;
  const auto& ase = std::get<AseLoading>(loading);
  return ase.psd * ase.bandwidth;
}

Frequency PumpChannel::lower_edge() const {
  if (is_cw()) return center;
  return center + FrequencyShift::from_ghz(-0.5 * std::get<AseLoading>(loading).bandwidth.ghz());
}

Frequency PumpChannel::upper_edge() const {
  if (is_cw()) return center;
  return center + FrequencyShift::from_ghz(0.5 * std::get<AseLoading>(loading).bandwidth.ghz());
}

PumpChannel PumpChannel::scaled(double factor) const {
  PumpChannel out = *this;
  if (auto* cw = std::get_if<CwLoading>(&out.loading)) {
    cw->power = cw->power * factor;
  } else {
    auto& ase = std::get<AseLoading>(out.loading);
    ase.psd = ase.psd * factor;
  }
  return out;
}

PumpChannel PumpChannel::with_direction(Direction dir) const {
  PumpChannel out = *this;
  out.direction = dir;
  return out;
}

PumpChannel cw_channel(std::string label, Frequency center, Power power, Direction direction) {
  return PumpChannel{std::move(label), center, direction, CwLoading{power}};
}

PumpChannel ase_channel(std::string label, Frequency center, PowerDensity psd, Bandwidth bandwidth,
                        Direction direction) {
  return PumpChannel{std::move(label), center, direction, AseLoading{psd, bandwidth}};
}

std::vector<PumpSlice> discretize(const PumpChannel& channel, Bandwidth max_step) {
  if (const auto* cw = std::get_if<CwLoading>(&channel.loading)) return {{channel.center, cw->power}};
  const auto& ase = std::get<AseLoading>(channel.loading);
  const auto count = static_cast<std::size_t>(std::ceil(ase.bandwidth.ghz() / max_step.ghz() - 1e-9));
  const auto n = count == 0 ? std::size_t{1} : count;
  const double width_ghz = ase.bandwidth.ghz() / static_cast<double>(n);
  const Power slice_power = ase.psd * Bandwidth::from_ghz(width_ghz);
  std::vector<PumpSlice> slices;
  slices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double offset = -0.5 * ase.bandwidth.ghz() + (static_cast<double>(i) + 0.5) * width_ghz;
    slices.push_back({channel.center + FrequencyShift::from_ghz(offset), slice_power});
  }
  return slices;
}

}  // namespace qcoex
