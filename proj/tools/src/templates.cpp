#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "qcoex/units.hpp"
#include "qcoex_cli/cli.hpp"

namespace qcoex::cli {
namespace {

using nlohmann::ordered_json;

// Representative standard single-mode fiber, dB/km. Not a measurement.
ordered_json smf_attenuation() {
  static const double table[][2] = {{1260, 0.36}, {1310, 0.33}, {1383, 0.31}, {1450, 0.25}, {1500, 0.21},
                                    {1550, 0.19}, {1600, 0.20}, {1625, 0.21}, {1680, 0.25}, {1700, 0.27}};
  ordered_json samples = ordered_json::array();
  for (const auto& row : table) samples.push_back({row[0], row[1]});
  return {{"samples", samples}};
}

// Raman-like shape normalised to the 13.2 THz peak, shift in THz.
const double raman_shape[][2] = {{0.0, 0.0},   {0.05, 0.004}, {0.1, 0.008}, {0.5, 0.03}, {1, 0.06},
                                 {2, 0.12},    {4, 0.25},     {6, 0.38},    {8, 0.5},    {10, 0.7},
                                 {12, 0.92},   {13.2, 1.0},   {14.5, 0.85}, {16, 0.45},  {18, 0.3},
                                 {20, 0.25},   {25, 0.12},    {30, 0.05},   {35, 0.02},  {40, 0.01}};

// Both sides tabulated; anti-Stokes follows the thermal ratio at 295 K and
// shorter pumps scatter a little more.
ordered_json placeholder_sprs() {
  const double peak = 2.5e-11;  // 1/(km GHz)
  const double kt = constants::boltzmann * 295.0;
  ordered_json samples = ordered_json::array();
  for (const double pump_nm : {1520.0, 1570.0}) {
    const double scale = pump_nm < 1550.0 ? 1.05 : 1.0;
    for (auto it = std::rbegin(raman_shape); it != std::rend(raman_shape); ++it) {
      const double shift = (*it)[0];
      if (shift == 0.0) continue;
      samples.push_back({pump_nm, -shift * 1e3, peak * scale * (*it)[1]});
    }
    samples.push_back({pump_nm, 0.0, 0.0});
    for (const auto& row : raman_shape) {
      if (row[0] == 0.0) continue;
      const double thermal = std::exp(-constants::planck * row[0] * 1e12 / kt);
      samples.push_back({pump_nm, row[0] * 1e3, peak * scale * row[1] * thermal});
    }
  }
  return {{"unit", "per_km_ghz"}, {"samples", samples}};
}

ordered_json smf_fiber(double length_km) {
  return {{"length_km", length_km},
          {"beta2_ps2_per_km", -21.1},
          {"gamma_per_w_km", 1.3},
          {"rayleigh_db_per_km", -42.32},
          {"temperature_k", 295.0},
          {"attenuation", smf_attenuation()},
          {"sprs_efficiency", placeholder_sprs()}};
}

ordered_json multiband_sprs() {
  return {{"schema_version", 1},
          {"name", "multiband-sprs"},
          {"description",
           "C-band ASE loading counter-propagating against a quantum channel swept across the O, E and S bands "
           "over 50 km of SMF."},
          {"notes",
           {"Loading PSD, leakage PSD, background and both profiles are placeholders, not measured values.",
            "Replace fiber.attenuation and fiber.sprs_efficiency with measured tables (csv paths are accepted)."}},
          {"fiber", smf_fiber(50.0)},
          {"quantum", {{"frequency_thz", 210.0}, {"bandwidth_ghz", 100.0}}},
          {"classical",
           {{{"label", "c-band-ase"},
             {"kind", "ase"},
             {"frequency_thz", 193.75},
             {"bandwidth_ghz", 4300.0},
             {"psd_dbm_per_ghz", -16.0},
             {"direction", "counter"}}}},
          {"leakage", {{{"label", "ase-skirt"}, {"psd_dbm_per_ghz", -60.0}, {"direction", "counter"}}}},
          {"background_psd_w_per_hz", 1e-22},
          {"fwm_mode", "exact"},
          {"sprs_step_ghz", 100.0},
          {"sweep", {{"axis", "quantum-frequency"}, {"start", 200.0}, {"stop", 222.0}, {"step", 0.5}}}};
}

ordered_json fwm_length_sweep() {
  ordered_json tones = ordered_json::array();
  for (const double offset : {-100.0, -50.0, 50.0, 100.0}) {
    const auto label = (offset < 0 ? "m" : "p") + std::to_string(static_cast<int>(std::abs(offset)));
    tones.push_back({{"label", label},
                     {"kind", "cw"},
                     {"frequency_thz", 194.7 + offset * 1e-3},
                     {"power_dbm", 6.0},
                     {"direction", "co"}});
  }
  return {{"schema_version", 1},
          {"name", "fwm-length-sweep"},
          {"description",
           "Four co-propagating CW tones at -100, -50, +50 and +100 GHz around a 194.7 THz quantum channel, "
           "swept over fiber length."},
          {"notes",
           {"Tone powers, leakage PSD and both profiles are placeholders, not measured values.",
            "The fwm entry is the exact efficiency; fwm_averaged reports the averaged one."}},
          {"fiber", smf_fiber(25.0)},
          {"quantum", {{"frequency_thz", 194.7}, {"bandwidth_ghz", 10.0}}},
          {"classical", tones},
          {"leakage", {{{"label", "notch-residual"}, {"psd_dbm_per_ghz", -90.0}, {"direction", "co"}}}},
          {"background_psd_w_per_hz", 0.0},
          {"fwm_mode", "both"},
          {"sprs_step_ghz", 100.0},
          {"sweep", {{"axis", "length"}, {"start", 0.5}, {"stop", 50.0}, {"step", 0.5}}}};
}

}  // namespace

std::vector<std::string> template_names() { return {"fwm-length-sweep", "multiband-sprs"}; }

std::string template_json(std::string_view name) {
  if (name == "multiband-sprs") return multiband_sprs().dump(2) + "\n";
  if (name == "fwm-length-sweep") return fwm_length_sweep().dump(2) + "\n";
  throw std::out_of_range("unknown template '" + std::string(name) + "'");
}

}  // namespace qcoex::cli
