#pragma once

// Scenario documents (JSON, `schema_version` 1) and budget output (CSV/JSON).
//
// Scenario document layout:
//
//   {
//     "schema_version": 1,
//     "name": "...", "description": "...", "notes": ["..."],
//     "fiber": {
//       "length_km": 50,
//       "beta2_ps2_per_km": -21.1, "gamma_per_w_km": 1.3,
//       "rayleigh_db_per_km": -42.32, "temperature_k": 295,
//       "attenuation": {"csv": "atten.csv"} | {"samples": [[nm, dB/km], ...]},
//       "sprs_efficiency": {"csv": "sprs.csv"}
//                        | {"unit": "db_per_km_ghz", "samples": [[pump_nm, shift_ghz, value], ...]}
//     },
//     "quantum": {"frequency_thz": 194.7 | "wavelength_nm": 1539.8, "bandwidth_ghz": 10},
//     "classical": [
//       {"label": "t1", "kind": "cw", "frequency_thz": 194.75, "power_dbm": 10 | "power_w": 0.01,
//        "direction": "co"},
//       {"label": "c", "kind": "ase", "frequency_thz": 193.7, "bandwidth_ghz": 4400,
//        "psd_dbm_per_ghz": -10 | "psd_w_per_hz": 1e-13, "direction": "counter"}
//     ],
//     "leakage": [{"label": "ase", "psd_dbm_per_ghz": -70 | "psd_w_per_hz": 0, "direction": "counter"}],
//     "background_psd_w_per_hz": 0,
//     "fwm_mode": "exact" | "averaged" | "both",
//     "sprs_step_ghz": 100,
//     "sweep": {"axis": "length" | "quantum-frequency" | "classical-power", "start": 1, "stop": 50, "step": 1},
//     "oracle": {"tolerance": 1e-10, "max_doublings": 24, "initial_steps": 2}
//   }
//
// CSV paths are relative to the document's directory.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "qcoex/scenario.hpp"

namespace qcoex {

/// Throws ParseError on malformed JSON and ValidationError listing every
/// missing or invalid field.
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

/// Shortest text that reads back to the same double.
std::string format_number(double value);

/// Header `axis,mechanism,psd_w_per_hz,power_w,photons_per_s`; one row per
/// active mechanism (plus fwm_averaged when present). The axis column is
/// empty for a single budget.
void write_budget_csv(std::ostream& out, const NoiseBudget& budget);
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);

void write_budget_json(std::ostream& out, const Scenario& scenario, const NoiseBudget& budget);
void write_sweep_json(std::ostream& out, const Scenario& scenario, std::span<const SweepPoint> points);

}  // namespace qcoex
