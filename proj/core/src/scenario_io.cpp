#include "qcoex/scenario_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

namespace qcoex {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Collects problems instead of stopping at the first one.
class Reader {
 public:
  explicit Reader(std::filesystem::path base_dir) : base_dir_(std::move(base_dir)) {}

  std::vector<Issue>& issues() { return issues_; }
  const std::filesystem::path& base_dir() const { return base_dir_; }

  void fail(const std::string& field, const std::string& message) { issues_.push_back({field, message}); }

  const json* child(const json& object, const char* key, const std::string& path, bool required) {
    if (!object.is_object()) {
      fail(path, "must be an object");
      return nullptr;
    }
    const auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
      if (required) fail(join(path, key), "is required");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const json& object, const char* key, const std::string& path, bool required) {
    const auto* node = child(object, key, path, required);
    if (node == nullptr) return std::nullopt;
    if (!node->is_number()) {
      fail(join(path, key), "must be a number");
      return std::nullopt;
    }
    return node->get<double>();
  }

  std::optional<std::string> text(const json& object, const char* key, const std::string& path, bool required) {
    const auto* node = child(object, key, path, required);
    if (node == nullptr) return std::nullopt;
    if (!node->is_string()) {
      fail(join(path, key), "must be a string");
      return std::nullopt;
    }
    return node->get<std::string>();
  }

  // Runs a constructor that may throw qcoex errors, recording them under `field`.
  template <class F>
  auto attempt(const std::string& field, F&& make) -> std::optional<decltype(make())> {
    try {
      return make();
    } catch (const ValidationError& e) {
      for (const auto& issue : e.issues()) fail(field + "." + issue.field, issue.message);
    } catch (const Error& e) {
      fail(field, e.what());
    }
    return std::nullopt;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

 private:
  std::filesystem::path base_dir_;
  std::vector<Issue> issues_;
};

std::optional<AttenuationProfile> read_attenuation(Reader& r, const json& node, const std::string& path) {
  if (const auto* csv = r.child(node, "csv", path, false)) {
    if (!csv->is_string()) {
      r.fail(path + ".csv", "must be a path string");
      return std::nullopt;
    }
    const auto file = r.base_dir() / csv->get<std::string>();
    return r.attempt(path + ".csv", [&] { return load_attenuation_csv(file); });
  }
  const auto* samples = r.child(node, "samples", path, false);
  if (samples == nullptr) {
    r.fail(path, "needs either \"csv\" or \"samples\"");
    return std::nullopt;
  }
  if (!samples->is_array()) {
    r.fail(path + ".samples", "must be an array of [wavelength_nm, attenuation_db_per_km]");
    return std::nullopt;
  }
  return r.attempt(path + ".samples", [&] {
    std::vector<AttenuationSample> out;
    for (const auto& row : *samples) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
        throw ParseError("each sample must be [wavelength_nm, attenuation_db_per_km]");
      }
      out.push_back({Wavelength::from_nm(row[0].get<double>()), Attenuation::from_db_per_km(row[1].get<double>())});
    }
    return AttenuationProfile(std::move(out));
  });
}

std::optional<SprsEfficiencyProfile> read_sprs(Reader& r, const json& node, const std::string& path) {
  if (const auto* csv = r.child(node, "csv", path, false)) {
    if (!csv->is_string()) {
      r.fail(path + ".csv", "must be a path string");
      return std::nullopt;
    }
    const auto file = r.base_dir() / csv->get<std::string>();
    return r.attempt(path + ".csv", [&] { return load_sprs_csv(file); });
  }
  const auto unit_name = r.text(node, "unit", path, true);
  const auto* samples = r.child(node, "samples", path, true);
  if (!unit_name || samples == nullptr) return std::nullopt;
  if (!samples->is_array()) {
    r.fail(path + ".samples", "must be an array of [pump_wavelength_nm, shift_ghz, value]");
    return std::nullopt;
  }
  return r.attempt(path, [&] {
    const auto unit = parse_efficiency_unit(*unit_name);
    std::vector<RawSprsRow> rows;
    for (const auto& row : *samples) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() || !row[2].is_number()) {
        throw ParseError("each sample must be [pump_wavelength_nm, shift_ghz, value]");
      }
      rows.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return SprsEfficiencyProfile::from_rows(rows, unit);
  });
}

std::optional<FiberSpec> read_fiber(Reader& r, const json& root) {
  const std::string path = "fiber";
  const auto* node = r.child(root, "fiber", "", true);
  if (node == nullptr) return std::nullopt;
  const auto length = r.number(*node, "length_km", path, true);
  const auto beta2 = r.number(*node, "beta2_ps2_per_km", path, false);
  const auto gamma = r.number(*node, "gamma_per_w_km", path, false);
  const auto rayleigh = r.number(*node, "rayleigh_db_per_km", path, false);
  const auto temperature = r.number(*node, "temperature_k", path, false);

  std::optional<AttenuationProfile> attenuation;
  if (const auto* a = r.child(*node, "attenuation", path, true)) attenuation = read_attenuation(r, *a, path + ".attenuation");
  std::optional<SprsEfficiencyProfile> sprs = SprsEfficiencyProfile{};
  if (const auto* s = r.child(*node, "sprs_efficiency", path, false)) sprs = read_sprs(r, *s, path + ".sprs_efficiency");

  FiberConstants constants;
  bool constants_ok = true;
  auto set = [&](const char* key, auto&& apply) {
    if (!r.attempt(path + "." + key, [&] {
          apply();
          return true;
        })) {
      constants_ok = false;
    }
  };
  if (beta2) set("beta2_ps2_per_km", [&] { constants.beta2 = Dispersion::from_ps2_per_km(*beta2); });
  if (gamma) set("gamma_per_w_km", [&] { constants.gamma = Nonlinearity::from_per_w_km(*gamma); });
  if (rayleigh) set("rayleigh_db_per_km", [&] { constants.rayleigh = RayleighEfficiency::from_db_per_km(*rayleigh); });
  if (temperature) set("temperature_k", [&] { constants.temperature = Temperature::from_kelvin(*temperature); });

  std::optional<Length> checked_length;
  if (length) {
    checked_length = r.attempt(path + ".length_km", [&] {
      if (!(*length > 0.0)) throw DomainError("fiber length must be > 0 km, got " + detail::num(*length));
      return Length::from_km(*length);
    });
  }
  if (!checked_length || !attenuation || !sprs || !constants_ok) return std::nullopt;
  return r.attempt(path, [&] { return FiberSpec(*checked_length, std::move(*attenuation), std::move(*sprs), constants); });
}

std::optional<Frequency> read_frequency(Reader& r, const json& node, const std::string& path) {
  const bool has_f = node.is_object() && node.contains("frequency_thz");
  const bool has_l = node.is_object() && node.contains("wavelength_nm");
  if (has_f == has_l) {
    r.fail(path, "needs exactly one of \"frequency_thz\" or \"wavelength_nm\"");
    return std::nullopt;
  }
  if (has_f) {
    const auto thz = r.number(node, "frequency_thz", path, true);
    if (!thz) return std::nullopt;
    return r.attempt(path + ".frequency_thz", [&] { return Frequency::from_thz(*thz); });
  }
  const auto nm = r.number(node, "wavelength_nm", path, true);
  if (!nm) return std::nullopt;
  return r.attempt(path + ".wavelength_nm", [&] { return to_frequency(Wavelength::from_nm(*nm)); });
}

// Exactly one of the linear/log keys must be present.
std::optional<double> read_either(Reader& r, const json& node, const std::string& path, const char* linear_key,
                                  const char* log_key, const std::function<double(double)>& from_log) {
  const bool has_linear = node.is_object() && node.contains(linear_key);
  const bool has_log = node.is_object() && node.contains(log_key);
  if (has_linear == has_log) {
    r.fail(path, std::string("needs exactly one of \"") + linear_key + "\" or \"" + log_key + "\"");
    return std::nullopt;
  }
  const char* key = has_linear ? linear_key : log_key;
  const auto value = r.number(node, key, path, true);
  if (!value) return std::nullopt;
  return has_linear ? *value : from_log(*value);
}

std::optional<PowerDensity> read_psd(Reader& r, const json& node, const std::string& path) {
  const auto w_per_hz = read_either(r, node, path, "psd_w_per_hz", "psd_dbm_per_ghz",
                                    [](double dbm) { return dbm_to_watts(dbm) * 1e-9; });
  if (!w_per_hz) return std::nullopt;
  return r.attempt(path, [&] { return PowerDensity::from_w_per_hz(*w_per_hz); });
}

std::optional<Direction> read_direction(Reader& r, const json& node, const std::string& path) {
  const auto text = r.text(node, "direction", path, true);
  if (!text) return std::nullopt;
  return r.attempt(path + ".direction", [&] { return parse_direction(*text); });
}

std::optional<PumpChannel> read_channel(Reader& r, const json& node, const std::string& path, std::size_t index) {
  const auto label = r.text(node, "label", path, false).value_or("ch" + std::to_string(index));
  const auto kind = r.text(node, "kind", path, true);
  const auto center = read_frequency(r, node, path);
  const auto direction = read_direction(r, node, path);
  if (!kind) return std::nullopt;
  if (*kind == "cw") {
    const auto watts = read_either(r, node, path, "power_w", "power_dbm", dbm_to_watts);
    if (!watts || !center || !direction) return std::nullopt;
    return r.attempt(path, [&] { return cw_channel(label, *center, Power::from_watts(*watts), *direction); });
  }
  if (*kind == "ase") {
    const auto bandwidth = r.number(node, "bandwidth_ghz", path, true);
    const auto psd = read_psd(r, node, path);
    if (!bandwidth || !psd || !center || !direction) return std::nullopt;
    return r.attempt(path + ".bandwidth_ghz", [&] {
      return ase_channel(label, *center, *psd, Bandwidth::from_ghz(*bandwidth), *direction);
    });
  }
  r.fail(path + ".kind", "must be \"cw\" or \"ase\", got \"" + *kind + "\"");
  return std::nullopt;
}

template <class T, class F>
std::vector<T> read_array(Reader& r, const json& root, const char* key, F&& read_item) {
  std::vector<T> out;
  const auto* node = r.child(root, key, "", false);
  if (node == nullptr) return out;
  if (!node->is_array()) {
    r.fail(key, "must be an array");
    return out;
  }
  for (std::size_t n = 0; n < node->size(); ++n) {
    const auto path = std::string(key) + "[" + std::to_string(n) + "]";
    if (auto item = read_item((*node)[n], path, n)) out.push_back(std::move(*item));
  }
  return out;
}

std::optional<Sweep> read_sweep(Reader& r, const json& node) {
  const std::string path = "sweep";
  const auto axis_name = r.text(node, "axis", path, true);
  const auto start = r.number(node, "start", path, true);
  const auto stop = r.number(node, "stop", path, true);
  const auto step = r.number(node, "step", path, true);
  if (!axis_name || !start || !stop || !step) return std::nullopt;
  const auto axis = r.attempt(path + ".axis", [&] { return parse_sweep_axis(*axis_name); });
  if (!axis) return std::nullopt;
  return Sweep{*axis, *start, *stop, *step};
}

QuadratureConfig read_oracle(Reader& r, const json& root) {
  QuadratureConfig config;
  const auto* node = r.child(root, "oracle", "", false);
  if (node == nullptr) return config;
  if (const auto tol = r.number(*node, "tolerance", "oracle", false)) config.tolerance = *tol;
  if (const auto doublings = r.number(*node, "max_doublings", "oracle", false)) {
    config.max_doublings = static_cast<int>(*doublings);
  }
  if (const auto steps = r.number(*node, "initial_steps", "oracle", false)) {
    config.initial_steps = *steps < 0 ? 0 : static_cast<std::size_t>(*steps);
  }
  r.attempt("oracle", [&] {
    config.validate();
    return true;
  });
  return config;
}

}  // namespace

std::string format_number(double value) {
  // Shortest representation that round-trips.
  char buffer[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) return buffer;
  }
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("scenario JSON must be an object");

  Reader r(base_dir);
  if (const auto version = r.number(root, "schema_version", "", true);
      version && *version != scenario_schema_version) {
    r.fail("schema_version", "unsupported version " + format_number(*version) + " (expected " +
                                 std::to_string(scenario_schema_version) + ")");
  }
  const auto name = r.text(root, "name", "", false).value_or("");
  const auto description = r.text(root, "description", "", false).value_or("");
  std::vector<std::string> notes;
  if (const auto* node = r.child(root, "notes", "", false)) {
    if (node->is_array() && std::all_of(node->begin(), node->end(), [](const json& n) { return n.is_string(); })) {
      for (const auto& n : *node) notes.push_back(n.get<std::string>());
    } else {
      r.fail("notes", "must be an array of strings");
    }
  }

  auto fiber = read_fiber(r, root);

  std::optional<QuantumChannel> quantum;
  if (const auto* node = r.child(root, "quantum", "", true)) {
    const auto center = read_frequency(r, *node, "quantum");
    const auto bandwidth = r.number(*node, "bandwidth_ghz", "quantum", true);
    if (center && bandwidth) {
      if (auto filter = r.attempt("quantum.bandwidth_ghz", [&] { return Bandwidth::from_ghz(*bandwidth); })) {
        quantum = QuantumChannel{*center, *filter};
      }
    }
  }

  auto plan = read_array<PumpChannel>(r, root, "classical", [&](const json& node, const std::string& path,
                                                                 std::size_t n) { return read_channel(r, node, path, n); });
  auto leakage = read_array<LeakageSource>(
      r, root, "leakage", [&](const json& node, const std::string& path, std::size_t n) -> std::optional<LeakageSource> {
        const auto label = r.text(node, "label", path, false).value_or("leak" + std::to_string(n));
        const auto psd = read_psd(r, node, path);
        const auto direction = read_direction(r, node, path);
        if (!psd || !direction) return std::nullopt;
        return LeakageSource{label, *psd, *direction};
      });

  PowerDensity background = PowerDensity::zero();
  if (const auto value = r.number(root, "background_psd_w_per_hz", "", false)) {
    if (auto psd = r.attempt("background_psd_w_per_hz", [&] { return PowerDensity::from_w_per_hz(*value); })) {
      background = *psd;
    }
  }

  FwmMode mode = FwmMode::exact;
  if (const auto text = r.text(root, "fwm_mode", "", false)) {
    if (auto parsed = r.attempt("fwm_mode", [&] { return parse_fwm_mode(*text); })) mode = *parsed;
  }

  Bandwidth step = default_ase_step;
  if (const auto value = r.number(root, "sprs_step_ghz", "", false)) {
    if (auto parsed = r.attempt("sprs_step_ghz", [&] { return Bandwidth::from_ghz(*value); })) step = *parsed;
  }

  std::optional<Sweep> sweep;
  if (const auto* node = r.child(root, "sweep", "", false)) sweep = read_sweep(r, *node);

  const auto oracle = read_oracle(r, root);

  if (!r.issues().empty() || !fiber || !quantum) {
    if (r.issues().empty()) r.fail("", "incomplete scenario");
    throw ValidationError(std::move(r.issues()));
  }

  Scenario scenario{name,      description, std::move(notes), std::move(*fiber), std::move(plan), *quantum,
                    std::move(leakage), background, mode, step, sweep, oracle};
  if (auto issues = validate(scenario); !issues.empty()) throw ValidationError(std::move(issues));
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path.parent_path());
}

namespace {

void write_csv_rows(std::ostream& out, const std::string& axis, const NoiseBudget& budget) {
  auto row = [&](const BudgetEntry& e) {
    out << axis << ',' << e.name << ',' << format_number(e.psd.w_per_hz()) << ',' << format_number(e.power.watts())
        << ',' << format_number(e.photons_per_s) << '\n';
  };
  for (const auto& entry : budget.entries) {
    if (entry.active) row(entry);
  }
  if (budget.fwm_alternate && budget.fwm_alternate->active) row(*budget.fwm_alternate);
}

constexpr const char* csv_header = "axis,mechanism,psd_w_per_hz,power_w,photons_per_s\n";

ordered_json entry_json(const BudgetEntry& e) {
  return ordered_json{{"mechanism", e.name},
                      {"psd_w_per_hz", e.psd.w_per_hz()},
                      {"power_w", e.power.watts()},
                      {"photons_per_s", e.photons_per_s},
                      {"active", e.active}};
}

ordered_json budget_json(const NoiseBudget& budget) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : budget.entries) entries.push_back(entry_json(e));
  ordered_json products = ordered_json::array();
  for (const auto& p : budget.fwm_products) {
    products.push_back({{"i", p.product.i},
                        {"j", p.product.j},
                        {"k", p.product.k},
                        {"degeneracy", p.product.degeneracy},
                        {"frequency_thz", p.product.frequency.thz()},
                        {"phase_mismatch_rad_per_km", p.product.mismatch.rad_per_km()},
                        {"power_exact_w", p.exact.watts()},
                        {"power_averaged_w", p.averaged.watts()}});
  }
  return ordered_json{
      {"entries", entries},
      {"fwm_alternate", budget.fwm_alternate ? entry_json(*budget.fwm_alternate) : ordered_json(nullptr)},
      {"total", entry_json(budget.total)},
      {"metadata", {{"synthesized_anti_stokes", budget.synthesized_anti_stokes}, {"fwm_products", products}}}};
}

ordered_json header_json(const Scenario& s) {
  return ordered_json{{"schema_version", scenario_schema_version},
                      {"scenario", s.name},
                      {"quantum", {{"frequency_thz", s.quantum.center.thz()}, {"bandwidth_ghz", s.quantum.filter.ghz()}}}};
}

}  // namespace

void write_budget_csv(std::ostream& out, const NoiseBudget& budget) {
  out << csv_header;
  write_csv_rows(out, "", budget);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
  out << csv_header;
  for (const auto& point : points) {
    if (point.budget) write_csv_rows(out, format_number(point.axis), *point.budget);
  }
}

void write_budget_json(std::ostream& out, const Scenario& scenario, const NoiseBudget& budget) {
  auto doc = header_json(scenario);
  doc["budget"] = budget_json(budget);
  out << doc.dump(2) << '\n';
}

void write_sweep_json(std::ostream& out, const Scenario& scenario, std::span<const SweepPoint> points) {
  auto doc = header_json(scenario);
  doc["axis"] = scenario.sweep ? std::string(to_string(scenario.sweep->axis)) : std::string();
  ordered_json list = ordered_json::array();
  for (const auto& point : points) {
    ordered_json item{{"axis", point.axis}};
    if (point.budget) {
      item["budget"] = budget_json(*point.budget);
    } else {
      ordered_json errors = ordered_json::array();
      for (const auto& issue : point.errors) errors.push_back({{"field", issue.field}, {"message", issue.message}});
      item["errors"] = errors;
    }
    list.push_back(std::move(item));
  }
  doc["points"] = list;
  out << doc.dump(2) << '\n';
}

}  // namespace qcoex
