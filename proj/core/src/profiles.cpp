#include "qcoex/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "interpolate.hpp"
#include "qcoex/errors.hpp"

namespace qcoex {
namespace {

std::string format_nm(double nm) {
  std::ostringstream out;
  out << nm;
  return out.str();
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Comment ('#') and blank lines are skipped; the first remaining line is the header.
CsvTable read_numeric_csv(std::istream& in, std::string_view source, std::size_t columns) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_fields(text);
    const auto where = std::string(source) + ":" + std::to_string(line_no);
    if (fields.size() != columns) {
      throw ParseError(where + ": expected " + std::to_string(columns) + " columns, got " +
                       std::to_string(fields.size()));
    }
    if (!have_header) {
      for (auto field : fields) table.header.emplace_back(field);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (auto field : fields) {
      double value = 0.0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || end != field.data() + field.size()) {
        throw ParseError(where + ": not a number: '" + std::string(field) + "'");
      }
      row.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(std::string(source) + ": missing header row");
  return table;
}

void expect_column(const CsvTable& table, std::size_t index, std::string_view name, std::string_view source) {
  if (table.header[index] != name) {
    throw ParseError(std::string(source) + ": column " + std::to_string(index + 1) + " must be '" +
                     std::string(name) + "', got '" + table.header[index] + "'");
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------
// AttenuationProfile

AttenuationProfile::AttenuationProfile(std::vector<AttenuationSample> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw DomainError("attenuation profile needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!(samples_[i].attenuation.nepers_per_km() > 0.0)) {
      throw DomainError("attenuation must be > 0 dB/km at " + format_nm(samples_[i].wavelength.nm()) + " nm");
    }
    if (i > 0 && !(samples_[i].wavelength > samples_[i - 1].wavelength)) {
      throw DomainError("attenuation profile wavelengths must be strictly increasing at " +
                        format_nm(samples_[i].wavelength.nm()) + " nm");
    }
    wavelength_nm_.push_back(samples_[i].wavelength.nm());
    nepers_per_km_.push_back(samples_[i].attenuation.nepers_per_km());
  }
}

AttenuationProfile AttenuationProfile::flat(Attenuation attenuation, Wavelength lo, Wavelength hi) {
  return AttenuationProfile({{lo, attenuation}, {hi, attenuation}});
}

bool AttenuationProfile::covers(Wavelength wavelength) const noexcept {
  return detail::within(wavelength_nm_, wavelength.nm());
}

Attenuation AttenuationProfile::at(Wavelength wavelength) const {
  const auto value = detail::lerp_table(wavelength_nm_, nepers_per_km_, wavelength.nm());
  if (!value) {
    throw RangeError("wavelength " + format_nm(wavelength.nm()) + " nm outside " + describe_range());
  }
  return Attenuation::from_nepers_per_km(*value);
}

std::string AttenuationProfile::describe_range() const {
  return "attenuation profile [" + format_nm(min_wavelength().nm()) + ", " + format_nm(max_wavelength().nm()) +
         "] nm";
}

// ---------------------------------------------------------------------------
// Efficiency units

std::string_view efficiency_column(EfficiencyUnit unit) {
  switch (unit) {
    case EfficiencyUnit::per_km_ghz:
      return "efficiency_per_km_ghz";
    case EfficiencyUnit::db_per_km_ghz:
      return "efficiency_db_per_km_ghz";
    case EfficiencyUnit::per_km_nm:
      return "efficiency_per_km_nm";
    case EfficiencyUnit::db_per_km_nm:
      return "efficiency_db_per_km_nm";
  }
  return {};
}

EfficiencyUnit parse_efficiency_unit(std::string_view name) {
  constexpr std::string_view prefix = "efficiency_";
  if (name.starts_with(prefix)) name.remove_prefix(prefix.size());
  for (auto unit : {EfficiencyUnit::per_km_ghz, EfficiencyUnit::db_per_km_ghz, EfficiencyUnit::per_km_nm,
                    EfficiencyUnit::db_per_km_nm}) {
    auto column = efficiency_column(unit);
    column.remove_prefix(prefix.size());
    if (column == name) return unit;
  }
  throw ParseError("unknown efficiency unit '" + std::string(name) +
                   "' (expected per_km_ghz, db_per_km_ghz, per_km_nm or db_per_km_nm)");
}

// ---------------------------------------------------------------------------
// SprsEfficiencyProfile

SprsEfficiencyProfile::SprsEfficiencyProfile(std::vector<SprsSample> samples) {
  std::map<double, std::vector<std::pair<double, double>>> by_pump;
  for (const auto& s : samples) {
    by_pump[s.pump.nm()].emplace_back(s.shift.ghz(), s.efficiency.per_km_ghz());
    has_stokes_ = has_stokes_ || s.shift.ghz() < 0.0;
    has_anti_stokes_ = has_anti_stokes_ || s.shift.ghz() > 0.0;
  }
  for (auto& [pump_nm, points] : by_pump) {
    std::sort(points.begin(), points.end());
    Curve curve{pump_nm, {}, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0 && points[i].first == points[i - 1].first) {
        throw DomainError("duplicate Raman shift " + detail::num(points[i].first) + " GHz for pump " +
                          format_nm(pump_nm) + " nm");
      }
      curve.shift_ghz.push_back(points[i].first);
      curve.value.push_back(points[i].second);
    }
    check_stokes_dominance(curve);
    curves_.push_back(std::move(curve));
  }
}

void SprsEfficiencyProfile::check_stokes_dominance(const Curve& curve) const {
  for (std::size_t i = 0; i < curve.shift_ghz.size(); ++i) {
    const double shift = curve.shift_ghz[i];
    if (shift == 0.0) continue;
    const auto mirror = detail::lerp_table(curve.shift_ghz, curve.value, -shift);
    if (!mirror) continue;
    const double stokes = shift < 0.0 ? curve.value[i] : *mirror;
    const double anti = shift < 0.0 ? *mirror : curve.value[i];
    if (stokes < anti * (1.0 - 1e-12)) {
      throw DomainError("Raman efficiency for pump " + format_nm(curve.pump_nm) +
                        " nm is larger on the anti-Stokes side at |shift| = " + detail::num(std::abs(shift)) +
                        " GHz");
    }
  }
}

SprsEfficiencyProfile SprsEfficiencyProfile::from_rows(std::span<const RawSprsRow> rows, EfficiencyUnit unit) {
  std::vector<SprsSample> samples;
  samples.reserve(rows.size());
  for (const auto& row : rows) {
    const auto pump = Wavelength::from_nm(row.pump_wavelength_nm);
    const auto shift = FrequencyShift::from_ghz(row.shift_ghz);
    double value = row.value;
    if (unit == EfficiencyUnit::db_per_km_ghz || unit == EfficiencyUnit::db_per_km_nm) {
      value = db_to_linear(value);
    }
    if (unit == EfficiencyUnit::per_km_nm || unit == EfficiencyUnit::db_per_km_nm) {
      // per nm -> per GHz: multiply by d(lambda)/d(nu) at the scattered wavelength.
      const auto scattered = to_wavelength(to_frequency(pump) + shift);
      value = psd_per_nm_to_per_hz(value, scattered) * 1e9;
    }
    samples.push_back({pump, shift, RamanEfficiency::from_per_km_ghz(value)});
  }
  return SprsEfficiencyProfile(std::move(samples));
}

const SprsEfficiencyProfile::Curve* SprsEfficiencyProfile::curve_at(double pump_nm) const noexcept {
  for (const auto& curve : curves_) {
    if (std::abs(curve.pump_nm - pump_nm) <= detail::edge_slack * curve.pump_nm) return &curve;
  }
  return nullptr;
}

bool SprsEfficiencyProfile::covers(Wavelength pump, FrequencyShift shift) const noexcept {
  if (curves_.empty()) return false;
  const double p = pump.nm();
  if (const auto* exact = curve_at(p)) return detail::within(exact->shift_ghz, shift.ghz());
  if (p < curves_.front().pump_nm || p > curves_.back().pump_nm) return false;
  const auto hi = std::upper_bound(curves_.begin(), curves_.end(), p,
                                   [](double value, const Curve& c) { return value < c.pump_nm; });
  const auto lo = hi - 1;
  return detail::within(lo->shift_ghz, shift.ghz()) && detail::within(hi->shift_ghz, shift.ghz());
}

RamanEfficiency SprsEfficiencyProfile::at(Wavelength pump, FrequencyShift shift) const {
  if (!covers(pump, shift)) {
    throw RangeError("pump " + format_nm(pump.nm()) + " nm, shift " + detail::num(shift.ghz()) +
                     " GHz outside " + describe_range());
  }
  const double p = pump.nm();
  if (const auto* exact = curve_at(p)) {
    return RamanEfficiency::from_per_km_ghz(*detail::lerp_table(exact->shift_ghz, exact->value, shift.ghz()));
  }
  const auto hi = std::upper_bound(curves_.begin(), curves_.end(), p,
                                   [](double value, const Curve& c) { return value < c.pump_nm; });
  const auto lo = hi - 1;
  const double v_lo = *detail::lerp_table(lo->shift_ghz, lo->value, shift.ghz());
  const double v_hi = *detail::lerp_table(hi->shift_ghz, hi->value, shift.ghz());
  const double t = (p - lo->pump_nm) / (hi->pump_nm - lo->pump_nm);
  return RamanEfficiency::from_per_km_ghz(std::max(0.0, v_lo + t * (v_hi - v_lo)));
}

std::vector<SprsSample> SprsEfficiencyProfile::samples() const {
  std::vector<SprsSample> out;
  for (const auto& curve : curves_) {
    for (std::size_t i = 0; i < curve.shift_ghz.size(); ++i) {
      out.push_back({Wavelength::from_nm(curve.pump_nm), FrequencyShift::from_ghz(curve.shift_ghz[i]),
                     RamanEfficiency::from_per_km_ghz(curve.value[i])});
    }
  }
  return out;
}

std::string SprsEfficiencyProfile::describe_range() const {
  if (curves_.empty()) return "SpRS efficiency profile (empty)";
  std::ostringstream out;
  out << "SpRS efficiency profile (pumps [" << curves_.front().pump_nm << ", " << curves_.back().pump_nm
      << "] nm";
  for (const auto& curve : curves_) {
    out << "; " << curve.pump_nm << " nm: shifts [" << curve.shift_ghz.front() << ", " << curve.shift_ghz.back()
        << "] GHz";
  }
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// CSV ingestion

AttenuationProfile read_attenuation_csv(std::istream& in, std::string_view source) {
  const auto table = read_numeric_csv(in, source, 2);
  expect_column(table, 0, "wavelength_nm", source);
  expect_column(table, 1, "attenuation_db_per_km", source);
  std::vector<AttenuationSample> samples;
  for (const auto& row : table.rows) {
    samples.push_back({Wavelength::from_nm(row[0]), Attenuation::from_db_per_km(row[1])});
  }
  return AttenuationProfile(std::move(samples));
}

AttenuationProfile load_attenuation_csv(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_attenuation_csv(in, path.string());
}

SprsEfficiencyProfile read_sprs_csv(std::istream& in, std::string_view source) {
  const auto table = read_numeric_csv(in, source, 3);
  expect_column(table, 0, "pump_wavelength_nm", source);
  expect_column(table, 1, "shift_ghz", source);
  const auto unit = parse_efficiency_unit(table.header[2]);
  std::vector<RawSprsRow> rows;
  for (const auto& row : table.rows) rows.push_back({row[0], row[1], row[2]});
  return SprsEfficiencyProfile::from_rows(rows, unit);
}

SprsEfficiencyProfile load_sprs_csv(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_sprs_csv(in, path.string());
}

}  // namespace qcoex
