#pragma once

// Measured fiber profiles: attenuation versus wavelength and spontaneous
// Raman efficiency versus (pump wavelength, frequency shift).
//
// Both are stored in linear units and interpolated piecewise-linearly in
// those units. Queries outside the sampled range throw RangeError; there is
// no extrapolation.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcoex/units.hpp"

namespace qcoex {

struct AttenuationSample {
  Wavelength wavelength;
  Attenuation attenuation;
};

class AttenuationProfile {
 public:
  /// Samples must have strictly increasing wavelengths and attenuation > 0.
  explicit AttenuationProfile(std::vector<AttenuationSample> samples);

  /// Two-point profile with the same attenuation over [lo, hi].
  static AttenuationProfile flat(Attenuation attenuation, Wavelength lo, Wavelength hi);

  Attenuation at(Wavelength wavelength) const;
  Attenuation at(Frequency frequency) const { return at(to_wavelength(frequency)); }
  bool covers(Wavelength wavelength) const noexcept;
  bool covers(Frequency frequency) const { return covers(to_wavelength(frequency)); }

  Wavelength min_wavelength() const noexcept { return samples_.front().wavelength; }
  Wavelength max_wavelength() const noexcept { return samples_.back().wavelength; }
  std::span<const AttenuationSample> samples() const noexcept { return samples_; }

  /// e.g. "attenuation profile [1340, 1690] nm"
  std::string describe_range() const;

 private:
  std::vector<AttenuationSample> samples_;
  std::vector<double> wavelength_nm_;
  std::vector<double> nepers_per_km_;
};

/// Units accepted when ingesting Raman efficiency tables. Per-nm forms are
/// per nm of receiver bandwidth at the scattered (quantum) wavelength.
enum class EfficiencyUnit {
  per_km_ghz,
  db_per_km_ghz,
  per_km_nm,
  db_per_km_nm,
};

/// Column name used for a unit in CSV headers, e.g. "efficiency_db_per_km_ghz".
std::string_view efficiency_column(EfficiencyUnit unit);
/// Parses "db_per_km_ghz" or "efficiency_db_per_km_ghz" style names.
EfficiencyUnit parse_efficiency_unit(std::string_view name);

struct SprsSample {
  Wavelength pump;
  FrequencyShift shift;  // f_quantum - f_pump; negative is Stokes
  RamanEfficiency efficiency;
};

/// One row of a Raman table before unit conversion.
struct RawSprsRow {
  double pump_wavelength_nm;
  double shift_ghz;
  double value;
};

class SprsEfficiencyProfile {
 public:
  /// Empty profile: covers nothing.
  SprsEfficiencyProfile() = default;

  /// Samples in canonical units. Within each pump wavelength, shifts must be
  /// unique. Where both sides of a pump curve are tabulated, the Stokes
  /// value must be >= the anti-Stokes value at equal |shift|.
  explicit SprsEfficiencyProfile(std::vector<SprsSample> samples);

  static SprsEfficiencyProfile from_rows(std::span<const RawSprsRow> rows, EfficiencyUnit unit);

  /// Interpolates along shift on the bracketing pump curves, then linearly
  /// in pump wavelength. Throws RangeError outside the tabulated domain.
  RamanEfficiency at(Wavelength pump, FrequencyShift shift) const;
  bool covers(Wavelength pump, FrequencyShift shift) const noexcept;

  bool empty() const noexcept { return curves_.empty(); }
  bool has_stokes_side() const noexcept { return has_stokes_; }
  bool has_anti_stokes_side() const noexcept { return has_anti_stokes_; }

  std::vector<SprsSample> samples() const;
  std::string describe_range() const;

 private:
  struct Curve {
    double pump_nm;
    std::vector<double> shift_ghz;
    std::vector<double> value;
  };

  const Curve* curve_at(double pump_nm) const noexcept;
  void check_stokes_dominance(const Curve& curve) const;

  std::vector<Curve> curves_;  // ordered by pump wavelength
  bool has_stokes_ = false;
  bool has_anti_stokes_ = false;
};

/// CSV with header `wavelength_nm,attenuation_db_per_km`. Lines starting
/// with '#' and blank lines are ignored.
AttenuationProfile read_attenuation_csv(std::istream& in, std::string_view source = "<stream>");
AttenuationProfile load_attenuation_csv(const std::filesystem::path& path);

/// CSV with header `pump_wavelength_nm,shift_ghz,<efficiency column>` where
/// the third column names the unit (see efficiency_column()).
SprsEfficiencyProfile read_sprs_csv(std::istream& in, std::string_view source = "<stream>");
SprsEfficiencyProfile load_sprs_csv(const std::filesystem::path& path);

}  // namespace qcoex
