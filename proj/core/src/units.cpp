#include "qcoex/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcoex/errors.hpp"

namespace qcoex {
namespace {

// Speed of light in nm/s, the natural unit for lambda^2 / c in nm/Hz.
constexpr double c_nm_per_s = constants::speed_of_light * 1e9;
constexpr double nepers_per_db = std::numbers::ln10 / 10.0;

double require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite, got " + detail::num(value));
  }
  return value;
}

double require_positive(double value, const char* what) {
  if (!(require_finite(value, what) > 0.0)) {
    throw DomainError(std::string(what) + " must be > 0, got " + detail::num(value));
  }
  return value;
}

double require_non_negative(double value, const char* what) {
  if (!(require_finite(value, what) >= 0.0)) {
    throw DomainError(std::string(what) + " must be >= 0, got " + detail::num(value));
  }
  return value;
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, require_finite(db, "dB value") / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(require_positive(linear, "linear ratio")); }

double dbm_to_watts(double dbm) { return 1e-3 * db_to_linear(dbm); }

double watts_to_dbm(double watts) { return linear_to_db(require_positive(watts, "power in W") * 1e3); }

Frequency Frequency::from_thz(double thz) { return Frequency(require_positive(thz, "frequency")); }

FrequencyShift FrequencyShift::from_ghz(double ghz) {
  return FrequencyShift(require_finite(ghz, "frequency shift"));
}

FrequencyShift operator-(Frequency lhs, Frequency rhs) { return FrequencyShift::from_thz(lhs.thz() - rhs.thz()); }

Frequency operator+(Frequency base, FrequencyShift shift) { return Frequency::from_thz(base.thz() + shift.thz()); }

Wavelength Wavelength::from_nm(double nm) { return Wavelength(require_positive(nm, "wavelength")); }

// f[THz] = c / lambda = (c [m/s] / (lambda [nm] * 1e-9)) * 1e-12.
Frequency to_frequency(Wavelength wavelength) {
  return Frequency::from_thz(constants::speed_of_light * 1e-3 / wavelength.nm());
}

Wavelength to_wavelength(Frequency frequency) {
  return Wavelength::from_nm(constants::speed_of_light * 1e-3 / frequency.thz());
}

Bandwidth Bandwidth::from_ghz(double ghz) { return Bandwidth(require_positive(ghz, "bandwidth")); }

Length Length::from_km(double km) { return Length(require_non_negative(km, "length")); }

Power Power::from_watts(double watts) { return Power(require_non_negative(watts, "power")); }

Power operator*(Power power, double factor) {
  return Power(power.watts_ * require_non_negative(factor, "power scale factor"));
}

PowerDensity PowerDensity::from_w_per_hz(double w_per_hz) {
  return PowerDensity(require_non_negative(w_per_hz, "power spectral density"));
}

PowerDensity PowerDensity::from_dbm_per_ghz(double dbm_per_ghz) {
  return PowerDensity(dbm_to_watts(dbm_per_ghz) * 1e-9);
}

PowerDensity PowerDensity::from_w_per_nm(double w_per_nm, Wavelength at) {
  return from_w_per_hz(psd_per_nm_to_per_hz(w_per_nm, at));
}

PowerDensity PowerDensity::from_dbm_per_nm(double dbm_per_nm, Wavelength at) {
  return from_w_per_nm(dbm_to_watts(dbm_per_nm), at);
}

double PowerDensity::dbm_per_ghz() const { return watts_to_dbm(w_per_hz_ * 1e9); }

double PowerDensity::w_per_nm(Wavelength at) const { return psd_per_hz_to_per_nm(w_per_hz_, at); }

double PowerDensity::dbm_per_nm(Wavelength at) const { return watts_to_dbm(w_per_nm(at)); }

PowerDensity operator*(PowerDensity density, double factor) {
  return PowerDensity(density.w_per_hz_ * require_non_negative(factor, "density scale factor"));
}

Power operator*(PowerDensity density, Bandwidth bandwidth) {
  return Power::from_watts(density.w_per_hz() * bandwidth.hz());
}

PowerDensity operator/(Power power, Bandwidth bandwidth) {
  return PowerDensity::from_w_per_hz(power.watts() / bandwidth.hz());
}

// |d lambda / d nu| = lambda^2 / c, here in nm/Hz.
double psd_per_nm_to_per_hz(double w_per_nm, Wavelength at) {
  return w_per_nm * at.nm() * at.nm() / c_nm_per_s;
}

double psd_per_hz_to_per_nm(double w_per_hz, Wavelength at) {
  return w_per_hz * c_nm_per_s / (at.nm() * at.nm());
}

Attenuation Attenuation::from_db_per_km(double db_per_km) {
  return Attenuation(require_non_negative(db_per_km, "attenuation") * nepers_per_db);
}

Attenuation Attenuation::from_nepers_per_km(double nepers_per_km) {
  return Attenuation(require_non_negative(nepers_per_km, "attenuation"));
}

double Attenuation::db_per_km() const noexcept { return nepers_ / nepers_per_db; }

RamanEfficiency RamanEfficiency::from_per_km_ghz(double value) {
  return RamanEfficiency(require_non_negative(value, "Raman efficiency"));
}

RayleighEfficiency RayleighEfficiency::from_per_km(double value) {
  return RayleighEfficiency(require_positive(value, "Rayleigh efficiency"));
}

Dispersion Dispersion::from_ps2_per_km(double value) { return Dispersion(require_finite(value, "beta2")); }

Nonlinearity Nonlinearity::from_per_w_km(double value) {
  return Nonlinearity(require_non_negative(value, "gamma"));
}

Temperature Temperature::from_kelvin(double kelvin) { return Temperature(require_positive(kelvin, "temperature")); }

PhaseMismatch PhaseMismatch::from_rad_per_km(double value) {
  return PhaseMismatch(require_finite(value, "phase mismatch"));
}

}  // namespace qcoex
