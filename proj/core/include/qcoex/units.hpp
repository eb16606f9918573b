#pragma once

// Unit-carrying scalar types for spectral quantities.
//
// Every type stores one canonical unit internally and exposes named
// factories/accessors for the others. Frequencies are vacuum frequencies and
// wavelengths are vacuum wavelengths: f = c / lambda.

#include <compare>

namespace qcoex {

namespace constants {
inline constexpr double speed_of_light = 299792458.0;       // m/s
inline constexpr double planck = 6.62607015e-34;            // J s
inline constexpr double boltzmann = 1.380649e-23;           // J/K
inline constexpr double default_rayleigh_db_per_km = -42.32;
}  // namespace constants

double db_to_linear(double db);
/// Throws DomainError for non-positive input.
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
/// Throws DomainError for non-positive input.
double watts_to_dbm(double watts);

class Wavelength;

/// Optical frequency, strictly positive. Canonical unit: THz.
class Frequency {
 public:
  static Frequency from_thz(double thz);
  static Frequency from_ghz(double ghz) { return from_thz(ghz * 1e-3); }
  static Frequency from_hz(double hz) { return from_thz(hz * 1e-12); }

  double thz() const noexcept { return thz_; }
  double ghz() const noexcept { return thz_ * 1e3; }
  double hz() const noexcept { return thz_ * 1e12; }

  friend auto operator<=>(const Frequency&, const Frequency&) = default;

 private:
  explicit Frequency(double thz) : thz_(thz) {}
  double thz_;
};

/// Signed frequency offset. Canonical unit: GHz.
///
/// Raman shifts use the convention shift = f_quantum - f_pump, so a negative
/// shift is the Stokes side (quantum channel below the pump).
class FrequencyShift {
 public:
  static FrequencyShift from_ghz(double ghz);
  static FrequencyShift from_thz(double thz) { return from_ghz(thz * 1e3); }

  double ghz() const noexcept { return ghz_; }
  double thz() const noexcept { return ghz_ * 1e-3; }
  double hz() const noexcept { return ghz_ * 1e9; }

  bool is_stokes() const noexcept { return ghz_ < 0.0; }
  FrequencyShift magnitude() const noexcept { return FrequencyShift(ghz_ < 0.0 ? -ghz_ : ghz_); }
  FrequencyShift operator-() const noexcept { return FrequencyShift(-ghz_); }

  friend auto operator<=>(const FrequencyShift&, const FrequencyShift&) = default;

 private:
  explicit FrequencyShift(double ghz) : ghz_(ghz) {}
  double ghz_;
};

FrequencyShift operator-(Frequency lhs, Frequency rhs);
/// Throws DomainError when the result is not a positive frequency.
Frequency operator+(Frequency base, FrequencyShift shift);

/// Vacuum wavelength, strictly positive. Canonical unit: nm.
class Wavelength {
 public:
  static Wavelength from_nm(double nm);
  static Wavelength from_m(double m) { return from_nm(m * 1e9); }

  double nm() const noexcept { return nm_; }
  double m() const noexcept { return nm_ * 1e-9; }

  friend auto operator<=>(const Wavelength&, const Wavelength&) = default;

 private:
  explicit Wavelength(double nm) : nm_(nm) {}
  double nm_;
};

Frequency to_frequency(Wavelength wavelength);
Wavelength to_wavelength(Frequency frequency);

/// Filter or slice bandwidth, strictly positive. Canonical unit: GHz.
class Bandwidth {
 public:
  static Bandwidth from_ghz(double ghz);
  static Bandwidth from_thz(double thz) { return from_ghz(thz * 1e3); }

  double ghz() const noexcept { return ghz_; }
  double thz() const noexcept { return ghz_ * 1e-3; }
  double hz() const noexcept { return ghz_ * 1e9; }

  friend auto operator<=>(const Bandwidth&, const Bandwidth&) = default;

 private:
  explicit Bandwidth(double ghz) : ghz_(ghz) {}
  double ghz_;
};

/// Fiber length, non-negative. Canonical unit: km.
class Length {
 public:
  static Length from_km(double km);

  double km() const noexcept { return km_; }

  friend auto operator<=>(const Length&, const Length&) = default;

 private:
  explicit Length(double km) : km_(km) {}
  double km_;
};

/// Optical power, non-negative. Canonical unit: W.
class Power {
 public:
  static Power from_watts(double watts);
  static Power from_dbm(double dbm) { return from_watts(dbm_to_watts(dbm)); }
  static Power zero() { return Power(0.0); }

  double watts() const noexcept { return watts_; }
  /// Throws DomainError for zero power.
  double dbm() const { return watts_to_dbm(watts_); }

  Power& operator+=(Power other) noexcept {
    watts_ += other.watts_;
    return *this;
  }
  friend Power operator+(Power lhs, Power rhs) noexcept { return lhs += rhs; }
  /// Throws DomainError for a negative factor.
  friend Power operator*(Power power, double factor);
  friend Power operator*(double factor, Power power) { return power * factor; }

  friend auto operator<=>(const Power&, const Power&) = default;

 private:
  explicit Power(double watts) : watts_(watts) {}
  double watts_;
};

/// Power spectral density, non-negative. Canonical unit: W/Hz.
class PowerDensity {
 public:
  static PowerDensity from_w_per_hz(double w_per_hz);
  static PowerDensity from_dbm_per_ghz(double dbm_per_ghz);
  /// The per-nm forms depend on the wavelength at which the density is quoted.
  static PowerDensity from_w_per_nm(double w_per_nm, Wavelength at);
  static PowerDensity from_dbm_per_nm(double dbm_per_nm, Wavelength at);
  static PowerDensity zero() { return PowerDensity(0.0); }

  double w_per_hz() const noexcept { return w_per_hz_; }
  double dbm_per_ghz() const;
  double w_per_nm(Wavelength at) const;
  double dbm_per_nm(Wavelength at) const;

  PowerDensity& operator+=(PowerDensity other) noexcept {
    w_per_hz_ += other.w_per_hz_;
    return *this;
  }
  friend PowerDensity operator+(PowerDensity lhs, PowerDensity rhs) noexcept { return lhs += rhs; }
  friend PowerDensity operator*(PowerDensity density, double factor);
  friend PowerDensity operator*(double factor, PowerDensity density) { return density * factor; }

  friend auto operator<=>(const PowerDensity&, const PowerDensity&) = default;

 private:
  explicit PowerDensity(double w_per_hz) : w_per_hz_(w_per_hz) {}
  double w_per_hz_;
};

/// In-band power of a rectangular filter.
Power operator*(PowerDensity density, Bandwidth bandwidth);
PowerDensity operator/(Power power, Bandwidth bandwidth);

/// W/nm -> W/Hz at the given wavelength (multiplies by lambda^2 / c).
double psd_per_nm_to_per_hz(double w_per_nm, Wavelength at);
double psd_per_hz_to_per_nm(double w_per_hz, Wavelength at);

/// Power attenuation coefficient, non-negative. Canonical unit: nepers/km
/// (power decays as exp(-alpha z)).
class Attenuation {
 public:
  static Attenuation from_db_per_km(double db_per_km);
  static Attenuation from_nepers_per_km(double nepers_per_km);

  double nepers_per_km() const noexcept { return nepers_; }
  double db_per_km() const noexcept;

  friend auto operator<=>(const Attenuation&, const Attenuation&) = default;

 private:
  explicit Attenuation(double nepers) : nepers_(nepers) {}
  double nepers_;
};

/// Spontaneous Raman scattering efficiency, non-negative. Canonical unit:
/// linear 1/(km GHz): scattered power per unit pump power, per km of fiber,
/// per GHz of receiver bandwidth.
class RamanEfficiency {
 public:
  static RamanEfficiency from_per_km_ghz(double value);
  static RamanEfficiency from_db_per_km_ghz(double db) { return from_per_km_ghz(db_to_linear(db)); }
  static RamanEfficiency zero() { return RamanEfficiency(0.0); }

  double per_km_ghz() const noexcept { return value_; }

  friend auto operator<=>(const RamanEfficiency&, const RamanEfficiency&) = default;

 private:
  explicit RamanEfficiency(double value) : value_(value) {}
  double value_;
};

/// Rayleigh backscatter efficiency (scatter + recapture) per km of fiber.
/// Canonical unit: linear 1/km, strictly positive.
class RayleighEfficiency {
 public:
  static RayleighEfficiency from_db_per_km(double db) { return from_per_km(db_to_linear(db)); }
  static RayleighEfficiency from_per_km(double value);

  double per_km() const noexcept { return value_; }
  double db_per_km() const { return linear_to_db(value_); }

  friend auto operator<=>(const RayleighEfficiency&, const RayleighEfficiency&) = default;

 private:
  explicit RayleighEfficiency(double value) : value_(value) {}
  double value_;
};

/// Group-velocity dispersion beta2. Canonical unit: ps^2/km.
class Dispersion {
 public:
  static Dispersion from_ps2_per_km(double value);

  double ps2_per_km() const noexcept { return value_; }

  friend auto operator<=>(const Dispersion&, const Dispersion&) = default;

 private:
  explicit Dispersion(double value) : value_(value) {}
  double value_;
};

/// Kerr nonlinearity coefficient gamma, non-negative. Canonical unit: 1/(W km).
class Nonlinearity {
 public:
  static Nonlinearity from_per_w_km(double value);

  double per_w_km() const noexcept { return value_; }

  friend auto operator<=>(const Nonlinearity&, const Nonlinearity&) = default;

 private:
  explicit Nonlinearity(double value) : value_(value) {}
  double value_;
};

/// Absolute temperature, strictly positive. Canonical unit: K.
class Temperature {
 public:
  static Temperature from_kelvin(double kelvin);

  double kelvin() const noexcept { return kelvin_; }

  friend auto operator<=>(const Temperature&, const Temperature&) = default;

 private:
  explicit Temperature(double kelvin) : kelvin_(kelvin) {}
  double kelvin_;
};

/// Propagation-constant mismatch of a four-wave-mixing triple. Canonical unit: rad/km.
class PhaseMismatch {
 public:
  static PhaseMismatch from_rad_per_km(double value);

  double rad_per_km() const noexcept { return value_; }

  friend auto operator<=>(const PhaseMismatch&, const PhaseMismatch&) = default;

 private:
  explicit PhaseMismatch(double value) : value_(value) {}
  double value_;
};

}  // namespace qcoex
