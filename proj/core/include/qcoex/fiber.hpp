#pragma once

#include "qcoex/profiles.hpp"
#include "qcoex/units.hpp"

namespace qcoex {

/// Scalar fiber constants. The Rayleigh default is the per-km efficiency
/// measured on standard single-mode fiber; temperature feeds the phonon
/// statistics used to synthesize anti-Stokes Raman efficiency.
struct FiberConstants {
  RayleighEfficiency rayleigh = RayleighEfficiency::from_db_per_km(constants::default_rayleigh_db_per_km);
  Dispersion beta2 = Dispersion::from_ps2_per_km(0.0);
  Nonlinearity gamma = Nonlinearity::from_per_w_km(0.0);
  Temperature temperature = Temperature::from_kelvin(295.0);
};

/// A uniform fiber span. Attenuation depends on wavelength but not on position.
class FiberSpec {
 public:
  /// Throws DomainError when length is not > 0.
  FiberSpec(Length length, AttenuationProfile attenuation, SprsEfficiencyProfile sprs = {},
            FiberConstants constants = {});

  Length length() const noexcept { return length_; }
  const AttenuationProfile& attenuation() const noexcept { return attenuation_; }
  const SprsEfficiencyProfile& sprs() const noexcept { return sprs_; }
  const FiberConstants& constants() const noexcept { return constants_; }
  RayleighEfficiency rayleigh() const noexcept { return constants_.rayleigh; }
  Dispersion beta2() const noexcept { return constants_.beta2; }
  Nonlinearity gamma() const noexcept { return constants_.gamma; }
  Temperature temperature() const noexcept { return constants_.temperature; }

  FiberSpec with_length(Length length) const;
  FiberSpec with_sprs(SprsEfficiencyProfile sprs) const;
  FiberSpec with_constants(FiberConstants constants) const;

 private:
  Length length_;
  AttenuationProfile attenuation_;
  SprsEfficiencyProfile sprs_;
  FiberConstants constants_;
};

}  // namespace qcoex
