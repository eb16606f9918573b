#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qcoex/errors.hpp"
#include "qcoex/units.hpp"

using namespace qcoex;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Units, QuantumWavelength) {
  EXPECT_NEAR(to_frequency(Wavelength::from_nm(1539.8)).thz(), 194.70, 0.01);
  EXPECT_NEAR(to_frequency(Wavelength::from_nm(1539.8)).thz(), 194.695712430185738, 1e-12);
}

TEST(Units, WavelengthFrequencyRoundTrip) {
  for (double nm : {1260.0, 1350.0, 1539.8, 1550.0, 1680.0}) {
    const auto back = to_wavelength(to_frequency(Wavelength::from_nm(nm)));
    EXPECT_LT(rel(back.nm(), nm), 1e-12) << nm;
  }
  EXPECT_NEAR(to_frequency(Wavelength::from_nm(1550.0)).thz(), 193.414489032258065, 1e-12);
}

TEST(Units, NonPositiveWavelengthRejected) {
  EXPECT_THROW(Wavelength::from_nm(0.0), DomainError);
  EXPECT_THROW(Wavelength::from_nm(-1550.0), DomainError);
  EXPECT_THROW(Frequency::from_thz(0.0), DomainError);
  EXPECT_THROW(Wavelength::from_nm(std::nan("")), DomainError);
}

TEST(Units, DbmWatts) {
  EXPECT_DOUBLE_EQ(dbm_to_watts(0.0), 1e-3);
  EXPECT_NEAR(dbm_to_watts(6.0), 3.98107170553497259e-3, 1e-17);
  for (double dbm : {-90.0, -3.0, 0.0, 6.0, 27.5}) {
    EXPECT_NEAR(watts_to_dbm(dbm_to_watts(dbm)), dbm, 1e-12 * std::max(1.0, std::abs(dbm)));
    EXPECT_LT(rel(dbm_to_watts(watts_to_dbm(dbm_to_watts(dbm))), dbm_to_watts(dbm)), 1e-12);
  }
  EXPECT_THROW(watts_to_dbm(0.0), DomainError);
  EXPECT_THROW(watts_to_dbm(-1.0), DomainError);
  EXPECT_THROW(Power::from_watts(-1e-3), DomainError);
}

TEST(Units, RayleighLinear) {
  EXPECT_NEAR(db_to_linear(-42.32), 5.86138164514028741e-5, 1e-18);
  EXPECT_NEAR(RayleighEfficiency::from_db_per_km(-42.32).per_km(), 5.86e-5, 1e-7);
}

TEST(Units, PsdPerNmToPerHz) {
  const auto at = Wavelength::from_nm(1550.0);
  EXPECT_LT(rel(psd_per_nm_to_per_hz(1.0, at), 8.01387738713560299e-12), 1e-12);
  EXPECT_EQ(psd_per_nm_to_per_hz(0.0, at), 0.0);
  for (double w : {1e-9, 0.37, 12.0}) EXPECT_LT(rel(psd_per_hz_to_per_nm(psd_per_nm_to_per_hz(w, at), at), w), 1e-12);
  const auto d = PowerDensity::from_dbm_per_nm(-20.0, at);
  EXPECT_LT(rel(d.dbm_per_nm(at), -20.0), 1e-12);
  EXPECT_LT(rel(PowerDensity::from_dbm_per_ghz(-16.0).dbm_per_ghz(), -16.0), 1e-12);
}

TEST(Units, AttenuationNepers) {
  const auto a = Attenuation::from_db_per_km(0.2);
  EXPECT_NEAR(a.nepers_per_km(), 0.2 * std::log(10.0) / 10.0, 1e-17);
  EXPECT_LT(rel(a.db_per_km(), 0.2), 1e-12);
  EXPECT_THROW(Attenuation::from_db_per_km(-0.1), DomainError);
}

TEST(Units, ShiftSignConvention) {
  const auto pump = Frequency::from_thz(193.0);
  const auto stokes = Frequency::from_thz(180.0) - pump;
  EXPECT_TRUE(stokes.is_stokes());
  EXPECT_NEAR(stokes.ghz(), -13000.0, 1e-9);
  EXPECT_FALSE((-stokes).is_stokes());
  EXPECT_NEAR((pump + stokes).thz(), 180.0, 1e-12);
}

TEST(Units, PowerDensityTimesBandwidth) {
  const auto p = PowerDensity::from_w_per_hz(1e-18) * Bandwidth::from_ghz(10.0);
  EXPECT_DOUBLE_EQ(p.watts(), 1e-8);
  EXPECT_DOUBLE_EQ((p / Bandwidth::from_ghz(10.0)).w_per_hz(), 1e-18);
}

TEST(Units, ConstructorInvariants) {
  EXPECT_THROW(Bandwidth::from_ghz(0.0), DomainError);
  EXPECT_THROW(Length::from_km(-1.0), DomainError);
  EXPECT_NO_THROW(Length::from_km(0.0));
  EXPECT_THROW(Temperature::from_kelvin(0.0), DomainError);
  EXPECT_THROW(Nonlinearity::from_per_w_km(-0.1), DomainError);
  EXPECT_THROW(RamanEfficiency::from_per_km_ghz(-1e-12), DomainError);
  EXPECT_THROW(PowerDensity::from_w_per_hz(-1.0), DomainError);
}
