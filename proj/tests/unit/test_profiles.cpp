#include <gtest/gtest.h>

#include <sstream>

#include "qcoex/errors.hpp"
#include "qcoex/profiles.hpp"
#include "qcoex/sprs.hpp"

using namespace qcoex;

namespace {

AttenuationProfile three_point() {
  return AttenuationProfile({{Wavelength::from_nm(1450.0), Attenuation::from_db_per_km(0.25)},
                             {Wavelength::from_nm(1550.0), Attenuation::from_db_per_km(0.19)},
                             {Wavelength::from_nm(1650.0), Attenuation::from_db_per_km(0.23)}});
}

}  // namespace

TEST(AttenuationProfile, ExactAtSamples) {
  const auto p = three_point();
  EXPECT_DOUBLE_EQ(p.at(Wavelength::from_nm(1550.0)).nepers_per_km(),
                   Attenuation::from_db_per_km(0.19).nepers_per_km());
  EXPECT_DOUBLE_EQ(p.at(Wavelength::from_nm(1450.0)).nepers_per_km(),
                   Attenuation::from_db_per_km(0.25).nepers_per_km());
}

TEST(AttenuationProfile, MidpointIsMeanOfLinearValues) {
  const auto p = three_point();
  const double expected = 0.5 * (Attenuation::from_db_per_km(0.25).nepers_per_km() +
                                 Attenuation::from_db_per_km(0.19).nepers_per_km());
  EXPECT_NEAR(p.at(Wavelength::from_nm(1500.0)).nepers_per_km(), expected, 1e-17);
}

TEST(AttenuationProfile, OutOfRangeThrowsWithRange) {
  const auto p = three_point();
  try {
    p.at(Wavelength::from_nm(1310.0));
    FAIL() << "expected RangeError";
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("[1450, 1650] nm"), std::string::npos) << e.what();
  }
  EXPECT_THROW(p.at(Wavelength::from_nm(1650.5)), RangeError);
  EXPECT_FALSE(p.covers(Wavelength::from_nm(1449.0)));
  EXPECT_TRUE(p.covers(to_frequency(Wavelength::from_nm(1650.0))));
}

TEST(AttenuationProfile, RejectsBadTables) {
  EXPECT_THROW(AttenuationProfile({{Wavelength::from_nm(1550.0), Attenuation::from_db_per_km(0.2)},
                                   {Wavelength::from_nm(1500.0), Attenuation::from_db_per_km(0.2)}}),
               DomainError);
  EXPECT_THROW(AttenuationProfile({{Wavelength::from_nm(1500.0), Attenuation::from_db_per_km(0.0)},
                                   {Wavelength::from_nm(1550.0), Attenuation::from_db_per_km(0.2)}}),
               DomainError);
  EXPECT_THROW(AttenuationProfile({}), DomainError);
}

TEST(AttenuationProfile, CsvIngestion) {
  std::istringstream in(
      "\xEF\xBB\xBF# measured spool\n"
      "wavelength_nm,attenuation_db_per_km\n"
      "\n"
      "1350, 0.32\n"
      "1550,0.19\n");
  const auto p = read_attenuation_csv(in);
  ASSERT_EQ(p.samples().size(), 2u);
  EXPECT_NEAR(p.at(Wavelength::from_nm(1350.0)).db_per_km(), 0.32, 1e-12);
}

TEST(AttenuationProfile, CsvErrors) {
  std::istringstream wrong_header("lambda,alpha\n1550,0.2\n");
  EXPECT_THROW(read_attenuation_csv(wrong_header), ParseError);
  std::istringstream bad_number("wavelength_nm,attenuation_db_per_km\n1550,0,2\n");
  EXPECT_THROW(read_attenuation_csv(bad_number), ParseError);
  std::istringstream not_number("wavelength_nm,attenuation_db_per_km\n1550,abc\n");
  EXPECT_THROW(read_attenuation_csv(not_number), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_attenuation_csv(empty), ParseError);
  EXPECT_THROW(load_attenuation_csv("/nonexistent/attenuation.csv"), ParseError);
}

TEST(SprsProfile, InterpolatesShiftThenPump) {
  const std::vector<RawSprsRow> rows = {{1500, -1000, 4e-10}, {1500, 1000, 2e-10},
                                        {1600, -1000, 2e-10}, {1600, 1000, 1e-10}};
  const auto p = SprsEfficiencyProfile::from_rows(rows, EfficiencyUnit::per_km_ghz);
  EXPECT_DOUBLE_EQ(p.at(Wavelength::from_nm(1500), FrequencyShift::from_ghz(-1000)).per_km_ghz(), 4e-10);
  EXPECT_NEAR(p.at(Wavelength::from_nm(1500), FrequencyShift::from_ghz(0)).per_km_ghz(), 3e-10, 1e-24);
  EXPECT_NEAR(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(-1000)).per_km_ghz(), 3e-10, 1e-24);
  EXPECT_NEAR(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(500)).per_km_ghz(),
              0.5 * (0.5 * (3e-10 + 2e-10) + 0.5 * (1.5e-10 + 1e-10)), 1e-24);
  EXPECT_THROW(p.at(Wavelength::from_nm(1650), FrequencyShift::from_ghz(0)), RangeError);
  EXPECT_THROW(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(1001)), RangeError);
}

TEST(SprsProfile, DbAndPerNmUnits) {
  const std::vector<RawSprsRow> db = {{1550, -100, -100.0}, {1550, 100, -103.0}};
  const auto p = SprsEfficiencyProfile::from_rows(db, EfficiencyUnit::db_per_km_ghz);
  EXPECT_NEAR(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(-100)).per_km_ghz(), 1e-10, 1e-22);

  // 1 per (km nm) at the scattered wavelength is lambda^2/c per (km Hz).
  const std::vector<RawSprsRow> per_nm = {{1550, -100, 1.0}, {1550, 100, 0.5}};
  const auto q = SprsEfficiencyProfile::from_rows(per_nm, EfficiencyUnit::per_km_nm);
  const auto scattered = to_wavelength(to_frequency(Wavelength::from_nm(1550)) + FrequencyShift::from_ghz(-100));
  EXPECT_NEAR(q.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(-100)).per_km_ghz(),
              psd_per_nm_to_per_hz(1.0, scattered) * 1e9, 1e-18);
  EXPECT_EQ(parse_efficiency_unit("efficiency_db_per_km_ghz"), EfficiencyUnit::db_per_km_ghz);
  EXPECT_EQ(parse_efficiency_unit("per_km_nm"), EfficiencyUnit::per_km_nm);
  EXPECT_THROW(parse_efficiency_unit("furlongs"), ParseError);
}

TEST(SprsProfile, StokesMustDominate) {
  const std::vector<RawSprsRow> rows = {{1550, -100, 1e-10}, {1550, 100, 2e-10}};
  EXPECT_THROW(SprsEfficiencyProfile::from_rows(rows, EfficiencyUnit::per_km_ghz), DomainError);
  const std::vector<RawSprsRow> dup = {{1550, -100, 1e-10}, {1550, -100, 2e-10}};
  EXPECT_THROW(SprsEfficiencyProfile::from_rows(dup, EfficiencyUnit::per_km_ghz), DomainError);
  const std::vector<RawSprsRow> negative = {{1550, -100, -1e-10}};
  EXPECT_THROW(SprsEfficiencyProfile::from_rows(negative, EfficiencyUnit::per_km_ghz), DomainError);
}

TEST(SprsProfile, CsvIngestion) {
  std::istringstream in(
      "pump_wavelength_nm,shift_ghz,efficiency_db_per_km_ghz\n"
      "# Stokes side only\n"
      "1550,-13200,-95\n"
      "1550,-100,-110\n");
  const auto p = read_sprs_csv(in);
  EXPECT_TRUE(p.has_stokes_side());
  EXPECT_FALSE(p.has_anti_stokes_side());
  EXPECT_NEAR(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(-13200)).per_km_ghz(),
              db_to_linear(-95.0), 1e-22);
  std::istringstream bad("pump_wavelength_nm,shift_ghz,efficiency_w\n1550,-100,1\n");
  EXPECT_THROW(read_sprs_csv(bad), ParseError);
}

TEST(SprsProfile, EmptyCoversNothing) {
  const SprsEfficiencyProfile p;
  EXPECT_TRUE(p.empty());
  EXPECT_FALSE(p.covers(Wavelength::from_nm(1550), FrequencyShift::from_ghz(0)));
  EXPECT_THROW(p.at(Wavelength::from_nm(1550), FrequencyShift::from_ghz(0)), RangeError);
}
