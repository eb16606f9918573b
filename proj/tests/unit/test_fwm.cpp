#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcoex/errors.hpp"
#include "qcoex/fwm.hpp"

using namespace qcoex;

namespace {

const auto beta2 = Dispersion::from_ps2_per_km(-21.1);
const auto f_q = Frequency::from_thz(194.7);
const QuantumChannel q{f_q, Bandwidth::from_ghz(10.0)};

std::vector<PumpChannel> tone_plan(double dbm = 0.0) {
  std::vector<PumpChannel> plan;
  for (double offset : {-100.0, -50.0, 50.0, 100.0}) {
    plan.push_back(cw_channel(std::to_string(offset), f_q + FrequencyShift::from_ghz(offset), Power::from_dbm(dbm),
                              Direction::co));
  }
  return plan;
}

FiberSpec smf_fiber(double km) {
  FiberConstants c;
  c.beta2 = beta2;
  c.gamma = Nonlinearity::from_per_w_km(1.3);
  return FiberSpec(Length::from_km(km),
                   AttenuationProfile::flat(Attenuation::from_db_per_km(0.2), Wavelength::from_nm(1500),
                                            Wavelength::from_nm(1600)),
                   {}, c);
}

PhaseMismatch rad(double v) { return PhaseMismatch::from_rad_per_km(v); }
Attenuation db(double v) { return Attenuation::from_db_per_km(v); }
Length km(double v) { return Length::from_km(v); }

}  // namespace

TEST(Fwm, PhaseMismatchFiftyGhzGrid) {
  const auto deg = phase_mismatch(f_q + FrequencyShift::from_ghz(50), f_q + FrequencyShift::from_ghz(50),
                                  f_q + FrequencyShift::from_ghz(100), beta2);
  EXPECT_NEAR(deg.rad_per_km(), -2.08248652862985467, 1e-9);
  const auto nd = phase_mismatch(f_q + FrequencyShift::from_ghz(-50), f_q + FrequencyShift::from_ghz(100),
                                 f_q + FrequencyShift::from_ghz(50), beta2);
  EXPECT_NEAR(std::abs(nd.rad_per_km()), 4.16497305725970934, 1e-9);
  EXPECT_EQ(phase_mismatch(f_q, Frequency::from_thz(194.8), f_q, beta2).rad_per_km(), 0.0);
  EXPECT_EQ(phase_mismatch(Frequency::from_thz(194.8), f_q, f_q, beta2).rad_per_km(), 0.0);
}

TEST(Fwm, FourTonePlanHasFourProducts) {
  const auto plan = tone_plan();
  const auto products = enumerate_products(plan, q, beta2);
  ASSERT_EQ(products.size(), 4u);
  int degenerate = 0;
  for (const auto& p : products) {
    EXPECT_EQ(p.degeneracy, p.i == p.j ? 3 : 6);
    EXPECT_NE(p.k, p.i);
    EXPECT_NE(p.k, p.j);
    EXPECT_LE(p.i, p.j);
    const double f = plan[p.i].center.thz() + plan[p.j].center.thz() - plan[p.k].center.thz();
    EXPECT_DOUBLE_EQ(p.frequency.thz(), f);
    EXPECT_LE(std::abs(f - f_q.thz()), 0.5 * q.filter.thz() + 1e-12);
    degenerate += p.degeneracy == 3;
  }
  EXPECT_EQ(degenerate, 2);
}

TEST(Fwm, SmallPlans) {
  auto plan = tone_plan();
  EXPECT_TRUE(enumerate_products(std::vector{plan[0]}, q, beta2).empty());
  const auto two = enumerate_products(std::vector{plan[2], plan[3]}, q, beta2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].i, 0u);
  EXPECT_EQ(two[0].j, 0u);
  EXPECT_EQ(two[0].k, 1u);
  EXPECT_EQ(two[0].degeneracy, 3);
  // Counter-propagating and ASE channels take no part.
  for (auto& c : plan) c = c.with_direction(Direction::counter);
  EXPECT_TRUE(enumerate_products(plan, q, beta2).empty());
  const std::vector ase = {ase_channel("a", Frequency::from_thz(194.75), PowerDensity::from_w_per_hz(1e-15),
                                       Bandwidth::from_ghz(10.0), Direction::co),
                           tone_plan()[3]};
  EXPECT_TRUE(enumerate_products(ase, q, beta2).empty());
}

TEST(Fwm, EnumerationMatchesBruteForce) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> grid(-8, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PumpChannel> plan;
    for (int n = 0; n < 6; ++n) {
      int slot = grid(rng);
      if (slot == 0) slot = 9;
      plan.push_back(cw_channel("c", f_q + FrequencyShift::from_ghz(25.0 * slot), Power::from_watts(1e-3), Direction::co));
    }
    std::size_t expected = 0;
    for (std::size_t i = 0; i < plan.size(); ++i)
      for (std::size_t j = i; j < plan.size(); ++j)
        for (std::size_t k = 0; k < plan.size(); ++k) {
          if (k == i || k == j) continue;
          const double f = plan[i].center.ghz() + plan[j].center.ghz() - plan[k].center.ghz();
          if (std::abs(f - f_q.ghz()) <= 5.0 + 1e-6) ++expected;
        }
    EXPECT_EQ(enumerate_products(plan, q, beta2).size(), expected) << trial;
  }
}

TEST(Fwm, PhaseMatchedEfficiencyIsOne) {
  for (double a : {0.17, 0.2, 0.35})
    for (double L : {1.0, 5.0, 10.0, 25.0, 50.0, 100.0}) EXPECT_EQ(fwm_efficiency_exact(rad(0), db(a), km(L)), 1.0);
}

TEST(Fwm, ClosedFormIdentity) {
  for (double d : {0.1, 2.08, 4.16, 20.0})
    for (double L : {1.0, 7.5, 50.0}) {
      const double a = db(0.2).nepers_per_km();
      const double lhs = fwm_efficiency_exact(rad(d), db(0.2), km(L)) * std::pow(effective_length(db(0.2), km(L)).km(), 2);
      const double rhs = (1.0 - 2.0 * std::exp(-a * L) * std::cos(d * L) + std::exp(-2.0 * a * L)) / (a * a + d * d);
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << d << " " << L;
    }
}

TEST(Fwm, GoldenEfficiencies) {
  // mpmath reference at 0.2 dB/km, 25 km, 2.08 rad/km.
  EXPECT_NEAR(fwm_efficiency_exact(rad(2.08), db(0.2), km(25)) / 0.00126073858406834926, 1.0, 1e-12);
  EXPECT_NEAR(fwm_efficiency_averaged(rad(2.08), db(0.2), km(25)) / 0.00115271415562015964, 1.0, 1e-12);
  EXPECT_NEAR(effective_length(db(0.2), km(25)).km(), 14.8479254048773226, 1e-12);
  const FwmTerms t{3, Nonlinearity::from_per_w_km(1.3), Power::from_watts(1e-3), Power::from_watts(1e-3),
                   Power::from_watts(1e-3), db(0.2), km(25), rad(2.08)};
  EXPECT_NEAR(fwm_power(t, EfficiencyMode::exact).watts() / 1.48539960114807895e-10, 1.0, 1e-12);
}

TEST(Fwm, AveragedLimitsAndEnvelope) {
  // Large alpha L: eta_bar -> 1 at phase matching.
  EXPECT_NEAR(fwm_efficiency_averaged(rad(0), db(0.35), km(200)), 1.0, 1e-6);
  for (double d : {0.5, 2.08, 4.16}) {
    const double L0 = 20.0;
    const double period = 2.0 * std::numbers::pi / d;
    double lo = 1e300, hi = 0.0;
    for (int n = 0; n <= 2000; ++n) {
      const double e = fwm_efficiency_exact(rad(d), db(0.2), km(L0 + period * n / 2000.0));
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    const double avg = fwm_efficiency_averaged(rad(d), db(0.2), km(L0 + period / 2));
    EXPECT_GT(avg, lo);
    EXPECT_LT(avg, hi);
  }
}

TEST(Fwm, EfficiencyBounds) {
  for (double d : {0.1, 2.08, 20.0})
    for (double L : {1.0, 10.0, 100.0}) {
      const double a = db(0.2).nepers_per_km();
      const double bound = 1.0 + 4.0 * std::exp(-a * L) / std::pow(-std::expm1(-a * L), 2);
      const double e = fwm_efficiency_exact(rad(d), db(0.2), km(L));
      EXPECT_GT(e, 0.0);
      EXPECT_LE(e, bound);
    }
}

TEST(Fwm, RequiresPositiveSpan) {
  EXPECT_THROW(fwm_efficiency_exact(rad(1), Attenuation::from_nepers_per_km(0.0), km(1)), DomainError);
  EXPECT_THROW(fwm_efficiency_averaged(rad(1), db(0.2), km(0)), DomainError);
  EXPECT_THROW(effective_length(db(0.2), km(0)), DomainError);
}

TEST(Fwm, PowerLaws) {
  const auto fiber = smf_fiber(25.0);
  const auto plan = tone_plan(0.0);
  const auto products = enumerate_products(plan, q, beta2);
  const double base = fwm_total(products, plan, fiber, EfficiencyMode::exact).watts();
  std::vector<PumpChannel> scaled;
  for (const auto& c : plan) scaled.push_back(c.scaled(2.0));
  EXPECT_NEAR(fwm_total(products, scaled, fiber, EfficiencyMode::exact).watts() / base, 8.0, 1e-12);

  auto zeroed = plan;
  zeroed[1] = cw_channel("off", plan[1].center, Power::zero(), Direction::co);
  for (const auto& p : products) {
    if (p.i == 1 || p.j == 1 || p.k == 1) {
      EXPECT_EQ(fwm_power(p, zeroed, fiber, EfficiencyMode::exact).watts(), 0.0);
    }
  }

  auto reversed = products;
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_NEAR(fwm_total(reversed, plan, fiber, EfficiencyMode::exact).watts() / base, 1.0, 1e-15);
}

TEST(Fwm, LinearSubtraction) {
  std::vector<Power> fwm, leak, total;
  for (int n = 1; n <= 10; ++n) {
    fwm.push_back(Power::from_watts(1e-12 * n * n));
    leak.push_back(Power::from_watts(3e-11 / n));
    total.push_back(fwm.back() + leak.back());
  }
  const auto same = subtract_linear_contribution(total, total);
  for (const auto& v : same.values) EXPECT_EQ(v.watts(), 0.0);
  EXPECT_TRUE(same.clamped.empty());
  const std::vector<Power> zeros(total.size(), Power::zero());
  const auto identity = subtract_linear_contribution(total, zeros);
  for (std::size_t n = 0; n < total.size(); ++n) EXPECT_EQ(identity.values[n].watts(), total[n].watts());
  const auto recovered = subtract_linear_contribution(total, leak);
  for (std::size_t n = 0; n < total.size(); ++n) {
    EXPECT_NEAR(recovered.values[n].watts(), fwm[n].watts(), 1e-16 * total[n].watts() * 4);
  }
  const auto clamped = subtract_linear_contribution(leak, total);
  EXPECT_EQ(clamped.clamped.size(), total.size());
  EXPECT_THROW(subtract_linear_contribution(total, std::vector<Power>(3, Power::zero())), DomainError);
}
