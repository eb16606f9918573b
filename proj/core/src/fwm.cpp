#include "qcoex/fwm.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "qcoex/errors.hpp"

namespace qcoex {
namespace {

void require_span(Attenuation attenuation, Length length) {
  if (!(attenuation.nepers_per_km() > 0.0)) throw DomainError("FWM efficiency needs attenuation > 0");
  if (!(length.km() > 0.0)) throw DomainError("FWM efficiency needs length > 0");
}

// Frequencies of a product within the filter differ from f_q by < B/2; this
// absorbs rounding of f_i + f_j - f_k in THz.
constexpr double in_band_slack_ghz = 1e-6;

}  // namespace

std::string_view to_string(EfficiencyMode mode) { return mode == EfficiencyMode::exact ? "exact" : "averaged"; }

PhaseMismatch phase_mismatch(Frequency fi, Frequency fj, Frequency fk, Dispersion beta2) {
  // beta2 [ps^2/km] * (2 pi)^2 * df [THz] * df [THz] -> rad/km (ps * THz = 1).
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return PhaseMismatch::from_rad_per_km(beta2.ps2_per_km() * two_pi * two_pi * (fi.thz() - fk.thz()) *
                                        (fj.thz() - fk.thz()));
}

std::vector<FwmProduct> enumerate_products(std::span<const PumpChannel> plan, const QuantumChannel& quantum,
                                           Dispersion beta2) {
  std::vector<FwmProduct> products;
  const double half_band_thz = 0.5 * quantum.filter.thz() + in_band_slack_ghz * 1e-3;
  auto usable = [&](std::size_t n) { return plan[n].is_cw() && plan[n].direction == Direction::co; };
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!usable(i)) continue;
    for (std::size_t j = i; j < plan.size(); ++j) {
      if (!usable(j)) continue;
      for (std::size_t k = 0; k < plan.size(); ++k) {
        if (k == i || k == j || !usable(k)) continue;
        const double f = plan[i].center.thz() + plan[j].center.thz() - plan[k].center.thz();
        if (std::abs(f - quantum.center.thz()) > half_band_thz || f <= 0.0) continue;
        products.push_back({i, j, k, i == j ? 3 : 6, Frequency::from_thz(f),
                            phase_mismatch(plan[i].center, plan[j].center, plan[k].center, beta2)});
      }
    }
  }
  return products;
}

Length effective_length(Attenuation attenuation, Length length) {
  require_span(attenuation, length);
  const double a = attenuation.nepers_per_km();
  return Length::from_km(-std::expm1(-a * length.km()) / a);
}

double fwm_efficiency_exact(PhaseMismatch mismatch, Attenuation attenuation, Length length) {
  require_span(attenuation, length);
  const double a = attenuation.nepers_per_km();
  const double db = mismatch.rad_per_km();
  const double L = length.km();
  const double loss = std::exp(-a * L);
  const double gain = -std::expm1(-a * L);  // 1 - exp(-a L)
  const double s = std::sin(0.5 * db * L);
  return a * a / (a * a + db * db) * (1.0 + 4.0 * loss * s * s / (gain * gain));
}

double fwm_efficiency_averaged(PhaseMismatch mismatch, Attenuation attenuation, Length length) {
  require_span(attenuation, length);
  const double a = attenuation.nepers_per_km();
  const double db = mismatch.rad_per_km();
  const double L = length.km();
  const double loss = std::exp(-a * L);
  const double gain = -std::expm1(-a * L);
  return a * a / (a * a + db * db) * (1.0 + 2.0 * loss / (gain * gain));
}

double fwm_efficiency(PhaseMismatch mismatch, Attenuation attenuation, Length length, EfficiencyMode mode) {
  return mode == EfficiencyMode::exact ? fwm_efficiency_exact(mismatch, attenuation, length)
                                       : fwm_efficiency_averaged(mismatch, attenuation, length);
}

Power fwm_power(const FwmTerms& t, EfficiencyMode mode) {
  const double coupling = t.degeneracy * t.gamma.per_w_km() / 3.0;
  const double l_eff = effective_length(t.attenuation, t.length).km();
  const double eta = fwm_efficiency(t.mismatch, t.attenuation, t.length, mode);
  return Power::from_watts(coupling * coupling * t.pi.watts() * t.pj.watts() * t.pk.watts() *
                           std::exp(-t.attenuation.nepers_per_km() * t.length.km()) * l_eff * l_eff * eta);
}

FwmTerms fwm_terms(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber) {
  auto tone_power = [&](std::size_t index) {
    if (index >= plan.size() || !plan[index].is_cw()) {
      throw DomainError("FWM product index " + std::to_string(index) + " does not name a CW channel");
    }
    return std::get<CwLoading>(plan[index].loading).power;
  };
  return FwmTerms{product.degeneracy,
                  fiber.gamma(),
                  tone_power(product.i),
                  tone_power(product.j),
                  tone_power(product.k),
                  fiber.attenuation().at(product.frequency),
                  fiber.length(),
                  product.mismatch};
}

Power fwm_power(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                EfficiencyMode mode) {
  return fwm_power(fwm_terms(product, plan, fiber), mode);
}

Power fwm_total(std::span<const FwmProduct> products, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                EfficiencyMode mode) {
  Power total = Power::zero();
  for (const auto& product : products) total += fwm_power(product, plan, fiber, mode);
  return total;
}

LinearSubtraction subtract_linear_contribution(std::span<const Power> total, std::span<const Power> linear) {
  if (total.size() != linear.size()) {
    throw DomainError("series lengths differ: " + std::to_string(total.size()) + " vs " +
                      std::to_string(linear.size()));
  }
  LinearSubtraction out;
  out.values.reserve(total.size());
  for (std::size_t n = 0; n < total.size(); ++n) {
    const double diff = total[n].watts() - linear[n].watts();
    if (diff < 0.0) out.clamped.push_back(n);
    out.values.push_back(Power::from_watts(diff < 0.0 ? 0.0 : diff));
  }
  return out;
}

}  // namespace qcoex
