#include "qcoex/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <variant>

#include "qcoex/errors.hpp"

namespace qcoex::oracle {
namespace {

// Samples per radian of phase the grid must reach before convergence is
// tested on oscillatory integrands.
constexpr double samples_per_radian = 4.0 / std::numbers::pi;

}  // namespace

QuadratureResult<double> sprs_kernel(std::span<const Segment> segments, Direction geometry,
                                     const QuadratureConfig& config) {
  double quantum_total = 0.0;
  for (const auto& s : segments) quantum_total += s.quantum.nepers_per_km() * s.length.km();

  double pump_loss = 0.0;     // integral of a_p from 0 to segment start
  double quantum_loss = 0.0;  // integral of a_q from 0 to segment start
  QuadratureResult<double> total{0.0, 0, 0.0};
  for (const auto& s : segments) {
    const double ap = s.pump.nepers_per_km();
    const double aq = s.quantum.nepers_per_km();
    const double p0 = pump_loss;
    const double q0 = quantum_loss;
    std::function<double(double)> integrand;
    if (geometry == Direction::co) {
      // Generated at z, then carried forward to L at the quantum wavelength.
      integrand = [=](double z) { return std::exp(-(p0 + ap * z) - (quantum_total - (q0 + aq * z))); };
    } else {
      // Generated at z, then carried back to z = 0 at the quantum wavelength.
      integrand = [=](double z) { return std::exp(-(p0 + ap * z) - (q0 + aq * z)); };
    }
    const auto part = romberg(integrand, 0.0, s.length.km(), config);
    total.value += part.value;
    total.doublings = std::max(total.doublings, part.doublings);
    total.estimated_error += part.estimated_error;
    pump_loss += ap * s.length.km();
    quantum_loss += aq * s.length.km();
  }
  return total;
}

Power integrate_sprs(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                     Direction geometry, const QuadratureConfig& config, Bandwidth ase_step) {
  const auto alpha_q = fiber.attenuation().at(quantum.center);
  double watts = 0.0;
  for (const auto& slice : discretize(pump, ase_step)) {
    const auto rho = sprs_efficiency(fiber, slice.center, quantum.center).efficiency;
    const Segment span[] = {{fiber.length(), fiber.attenuation().at(slice.center), alpha_q}};
    const double kernel = sprs_kernel(span, geometry, config).value;
    watts += slice.power.watts() * rho.per_km_ghz() * quantum.filter.ghz() * kernel;
  }
  return Power::from_watts(watts);
}

Power integrate_fwm_field(const FwmField& f, const QuadratureConfig& config) {
  const double a_mix =
      0.5 * (f.ai.nepers_per_km() + f.aj.nepers_per_km() + f.ak.nepers_per_km() - f.product.nepers_per_km());
  const std::complex<double> rate(-a_mix, f.mismatch.rad_per_km());
  const double L = f.length.km();
  const auto min_steps =
      static_cast<std::size_t>(std::ceil(L * std::abs(f.mismatch.rad_per_km()) * samples_per_radian));
  const auto integral = romberg_complex([rate](double z) { return std::exp(rate * z); }, 0.0, L, config, min_steps);
  const double coupling = f.degeneracy * f.gamma.per_w_km() / 3.0;
  return Power::from_watts(coupling * coupling * f.pi.watts() * f.pj.watts() * f.pk.watts() *
                           std::exp(-f.product.nepers_per_km() * L) * std::norm(integral.value));
}

Power integrate_fwm_field(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                          const QuadratureConfig& config, AlphaModel alpha) {
  auto tone = [&](std::size_t index) -> const PumpChannel& {
    if (index >= plan.size() || !plan[index].is_cw()) {
      throw DomainError("FWM product index " + std::to_string(index) + " does not name a CW channel");
    }
    return plan[index];
  };
  const auto& ci = tone(product.i);
  const auto& cj = tone(product.j);
  const auto& ck = tone(product.k);
  const auto a_product = fiber.attenuation().at(product.frequency);
  auto wave_alpha = [&](const PumpChannel& c) {
    return alpha == AlphaModel::per_wave ? fiber.attenuation().at(c.center) : a_product;
  };
  const FwmField field{product.degeneracy,
                       fiber.gamma(),
                       std::get<CwLoading>(ci.loading).power,
                       std::get<CwLoading>(cj.loading).power,
                       std::get<CwLoading>(ck.loading).power,
                       wave_alpha(ci),
                       wave_alpha(cj),
                       wave_alpha(ck),
                       a_product,
                       fiber.length(),
                       product.mismatch};
  return integrate_fwm_field(field, config);
}

PowerDensity integrate_rayleigh(const LeakageSource& source, const QuantumChannel& quantum,
                                const FiberSpec& fiber, const QuadratureConfig& config) {
  if (source.direction != Direction::counter) {
    throw MisuseError("Rayleigh backscatter reaches the receiver only for counter-propagating leakage");
  }
  const double a = fiber.attenuation().at(quantum.center).nepers_per_km();
  const double r = fiber.rayleigh().per_km();
  const auto integral = romberg([=](double z) { return r * std::exp(-2.0 * a * z); }, 0.0, fiber.length().km(),
                                config);
  return PowerDensity::from_w_per_hz(source.psd.w_per_hz() * integral.value);
}

Length oscillation_period(std::span<const double> lengths_km, std::span<const double> values) {
  if (lengths_km.size() != values.size()) throw DomainError("oscillation_period: series lengths differ");
  std::vector<double> peaks;
  for (std::size_t n = 1; n + 1 < values.size(); ++n) {
    const double y0 = values[n - 1];
    const double y1 = values[n];
    const double y2 = values[n + 1];
    if (!(y1 > y0 && y1 >= y2)) continue;
    if (y1 - std::min(y0, y2) <= 1e-12 * std::abs(y1)) continue;
    // Vertex of the parabola through the three samples.
    const double x0 = lengths_km[n - 1];
    const double x1 = lengths_km[n];
    const double x2 = lengths_km[n + 1];
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    double x = x1;
    if (curvature < 0.0) x = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
    peaks.push_back(x);
  }
  if (peaks.size() < 2) {
    throw DomainError("oscillation_period needs at least two local maxima, found " + std::to_string(peaks.size()));
  }
  return Length::from_km((peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1));
}

}  // namespace qcoex::oracle
