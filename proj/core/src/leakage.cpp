#include "qcoex/leakage.hpp"

#include <cmath>

#include "qcoex/errors.hpp"

namespace qcoex {
namespace {

void require_direction(const LeakageSource& source, Direction expected, const char* operation) {
  if (source.direction != expected) {
    throw MisuseError(std::string(operation) + " applies to " + std::string(to_string(expected)) +
                      "-propagating leakage; source '" + source.label + "' is " +
                      std::string(to_string(source.direction)));
  }
}

}  // namespace

PowerDensity rayleigh_backscatter(const LeakageSource& source, const QuantumChannel& quantum,
                                  const FiberSpec& fiber) {
  require_direction(source, Direction::counter, "rayleigh_backscatter");
  const double a = fiber.attenuation().at(quantum.center).nepers_per_km();
  const double capture = -std::expm1(-2.0 * a * fiber.length().km()) / (2.0 * a);
  return source.psd * (fiber.rayleigh().per_km() * capture);
}

PowerDensity rayleigh_backscatter_limit(const LeakageSource& source, const QuantumChannel& quantum,
                                        const FiberSpec& fiber) {
  require_direction(source, Direction::counter, "rayleigh_backscatter_limit");
  const double a = fiber.attenuation().at(quantum.center).nepers_per_km();
  return source.psd * (fiber.rayleigh().per_km() / (2.0 * a));
}

PowerDensity copropagated_leakage(const LeakageSource& source, const QuantumChannel& quantum,
                                  const FiberSpec& fiber) {
  require_direction(source, Direction::co, "copropagated_leakage");
  const double a = fiber.attenuation().at(quantum.center).nepers_per_km();
  return source.psd * std::exp(-a * fiber.length().km());
}

}  // namespace qcoex
