#include "qcoex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qcoex/errors.hpp"

namespace qcoex {

void QuadratureConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    char message[96];
    std::snprintf(message, sizeof message, "quadrature tolerance must be in (0, 1), got %g", tolerance);
    throw DomainError(message);
  }
  if (initial_steps < 2) throw DomainError("quadrature needs at least 2 initial steps");
  if (max_doublings < 0) throw DomainError("quadrature refinement limit must be >= 0");
}

double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t steps) {
  if (steps == 0) throw DomainError("trapezoid needs at least one step");
  const double h = (b - a) / static_cast<double>(steps);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t n = 1; n < steps; ++n) sum += f(a + static_cast<double>(n) * h);
  return sum * h;
}

namespace {

template <class T>
QuadratureResult<T> romberg_impl(const std::function<T(double)>& f, double a, double b,
                                 const QuadratureConfig& config, std::size_t min_steps) {
  config.validate();
  if (a == b) return {T{}, 0, 0.0};

  std::size_t steps = config.initial_steps;
  double h = (b - a) / static_cast<double>(steps);
  double f_max = 0.0;
  auto eval = [&](double x) {
    const T v = f(x);
    f_max = std::max(f_max, std::abs(v));
    return v;
  };

  T sum = 0.5 * (eval(a) + eval(b));
  for (std::size_t n = 1; n < steps; ++n) sum += eval(a + static_cast<double>(n) * h);

  std::vector<T> previous{sum * h};
  std::vector<T> current;
  int agreements = 0;
  double last_error = 0.0;

  for (int doubling = 1; doubling <= config.max_doublings; ++doubling) {
    // Trapezoid on the halved grid reuses the previous sum.
    T midpoints{};
    for (std::size_t n = 0; n < steps; ++n) midpoints += eval(a + (static_cast<double>(n) + 0.5) * h);
    sum += midpoints;
    steps *= 2;
    h *= 0.5;

    current.assign(1, sum * h);
    double factor = 1.0;
    for (std::size_t m = 1; m <= previous.size(); ++m) {
      factor *= 4.0;
      current.push_back(current[m - 1] + (current[m - 1] - previous[m - 1]) / (factor - 1.0));
    }

    const T best = current.back();
    last_error = std::abs(best - previous.back());
    const double floor = 1e-15 * std::abs(b - a) * f_max;
    const double scale = std::max(std::abs(best), floor);
    const bool resolved = steps >= min_steps && doubling >= 2;
    if (resolved && last_error <= config.tolerance * scale) {
      if (++agreements >= 2) return {best, doubling, last_error};
    } else {
      agreements = 0;
    }
    previous.swap(current);
  }
  char message[160];
  std::snprintf(message, sizeof message,
                "quadrature did not reach relative tolerance %g within %d doublings (last change %g)",
                config.tolerance, config.max_doublings, last_error);
  throw ConvergenceError(message);
}

}  // namespace

QuadratureResult<double> romberg(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureConfig& config, std::size_t min_steps) {
  return romberg_impl<double>(f, a, b, config, min_steps);
}

QuadratureResult<std::complex<double>> romberg_complex(const std::function<std::complex<double>(double)>& f, double a,
                                               double b, const QuadratureConfig& config, std::size_t min_steps) {
  return romberg_impl<std::complex<double>>(f, a, b, config, min_steps);
}

}  // namespace qcoex
