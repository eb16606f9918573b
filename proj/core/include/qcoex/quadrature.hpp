#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace qcoex {

/// Romberg integration settings: composite trapezoid on initial_steps
/// intervals, halved up to max_doublings times, with Richardson
/// extrapolation; stops when two successive extrapolated estimates differ by
/// less than tolerance (relative).
struct QuadratureConfig {
  double tolerance = 1e-10;
  int max_doublings = 24;
  std::size_t initial_steps = 2;

  /// Throws DomainError unless tolerance is in (0, 1), initial_steps >= 2 and
  /// max_doublings >= 0.
  void validate() const;
};

template <class T>
struct QuadratureResult {
  T value;
  int doublings;
  double estimated_error;  // |last - previous| of the extrapolated estimates
};

/// Composite trapezoid rule on `steps` equal intervals.
double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t steps);

/// Throws ConvergenceError when the tolerance is not met. `min_steps` forces
/// the grid to at least that many intervals before convergence is tested
/// (needed for oscillatory integrands).
QuadratureResult<double> romberg(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureConfig& config, std::size_t min_steps = 0);
QuadratureResult<std::complex<double>> romberg_complex(const std::function<std::complex<double>(double)>& f, double a,
                                               double b, const QuadratureConfig& config, std::size_t min_steps = 0);

}  // namespace qcoex
