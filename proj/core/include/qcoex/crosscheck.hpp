#pragma once

// Closed form against oracle quadrature, mechanism by mechanism, for one
// scenario (sweeps are ignored; the base configuration is checked).

#include <string>
#include <vector>

#include "qcoex/scenario.hpp"

namespace qcoex {

enum class CheckStatus {
  pass,
  fail,
  error,  // the oracle did not converge or the lookup failed
  info,   // reported for context, never fails the check
};

std::string_view to_string(CheckStatus status);

struct CheckRow {
  std::string mechanism;
  std::string item;
  double closed_form = 0.0;
  double oracle = 0.0;
  double relative_error = 0.0;
  CheckStatus status = CheckStatus::pass;
  std::string message;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  double tolerance = 0.0;

  /// No fail or error rows.
  bool ok() const;
};

/// |a - b| / max(|a|, |b|), zero when both are zero.
double relative_error(double a, double b);

/// SpRS per channel in its own direction, FWM per product (scalar
/// attenuation, plus an info row with per-wave attenuation), and Rayleigh
/// backscatter per counter-propagating leakage source. The oracle runs with
/// the scenario's quadrature config.
CheckReport cross_check(const Scenario& scenario, double tolerance);

}  // namespace qcoex
