#include "qcoex/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qcoex/errors.hpp"
#include "qcoex/oracle.hpp"

namespace qcoex {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::error:
      return "error";
    case CheckStatus::info:
      return "info";
  }
  return "?";
}

bool CheckReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const CheckRow& r) {
    return r.status == CheckStatus::fail || r.status == CheckStatus::error;
  });
}

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

namespace {

void compare(CheckReport& report, std::string mechanism, std::string item, const std::function<double()>& closed,
             const std::function<double()>& oracle, bool informational = false) {
  CheckRow row;
  row.mechanism = std::move(mechanism);
  row.item = std::move(item);
  try {
    row.closed_form = closed();
    row.oracle = oracle();
    row.relative_error = relative_error(row.closed_form, row.oracle);
    if (informational) {
      row.status = CheckStatus::info;
    } else {
      row.status = row.relative_error <= report.tolerance ? CheckStatus::pass : CheckStatus::fail;
    }
  } catch (const Error& e) {
    row.status = CheckStatus::error;
    row.message = e.what();
  }
  report.rows.push_back(std::move(row));
}

}  // namespace

CheckReport cross_check(const Scenario& s, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("cross-check tolerance must be positive");
  CheckReport report;
  report.tolerance = tolerance;
  const auto& fiber = s.fiber;
  const auto& q = s.quantum;

  for (const auto& channel : s.plan) {
    const bool co = channel.direction == Direction::co;
    compare(
        report, co ? "sprs_co" : "sprs_counter", channel.label,
        [&] {
          return (co ? sprs_power_co(channel, q, fiber, s.sprs_step) : sprs_power_counter(channel, q, fiber, s.sprs_step))
              .watts();
        },
        [&] { return oracle::integrate_sprs(channel, q, fiber, channel.direction, s.oracle, s.sprs_step).watts(); });
  }

  for (const auto& product : enumerate_products(s.plan, q, fiber.beta2())) {
    const auto item = "(" + std::to_string(product.i) + "," + std::to_string(product.j) + "," +
                      std::to_string(product.k) + ")";
    const auto closed = [&] { return fwm_power(product, s.plan, fiber, EfficiencyMode::exact).watts(); };
    compare(report, "fwm", item, closed, [&] {
      return oracle::integrate_fwm_field(product, s.plan, fiber, s.oracle, oracle::AlphaModel::scalar).watts();
    });
    compare(
        report, "fwm_per_wave_alpha", item, closed,
        [&] {
          return oracle::integrate_fwm_field(product, s.plan, fiber, s.oracle, oracle::AlphaModel::per_wave).watts();
        },
        true);
  }

  for (const auto& source : s.leakage) {
    if (source.direction != Direction::counter) continue;
    compare(
        report, "rayleigh_ase", source.label, [&] { return rayleigh_backscatter(source, q, fiber).w_per_hz(); },
        [&] { return oracle::integrate_rayleigh(source, q, fiber, s.oracle).w_per_hz(); });
  }
  return report;
}

}  // namespace qcoex
