#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace qcoex::detail {

// Relative slack on table edges so values that went through a unit
// conversion still land inside the table they came from.
inline constexpr double edge_slack = 1e-12;

inline bool within(std::span<const double> xs, double x) noexcept {
  if (xs.empty()) return false;
  const double lo = xs.front();
  const double hi = xs.back();
  const double tol = edge_slack * std::max({std::abs(lo), std::abs(hi), 1.0});
  return x >= lo - tol && x <= hi + tol;
}

/// Piecewise-linear interpolation; nullopt outside [xs.front(), xs.back()].
inline std::optional<double> lerp_table(std::span<const double> xs, std::span<const double> ys, double x) noexcept {
  if (!within(xs, x)) return std::nullopt;
  if (xs.size() == 1) return ys.front();
  x = std::clamp(x, xs.front(), xs.back());
  auto upper = std::upper_bound(xs.begin(), xs.end(), x);
  if (upper == xs.end()) return ys.back();
  const std::size_t hi = static_cast<std::size_t>(upper - xs.begin());
  const std::size_t lo = hi - 1;
  if (x == xs[lo]) return ys[lo];
  const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace qcoex::detail
