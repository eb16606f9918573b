#pragma once

// Four-wave mixing products landing in the quantum filter.
//
// Tones i, j, k generate a new tone at f_i + f_j - f_k. In the undepleted-pump
// regime, with a single attenuation a per product,
//
//   P_F(L) = (D gamma / 3)^2 P_i P_j P_k exp(-a L) L_eff^2 eta
//   eta    = a^2 / (a^2 + db^2) * [1 + 4 exp(-a L) sin^2(db L / 2) / (1 - exp(-a L))^2]
//   db     = beta2 (2 pi)^2 (f_i - f_k)(f_j - f_k)
//
// where L_eff = (1 - exp(-a L)) / a and D is 3 for degenerate (i == j) and 6
// otherwise. The averaged efficiency replaces sin^2 by its mean 1/2.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qcoex/channels.hpp"
#include "qcoex/fiber.hpp"
#include "qcoex/units.hpp"

namespace qcoex {

enum class EfficiencyMode { exact, averaged };

std::string_view to_string(EfficiencyMode mode);

struct FwmProduct {
  std::size_t i;  // pump pair, i <= j (indices into the channel plan)
  std::size_t j;
  std::size_t k;  // conjugated channel, k not in {i, j}
  int degeneracy;  // 3 if i == j else 6
  Frequency frequency;
  PhaseMismatch mismatch;
};

/// Every triple of co-propagating CW channels whose product falls within half
/// the quantum filter bandwidth of the quantum center. Counter-propagating
/// channels and ASE loadings do not take part. Ordered by (i, j, k).
std::vector<FwmProduct> enumerate_products(std::span<const PumpChannel> plan, const QuantumChannel& quantum,
                                           Dispersion beta2);

PhaseMismatch phase_mismatch(Frequency fi, Frequency fj, Frequency fk, Dispersion beta2);

/// (1 - exp(-a L)) / a; throws DomainError unless a > 0 and L > 0.
Length effective_length(Attenuation attenuation, Length length);

/// Throws DomainError unless attenuation > 0 and length > 0.
double fwm_efficiency_exact(PhaseMismatch mismatch, Attenuation attenuation, Length length);
double fwm_efficiency_averaged(PhaseMismatch mismatch, Attenuation attenuation, Length length);
double fwm_efficiency(PhaseMismatch mismatch, Attenuation attenuation, Length length, EfficiencyMode mode);

/// Scalar inputs of one product's power.
struct FwmTerms {
  int degeneracy;
  Nonlinearity gamma;
  Power pi;
  Power pj;
  Power pk;
  Attenuation attenuation;
  Length length;
  PhaseMismatch mismatch;
};

Power fwm_power(const FwmTerms& terms, EfficiencyMode mode);

/// Gathers FwmTerms for a product, with the attenuation taken at the product
/// frequency. Throws DomainError if an index does not name a CW channel.
FwmTerms fwm_terms(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber);

Power fwm_power(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                EfficiencyMode mode);

/// Incoherent (power) sum over products.
Power fwm_total(std::span<const FwmProduct> products, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                EfficiencyMode mode);

struct LinearSubtraction {
  std::vector<Power> values;
  std::vector<std::size_t> clamped;  // indices where total < linear
};

/// Pointwise total - linear in watts, clamped at zero. Throws DomainError if
/// the series lengths differ.
LinearSubtraction subtract_linear_contribution(std::span<const Power> total, std::span<const Power> linear);

}  // namespace qcoex
