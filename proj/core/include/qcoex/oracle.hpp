#pragma once

// Brute-force reference integrators. Nothing here calls the closed forms in
// sprs.hpp, fwm.hpp or leakage.hpp; each quantity is obtained by quadrature
// of its propagation integrand. Spans may be split into segments with
// different attenuation, which the closed forms cannot represent.

#include <span>
#include <vector>

#include "qcoex/channels.hpp"
#include "qcoex/fiber.hpp"
#include "qcoex/fwm.hpp"
#include "qcoex/leakage.hpp"
#include "qcoex/quadrature.hpp"
#include "qcoex/sprs.hpp"
#include "qcoex/units.hpp"

namespace qcoex::oracle {

/// A piece of fiber with its own attenuation at the pump and quantum wavelengths.
struct Segment {
  Length length;
  Attenuation pump;
  Attenuation quantum;
};

/// Interaction length (km) of the given geometry by quadrature; segments are
/// concatenated from the pump launch end.
QuadratureResult<double> sprs_kernel(std::span<const Segment> segments, Direction geometry,
                                     const QuadratureConfig& config);

/// SpRS power for one pump channel over a uniform span. ASE loading is
/// sliced exactly as the closed-form model slices it.
Power integrate_sprs(const PumpChannel& pump, const QuantumChannel& quantum, const FiberSpec& fiber,
                     Direction geometry, const QuadratureConfig& config = {},
                     Bandwidth ase_step = default_ase_step);

/// Inputs of the undepleted-pump field integral with one attenuation per wave.
struct FwmField {
  int degeneracy;
  Nonlinearity gamma;
  Power pi;
  Power pj;
  Power pk;
  Attenuation ai;
  Attenuation aj;
  Attenuation ak;
  Attenuation product;  // attenuation at the generated frequency
  Length length;
  PhaseMismatch mismatch;
};

/// (D gamma/3)^2 Pi Pj Pk exp(-a_F L) |int_0^L exp((i db - a_mix) z) dz|^2,
/// a_mix = (a_i + a_j + a_k - a_F) / 2.
Power integrate_fwm_field(const FwmField& field, const QuadratureConfig& config = {});

enum class AlphaModel {
  per_wave,  // attenuation of each tone at its own wavelength
  scalar,    // attenuation at the product frequency for every wave
};

Power integrate_fwm_field(const FwmProduct& product, std::span<const PumpChannel> plan, const FiberSpec& fiber,
                          const QuadratureConfig& config = {}, AlphaModel alpha = AlphaModel::per_wave);

/// Backscattered PSD: S0 * integral of r exp(-2 a z) over the span.
PowerDensity integrate_rayleigh(const LeakageSource& source, const QuantumChannel& quantum,
                                const FiberSpec& fiber, const QuadratureConfig& config = {});

/// Mean spacing of the local maxima of a sampled series (abscissae in km).
/// Maxima are refined by a parabola through the three bracketing samples.
/// Throws DomainError when fewer than two maxima are found.
Length oscillation_period(std::span<const double> lengths_km, std::span<const double> values);

}  // namespace qcoex::oracle
