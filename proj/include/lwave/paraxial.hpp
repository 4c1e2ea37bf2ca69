#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lwave/core.hpp"
#include "lwave/field.hpp"
#include "lwave/quadrature.hpp"

namespace lwave {

/// Sign of the p_rho^2 term in the paraxial phase exp(i sign p^2 zeta / (2 hbar m V)).
/// Expanding the exact longitudinal momentum m V sqrt(1 - p^2/(m V)^2) gives
/// the minus sign; the test suite re-derives it against the exact integrand.
inline constexpr int kParaxialPhaseSign = -1;

enum class ParaxialFamily { g1, invp, i0mod, j0mod, custom };

const char* to_string(ParaxialFamily f);
ParaxialFamily parse_paraxial_family(const std::string& name);

/// Transverse-momentum weight S(p_rho) of a paraxial pulse.
///
///   g1     4 q p e^{-q p^2}
///   invp   e^{-q p^2} / p
///   i0mod  q p e^{-q p^2} I0(s p / hbar)
///   j0mod  q p e^{-q p^2} J0(s p / hbar)
///
/// with q = alpha / (m V)^2. The custom family wraps an arbitrary callable.
struct ParaxialSpectrum {
  ParaxialFamily family = ParaxialFamily::g1;
  double alpha = 100.0;
  double s = 0.0;
  std::function<Complex(double)> custom;
  /// Set when alpha < 10, where the paraxial expansion is doubtful.
  std::vector<std::string> quality_flags;

  static ParaxialSpectrum make(ParaxialFamily family, double alpha, double s = 0.0);
  static ParaxialSpectrum from_callable(std::function<Complex(double)> weight);

  double q(const PhysicalContext& ctx) const;
  Complex weight(const PhysicalContext& ctx, double p) const;
};

/// Q = hbar (q hbar - i sign zeta / (2 m V)); Re Q = q hbar^2.
Complex q_function(const PhysicalContext& ctx, double q, double zeta);

struct Normalization {
  bool peak = true;     // choose N so that max |psi|^2 = 1
  double value = 1.0;   // used when peak == false
};

/// Closed-form paraxial pulse. The invp family is singular on the axis; those
/// samples carry SampleStatus::divergent. Peak normalization is analytic for
/// g1 (N = 1/2), numeric for i0mod and j0mod, and unavailable for invp, which
/// always uses the explicit value.
FieldEvaluator paraxial_closed_form(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                    Normalization norm = {});

/// Un-normalized closed-form value at (rho, zeta).
Amplitude paraxial_closed_value(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                double rho, double zeta);

/// Quadrature of e^{2imV zeta/hbar} int_0^inf J0(rho p/hbar) S(p) e^{i sign p^2 zeta/(2 hbar m V)} dp.
Amplitude paraxial_quadrature(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                              double rho, double zeta, const QuadratureSpec& spec = {},
                              int phase_sign = kParaxialPhaseSign);

/// psi(rho1) - psi(rho2) from the integral of the kernel difference; finite
/// even for invp, whose individual values diverge.
Amplitude paraxial_quadrature_difference(const PhysicalContext& ctx,
                                         const ParaxialSpectrum& spectrum, double rho1,
                                         double rho2, double zeta, const QuadratureSpec& spec = {});

/// Closed-form counterpart of paraxial_quadrature_difference.
Complex paraxial_closed_difference(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                   double rho1, double rho2, double zeta);

/// Non-paraxial reference: e^{imV zeta/hbar} int_0^{mV} J0(rho p/hbar) S(p)
/// e^{i m V zeta sqrt(1 - p^2/(mV)^2)/hbar} dp, evaluated with p = mV sin(theta).
Amplitude exact_integrand_quadrature(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                     double rho, double zeta, const QuadratureSpec& spec = {});

struct WidthMeasurement {
  double rho_half_width = 0.0;   // |psi(rho, 0)|^2 falls to 1/e of its axis value
  double zeta_half_width = 0.0;  // |psi(0, zeta)|^2 falls to 1/e^2 of its peak
};

/// Bracketing plus bisection on the intensity ratio. Throws MeasurementError
/// when the profile is not monotone up to the crossing.
WidthMeasurement width_measurements(const FieldEvaluator& field, const PhysicalContext& ctx);

/// Predicted widths for g1: hbar sqrt(2 alpha)/(mV) and sqrt(e^2 - 1) 2 alpha hbar/(mV).
WidthMeasurement predicted_g1_widths(const PhysicalContext& ctx, double alpha);

}  // namespace lwave
