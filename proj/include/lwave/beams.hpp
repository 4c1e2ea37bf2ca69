#pragma once

#include "lwave/core.hpp"
#include "lwave/field.hpp"

namespace lwave {

/// Monochromatic Bessel beam J_n(rho p_rho/hbar) exp(i(z p_z - E t)/hbar + i n phi).
struct BesselBeamParams {
  PhysicalContext ctx;
  double E = 1.0;
  double p_z = 1.0;
  int order = 0;

  /// p_rho = sqrt(2 m E - p_z^2).
  double p_rho() const;
  void validate() const;
};

FieldEvaluator bessel_beam(const BesselBeamParams& params);

/// Beam parameters set by an annular slit of radius r in the focal plane of a
/// lens with focal length f: p = sqrt(2 m E), p_rho = (r/f) p,
/// p_z = p sqrt(1 - r^2/f^2).
struct SlitMomenta {
  double p = 0.0;
  double p_rho = 0.0;
  double p_z = 0.0;
};

SlitMomenta slit_parameters(const PhysicalContext& ctx, double r, double f, double E);

}  // namespace lwave
