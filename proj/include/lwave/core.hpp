#pragma once

#include <complex>

namespace lwave {

using Complex = std::complex<double>;

/// Physical parameters shared by every solution family.
///
/// hbar, mass and V (the pulse peak speed) must be strictly positive; b is the
/// energy intercept of the spectral line E = V p_z + b and may be zero.
struct PhysicalContext {
  double hbar = 1.0;
  double mass = 1.0;
  double V = 1.0;
  double b = 0.0;

  /// Throws DomainError when a field is outside its allowed range.
  void validate() const;

  static PhysicalContext make(double hbar, double mass, double V, double b = 0.0);
  PhysicalContext with_b(double new_b) const;
};

/// Derived kinematic constants of the line E = V p_z + b.
///
///   P = m^2 V^2 + 2 m b,  A = sqrt(P) V,  B = m V^2 + b,  D = E+ - E- = 2 A,
///   E+- = B +- A,  v = V + b / (m V).
struct KinematicConstants {
  double A = 0.0;
  double B = 0.0;
  double P = 0.0;
  double D = 0.0;
  double E_minus = 0.0;
  double E_plus = 0.0;
  double v_phase_b = 0.0;
};

KinematicConstants kinematics(const PhysicalContext& ctx);

/// Transverse momentum on the spectral line, p_rho(E) >= 0 for E in [E-, E+].
double p_rho_of_E(const PhysicalContext& ctx, double E);

/// Longitudinal momentum on the spectral line, p_z = (E - b) / V. Throws when
/// the result would describe a backward-travelling component.
double p_z_of_E(const PhysicalContext& ctx, double E);

/// Affine map E = A u + B taking [E-, E+] onto [-1, 1].
double u_of_E(const PhysicalContext& ctx, double E);
double E_of_u(const PhysicalContext& ctx, double u);

struct ComovingCoords {
  double zeta = 0.0;  // z - V t
  double eta = 0.0;   // z - v t
  double rho = 0.0;
  double phi = 0.0;
};

ComovingCoords comoving(const PhysicalContext& ctx, double rho, double z, double t,
                        double phi = 0.0);

}  // namespace lwave
