#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "lwave/core.hpp"
#include "lwave/field.hpp"

namespace lwave {

/// Transverse harmonic confinement U(rho) = m omega^2 rho^2 / 2.
struct HarmonicGuide {
  PhysicalContext ctx;
  double omega = 0.05;

  void validate() const;
  double potential(double rho) const;
  /// Oscillator length sqrt(hbar / (m omega)).
  double length() const;
};

enum class Branch { plus, minus };

const char* to_string(Branch b);

/// Axially symmetric (l = 0) guided mode and its two longitudinal momenta on
/// the line E = V p_z + b:  p_z = mV +- sqrt(m^2 V^2 + 2 m b - Lambda^2).
struct GuideMode {
  int n = 0;
  double lambda_sq = 0.0;   // 2 m hbar omega (2n + 1)
  double p_z_plus = 0.0;
  double p_z_minus = 0.0;
  bool minus_admissible = true;  // false when the minus root would travel backward
  double b = 0.0;

  double p_z(Branch branch) const;
  double energy(const PhysicalContext& ctx, Branch branch) const;
};

/// Normalized radial profile sqrt(m omega/(pi hbar)) L_n(m omega rho^2/hbar) e^{-m omega rho^2/(2 hbar)},
/// with int |R_n|^2 2 pi rho drho = 1.
double mode_profile(const HarmonicGuide& guide, int n, double rho);

/// Modes whose intersection with E = V p_z + b is real. Throws DomainError when
/// there is none.
std::vector<GuideMode> solve_modes(const HarmonicGuide& guide, double b = 0.0);

/// Lowest eigenvalues Lambda^2 of -hbar^2 (1/rho)(rho R')' + 2 m U(rho) R on a
/// cell-centred grid over [0, rho_max] with R(rho_max) = 0.
Eigen::VectorXd radial_eigenvalues(const PhysicalContext& ctx,
                                   const std::function<double(double)>& potential, double rho_max,
                                   int points, int count);

struct TrainTerm {
  int n = 0;
  Branch branch = Branch::plus;
  Complex f{1.0};
};

/// sum_n f_n R_n(rho) e^{i p_z (z - V t)/hbar} e^{-i b t/hbar} on the line E = V p_z + b.
FieldEvaluator train_with_offset(const HarmonicGuide& guide, const std::vector<TrainTerm>& terms,
                                 double b);

/// The b = 0 train.
FieldEvaluator pulse_train(const HarmonicGuide& guide, const std::vector<TrainTerm>& terms);

}  // namespace lwave
