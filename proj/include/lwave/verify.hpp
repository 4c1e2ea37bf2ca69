#pragma once

#include <Eigen/Core>
#include <functional>
#include <unsupported/Eigen/FFT>
#include <vector>

#include "lwave/field.hpp"
#include "lwave/grid.hpp"
#include "lwave/hankel.hpp"

namespace lwave {

/// Residual of  lap psi + (2im/hbar) d_t psi - (2m/hbar^2) U psi  from second-order
/// stencils applied to the evaluator itself, at steps h and h/2.
struct ResidualReport {
  double max_residual = 0.0;        // step h
  double l2_residual = 0.0;         // root mean square, step h
  double max_residual_half = 0.0;   // step h/2
  double l2_residual_half = 0.0;
  double convergence_order = 0.0;   // log2(max_residual / max_residual_half)
  double relative_residual = 0.0;   // max_residual_half / max |lap psi|
  int points = 0;
};

struct ResidualOptions {
  double hbar = 1.0;
  double mass = 1.0;
  /// Base spatial step; defaults to the grid spacings when <= 0.
  double h = 0.0;
  std::function<double(double)> potential;  // U(rho); empty means free
  int threads = 1;
};

/// Points are the grid's (rho, zeta) nodes at its first time sample, taken at
/// z = zeta + frame_velocity t. Axisymmetric fields use the axis limit at
/// rho = 0; other fields skip rho < h and include the (1/rho^2) d_phi^2 term.
ResidualReport schrodinger_residual(const FieldEvaluator& field, const GridSpec& grid,
                                    const ResidualOptions& opt);

struct TranslationProbe {
  double rho = 0.0;
  double z = 0.0;
  double t = 0.0;
  double delta = 0.0;
};

struct TranslationReport {
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;  // relative to the largest |psi| among the probes
};

/// max over probes of | |psi(rho, z + V delta, t + delta)| - |psi(rho, z, t)| |.
TranslationReport rigid_translation_check(const FieldEvaluator& field, double V,
                                          const std::vector<TranslationProbe>& probes);

/// Deterministic probe set from a seed: rho in [0, rho_max], z and t in
/// [-extent, extent], delta in [-extent, extent].
std::vector<TranslationProbe> random_probes(unsigned seed, int count, double rho_max,
                                            double extent);

/// Exact free evolution on a Bessel-zero radial grid times a periodic zeta
/// grid, in the frame moving with frame_velocity:
///   F(k_rho, k_z) -> F exp(-i hbar (k_rho^2 + k_z^2) dt/(2m) + i k_z v_frame dt).
class FreePropagator {
 public:
  FreePropagator(const GridSpec& grid, double hbar, double mass, double frame_velocity);

  Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& field, double dt) const;

  /// Discrete 2 pi sum w_rho |psi|^2 dzeta.
  double norm_squared(const Eigen::MatrixXcd& field) const;

  /// Largest |psi| on the outer radial row and the two zeta edges, relative to the peak.
  double boundary_fraction(const Eigen::MatrixXcd& field) const;

  const HankelTransform0& hankel() const noexcept { return hankel_; }
  const Eigen::VectorXd& k_z() const noexcept { return kz_; }

 private:
  GridSpec grid_;
  double hbar_;
  double mass_;
  double frame_velocity_;
  HankelTransform0 hankel_;
  Eigen::VectorXd kz_;
};

/// Propagates time slice `slice` of a grid by dt and returns a one-slice grid.
/// Notes record the norms before and after and whether the field reached the
/// boundary (support check at 1e-6 of the peak).
FieldGrid free_propagate(const FieldGrid& initial, double dt, double hbar, double mass,
                         std::size_t slice = 0);

/// Relative L2 distance ||a - b|| / ||b|| with the radial weights of a Bessel-zero grid.
double relative_l2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                   const Eigen::VectorXd& radial_weights);

}  // namespace lwave
