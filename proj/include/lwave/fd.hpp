#pragma once

// Second-order finite differences on sampled fields. Matrices are indexed
// (rho, zeta); rho runs down the rows. Boundary rows and columns use
// second-order one-sided stencils when enough points exist.

#include <Eigen/Core>

namespace lwave::fd {

/// d/d(rho) along rows with uniform spacing h.
Eigen::MatrixXcd d_rho(const Eigen::MatrixXcd& f, double h);
Eigen::MatrixXcd d2_rho(const Eigen::MatrixXcd& f, double h);

/// d^2/d(zeta)^2 along columns with uniform spacing h.
Eigen::MatrixXcd d2_z(const Eigen::MatrixXcd& f, double h);

/// (1/rho) d/drho (rho d/drho f) on rows rho_i = rho0 + i h. If rho0 == 0 the
/// first row uses the axis limit 2 d^2f/drho^2 with the even reflection
/// f(-h) = f(h).
Eigen::MatrixXcd transverse_laplacian(const Eigen::MatrixXcd& f, double rho0, double h);

/// Central time derivative from samples at t - h, t, t + h (the middle one unused).
Eigen::MatrixXcd d_t(const Eigen::MatrixXcd& before, const Eigen::MatrixXcd& after, double h);

}  // namespace lwave::fd
