#include "lwave/quadrature.hpp"

#include <Eigen/Eigenvalues>

namespace lwave {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be >= 1");
  // Jacobi matrix of the Legendre recurrence: zero diagonal, k / sqrt(4k^2 - 1).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussLegendre gl;
  gl.nodes = solver.eigenvalues();
  gl.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  return gl;
}

}  // namespace lwave
