#include "lwave/fd.hpp"

#include <cmath>

#include "lwave/error.hpp"

namespace lwave::fd {

namespace {

void require_spacing(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw GridError("finite differences need a spacing > 0");
}

// Derivatives along the first index of f.
Eigen::MatrixXcd first_along_rows(const Eigen::MatrixXcd& f, double h) {
  const Eigen::Index n = f.rows();
  if (n < 3) throw GridError("finite differences need at least 3 points per axis");
  require_spacing(h);
  Eigen::MatrixXcd out(n, f.cols());
  out.middleRows(1, n - 2) = (f.bottomRows(n - 2) - f.topRows(n - 2)) / (2.0 * h);
  out.row(0) = (-3.0 * f.row(0) + 4.0 * f.row(1) - f.row(2)) / (2.0 * h);
  out.row(n - 1) = (3.0 * f.row(n - 1) - 4.0 * f.row(n - 2) + f.row(n - 3)) / (2.0 * h);
  return out;
}

Eigen::MatrixXcd second_along_rows(const Eigen::MatrixXcd& f, double h) {
  const Eigen::Index n = f.rows();
  if (n < 3) throw GridError("finite differences need at least 3 points per axis");
  require_spacing(h);
  const double h2 = h * h;
  Eigen::MatrixXcd out(n, f.cols());
  out.middleRows(1, n - 2) =
      (f.bottomRows(n - 2) - 2.0 * f.middleRows(1, n - 2) + f.topRows(n - 2)) / h2;
  if (n >= 4) {
    out.row(0) = (2.0 * f.row(0) - 5.0 * f.row(1) + 4.0 * f.row(2) - f.row(3)) / h2;
    out.row(n - 1) =
        (2.0 * f.row(n - 1) - 5.0 * f.row(n - 2) + 4.0 * f.row(n - 3) - f.row(n - 4)) / h2;
  } else {
    out.row(0) = out.row(1);
    out.row(n - 1) = out.row(1);
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd d_rho(const Eigen::MatrixXcd& f, double h) { return first_along_rows(f, h); }

Eigen::MatrixXcd d2_rho(const Eigen::MatrixXcd& f, double h) { return second_along_rows(f, h); }

Eigen::MatrixXcd d2_z(const Eigen::MatrixXcd& f, double h) {
  return second_along_rows(f.transpose(), h).transpose();
}

Eigen::MatrixXcd transverse_laplacian(const Eigen::MatrixXcd& f, double rho0, double h) {
  if (!(rho0 >= 0.0)) throw GridError("transverse Laplacian needs rho >= 0");
  Eigen::MatrixXcd out = second_along_rows(f, h);
  const Eigen::MatrixXcd first = first_along_rows(f, h);
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const double rho = rho0 + static_cast<double>(i) * h;
    if (rho == 0.0) {
      out.row(i) = 4.0 * (f.row(1) - f.row(0)) / (h * h);
    } else {
      out.row(i) += first.row(i) / rho;
    }
  }
  return out;
}

Eigen::MatrixXcd d_t(const Eigen::MatrixXcd& before, const Eigen::MatrixXcd& after, double h) {
  require_spacing(h);
  if (before.rows() != after.rows() || before.cols() != after.cols()) {
    throw GridError("time derivative needs equally shaped samples");
  }
  return (after - before) / (2.0 * h);
}

}  // namespace lwave::fd
