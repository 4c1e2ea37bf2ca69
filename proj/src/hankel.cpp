#include "lwave/hankel.hpp"

#include <cmath>
#include <numbers>

#include "lwave/error.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

std::vector<double> bessel_j0_zeros(int n) {
  if (n < 1) throw ArgumentError("bessel_j0_zeros: n must be >= 1");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // McMahon's expansion as starting guess, then Newton with J0' = -J1.
    const double beta = (k - 0.25) * std::numbers::pi;
    const double b8 = 8.0 * beta;
    double x = beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8 * b8);
    for (int it = 0; it < 50; ++it) {
      const double step = specfun::bessel_j(0, x) / specfun::bessel_j(1, x);
      x += step;
      if (std::abs(step) < 1e-15 * x) break;
    }
    zeros.push_back(x);
  }
  return zeros;
}

HankelTransform0::HankelTransform0(int n, double aperture) : n_(n), aperture_(aperture) {
  if (n < 8) throw GridError("Hankel transform needs at least 8 radial points");
  if (!(aperture > 0.0) || !std::isfinite(aperture)) {
    throw GridError("Hankel transform aperture must be > 0");
  }
  const std::vector<double> j = bessel_j0_zeros(n + 1);
  s_ = j[static_cast<std::size_t>(n)];
  const double K = s_ / aperture_;

  r_.resize(n);
  k_.resize(n);
  wr_.resize(n);
  wk_.resize(n);
  scale_r_.resize(n);
  scale_k_.resize(n);
  Eigen::VectorXd j1(n);
  for (int i = 0; i < n; ++i) {
    const double ji = j[static_cast<std::size_t>(i)];
    j1(i) = std::abs(specfun::bessel_j(1, ji));
    r_(i) = ji * aperture_ / s_;
    k_(i) = ji / aperture_;
    scale_r_(i) = aperture_ / j1(i);
    scale_k_(i) = K / j1(i);
    wr_(i) = 2.0 * aperture_ * aperture_ / (s_ * s_ * j1(i) * j1(i));
    wk_(i) = 2.0 / (aperture_ * aperture_ * j1(i) * j1(i));
  }
  t_.resize(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const double ja = j[static_cast<std::size_t>(a)];
      const double jb = j[static_cast<std::size_t>(b)];
      const double v = 2.0 * specfun::bessel_j(0, ja * jb / s_) / (s_ * j1(a) * j1(b));
      t_(a, b) = v;
      t_(b, a) = v;
    }
  }
  defect_ = (t_ * t_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();

}

Eigen::MatrixXcd HankelTransform0::forward(const Eigen::MatrixXcd& f) const {
  if (f.rows() != n_) throw GridError("Hankel forward: row count does not match transform size");
  const Eigen::MatrixXcd f1 = scale_r_.asDiagonal() * f;
  return scale_k_.cwiseInverse().asDiagonal() * (t_.cast<std::complex<double>>() * f1);
}

Eigen::MatrixXcd HankelTransform0::inverse(const Eigen::MatrixXcd& F) const {
  if (F.rows() != n_) throw GridError("Hankel inverse: row count does not match transform size");
  const Eigen::MatrixXcd f2 = scale_k_.asDiagonal() * F;
  return scale_r_.cwiseInverse().asDiagonal() * (t_.cast<std::complex<double>>() * f2);
}

Eigen::VectorXcd HankelTransform0::forward(const Eigen::VectorXcd& f) const {
  return forward(Eigen::MatrixXcd(f)).col(0);
}

Eigen::VectorXcd HankelTransform0::inverse(const Eigen::VectorXcd& F) const {
  return inverse(Eigen::MatrixXcd(F)).col(0);
}

}  // namespace lwave
