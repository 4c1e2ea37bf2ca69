#include "lwave/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/parallel.hpp"

namespace lwave {

namespace {

struct PointResidual {
  double residual = 0.0;
  double laplacian = 0.0;
};

PointResidual residual_at(const FieldEvaluator& field, double rho, double z, double t, double phi,
                          double h_rho, double h_z, double h_t, const ResidualOptions& opt,
                          bool axisymmetric) {
  auto f = [&](double r, double zz, double tt, double ph) {
    return field(std::abs(r), zz, tt, ph);  // even extension across the axis
  };
  const Complex centre = f(rho, z, t, phi);
  Complex transverse;
  if (rho == 0.0) {
    transverse = 4.0 * (f(h_rho, z, t, phi) - centre) / (h_rho * h_rho);
  } else {
    const Complex up = f(rho + h_rho, z, t, phi);
    const Complex down = f(rho - h_rho, z, t, phi);
    transverse = (up - 2.0 * centre + down) / (h_rho * h_rho) + (up - down) / (2.0 * h_rho * rho);
    if (!axisymmetric) {
      const double h_phi = h_rho / rho;
      transverse += (f(rho, z, t, phi + h_phi) - 2.0 * centre + f(rho, z, t, phi - h_phi)) /
                    (h_phi * h_phi * rho * rho);
    }
  }
  const Complex axial = (f(rho, z + h_z, t, phi) - 2.0 * centre + f(rho, z - h_z, t, phi)) / (h_z * h_z);
  const Complex d_t = (f(rho, z, t + h_t, phi) - f(rho, z, t - h_t, phi)) / (2.0 * h_t);
  const Complex lap = transverse + axial;
  Complex r = lap + Complex(0.0, 2.0 * opt.mass / opt.hbar) * d_t;
  if (opt.potential) r -= 2.0 * opt.mass / (opt.hbar * opt.hbar) * opt.potential(rho) * centre;
  return {std::abs(r), std::abs(lap)};
}

}  // namespace

ResidualReport schrodinger_residual(const FieldEvaluator& field, const GridSpec& grid,
                                    const ResidualOptions& opt) {
  grid.validate();
  if (grid.radial != RadialSampling::uniform) {
    throw GridError("the residual check needs a uniform radial grid");
  }
  if (!(opt.hbar > 0.0) || !(opt.mass > 0.0)) throw DomainError("hbar and mass must be > 0");
  const Eigen::VectorXd rho = grid.rho_axis();
  const Eigen::VectorXd zeta = grid.zeta_axis();
  const double h_rho = opt.h > 0.0 ? opt.h : rho(1) - rho(0);
  const double h_z = opt.h > 0.0 ? opt.h : grid.zeta_step();
  const double t0 = grid.t_samples.front();
  const double speed = field.info().frame_velocity;
  const bool axisymmetric = field.info().axisymmetric;

  struct Point {
    double rho, z;
  };
  std::vector<Point> points;
  for (int i = 0; i < rho.size(); ++i) {
    if (!axisymmetric && rho(i) < h_rho * (1.0 + 1e-12)) continue;
    for (int j = 0; j < zeta.size(); ++j) points.push_back({rho(i), zeta(j) + speed * t0});
  }
  if (points.empty()) throw GridError("no grid point is far enough from the axis");

  std::vector<PointResidual> coarse(points.size());
  std::vector<PointResidual> fine(points.size());
  parallel_for(points.size(), opt.threads, [&](std::size_t k) {
    const Point& p = points[k];
    const double ht = opt.mass * h_rho * h_z / opt.hbar;
    coarse[k] = residual_at(field, p.rho, p.z, t0, grid.phi, h_rho, h_z, ht, opt, axisymmetric);
    fine[k] = residual_at(field, p.rho, p.z, t0, grid.phi, 0.5 * h_rho, 0.5 * h_z, 0.25 * ht, opt,
                          axisymmetric);
  });

  ResidualReport report;
  report.points = static_cast<int>(points.size());
  std::vector<double> sq_coarse(points.size());
  std::vector<double> sq_fine(points.size());
  double lap_max = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    report.max_residual = std::max(report.max_residual, coarse[k].residual);
    report.max_residual_half = std::max(report.max_residual_half, fine[k].residual);
    lap_max = std::max(lap_max, fine[k].laplacian);
    sq_coarse[k] = coarse[k].residual * coarse[k].residual;
    sq_fine[k] = fine[k].residual * fine[k].residual;
  }
  const double n = static_cast<double>(points.size());
  report.l2_residual = std::sqrt(pairwise_sum(sq_coarse) / n);
  report.l2_residual_half = std::sqrt(pairwise_sum(sq_fine) / n);
  report.convergence_order = std::log2(report.max_residual / report.max_residual_half);
  report.relative_residual = lap_max > 0.0 ? report.max_residual_half / lap_max : 0.0;
  return report;
}

TranslationReport rigid_translation_check(const FieldEvaluator& field, double V,
                                          const std::vector<TranslationProbe>& probes) {
  TranslationReport report;
  double scale = 0.0;
  for (const TranslationProbe& p : probes) {
    const double before = std::abs(field(p.rho, p.z, p.t));
    const double after = std::abs(field(p.rho, p.z + V * p.delta, p.t + p.delta));
    scale = std::max({scale, before, after});
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(after - before));
  }
  report.max_rel_deviation = scale > 0.0 ? report.max_abs_deviation / scale : 0.0;
  return report;
}

std::vector<TranslationProbe> random_probes(unsigned seed, int count, double rho_max,
                                            double extent) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radial(0.0, rho_max);
  std::uniform_real_distribution<double> span(-extent, extent);
  std::vector<TranslationProbe> probes;
  for (int i = 0; i < count; ++i) {
    TranslationProbe p;
    p.rho = radial(rng);
    p.z = span(rng);
    p.t = span(rng);
    p.delta = span(rng);
    probes.push_back(p);
  }
  return probes;
}

FreePropagator::FreePropagator(const GridSpec& grid, double hbar, double mass,
                               double frame_velocity)
    : grid_(grid),
      hbar_(hbar),
      mass_(mass),
      frame_velocity_(frame_velocity),
      hankel_((grid.validate(), grid.n_rho), grid.rho_max) {
  if (grid.radial != RadialSampling::bessel_zeros) {
    throw GridError("spectral propagation needs Bessel-zero radial sampling");
  }
  if (!(hbar > 0.0) || !(mass > 0.0)) throw DomainError("hbar and mass must be > 0");
  const int n = grid.n_zeta;
  const double period = n * grid.zeta_step();
  kz_.resize(n);
  for (int j = 0; j < n; ++j) {
    const int wrapped = j <= n / 2 ? j : j - n;
    kz_(j) = 2.0 * std::numbers::pi * wrapped / period;
  }
}

Eigen::MatrixXcd FreePropagator::propagate(const Eigen::MatrixXcd& field, double dt) const {
  if (field.rows() != grid_.n_rho || field.cols() != grid_.n_zeta) {
    throw GridError("field shape does not match the propagator grid");
  }
  if (!std::isfinite(dt)) throw DomainError("time step must be finite");
  Eigen::MatrixXcd spectrum = hankel_.forward(field);
  Eigen::FFT<double> fft;
  const Eigen::VectorXd& k_rho = hankel_.wavenumbers();
  const double c = hbar_ * dt / (2.0 * mass_);
  std::vector<Complex> row(static_cast<std::size_t>(grid_.n_zeta));
  std::vector<Complex> freq;
  for (Eigen::Index i = 0; i < spectrum.rows(); ++i) {
    for (Eigen::Index j = 0; j < spectrum.cols(); ++j) row[static_cast<std::size_t>(j)] = spectrum(i, j);
    fft.fwd(freq, row);
    for (Eigen::Index j = 0; j < spectrum.cols(); ++j) {
      const double kz = kz_(j);
      const double phase = -c * (k_rho(i) * k_rho(i) + kz * kz) + kz * frame_velocity_ * dt;
      freq[static_cast<std::size_t>(j)] *= std::polar(1.0, phase);
    }
    fft.inv(row, freq);
    for (Eigen::Index j = 0; j < spectrum.cols(); ++j) spectrum(i, j) = row[static_cast<std::size_t>(j)];
  }
  return hankel_.inverse(spectrum);
}

double FreePropagator::norm_squared(const Eigen::MatrixXcd& field) const {
  const Eigen::VectorXd per_row = field.rowwise().squaredNorm();
  std::vector<double> terms(static_cast<std::size_t>(per_row.size()));
  for (Eigen::Index i = 0; i < per_row.size(); ++i) {
    terms[static_cast<std::size_t>(i)] = hankel_.radial_weights()(i) * per_row(i);
  }
  return 2.0 * std::numbers::pi * grid_.zeta_step() * pairwise_sum(terms);
}

double FreePropagator::boundary_fraction(const Eigen::MatrixXcd& field) const {
  const double peak = field.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) return 0.0;
  const double edge = std::max({field.row(field.rows() - 1).cwiseAbs().maxCoeff(),
                                field.col(0).cwiseAbs().maxCoeff(),
                                field.col(field.cols() - 1).cwiseAbs().maxCoeff()});
  return edge / peak;
}

FieldGrid free_propagate(const FieldGrid& initial, double dt, double hbar, double mass,
                         std::size_t slice) {
  if (slice >= initial.values.size()) throw GridError("time slice out of range");
  const double speed = initial.info.frame_velocity;
  const FreePropagator prop(initial.spec, hbar, mass, speed);
  const Eigen::MatrixXcd& start = initial.values[slice];
  FieldGrid out;
  out.spec = initial.spec;
  out.spec.t_samples = {initial.spec.t_samples[slice] + dt};
  out.rho = initial.rho;
  out.zeta = initial.zeta;
  out.info = initial.info;
  out.notes = initial.notes;
  out.values.push_back(prop.propagate(start, dt));

  const double before = prop.norm_squared(start);
  const double after = prop.norm_squared(out.values.front());
  const double edge = prop.boundary_fraction(start);
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  out.notes["propagation_dt"] = fmt(dt);
  out.notes["norm_before"] = fmt(std::sqrt(before));
  out.notes["norm_after"] = fmt(std::sqrt(after));
  out.notes["relative_norm_change"] =
      fmt(before > 0.0 ? std::abs(std::sqrt(after) - std::sqrt(before)) / std::sqrt(before) : 0.0);
  out.notes["boundary_fraction"] = fmt(edge);
  out.notes["support_ok"] = edge <= 1e-6 ? "true" : "false";
  return out;
}

double relative_l2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                   const Eigen::VectorXd& radial_weights) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || radial_weights.size() != a.rows()) {
    throw GridError("relative_l2: shapes differ");
  }
  const Eigen::VectorXd diff = (a - b).rowwise().squaredNorm();
  const Eigen::VectorXd ref = b.rowwise().squaredNorm();
  const double num = radial_weights.dot(diff);
  const double den = radial_weights.dot(ref);
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace lwave
