#include "lwave/grid.hpp"

#include <cmath>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/hankel.hpp"
#include "lwave/parallel.hpp"

namespace lwave {

void GridSpec::validate() const {
  if (n_rho < 8 || n_zeta < 8) throw GridError("grid needs at least 8 points along rho and zeta");
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw GridError("grid rho_max must be > 0");
  if (!(zeta_max > zeta_min) || !std::isfinite(zeta_min) || !std::isfinite(zeta_max)) {
    throw GridError("grid needs zeta_max > zeta_min");
  }
  if (t_samples.empty()) throw GridError("grid needs at least one time sample");
  for (double t : t_samples) {
    if (!std::isfinite(t)) throw GridError("grid time samples must be finite");
  }
}

Eigen::VectorXd GridSpec::rho_axis() const {
  validate();
  if (radial == RadialSampling::bessel_zeros) {
    return HankelTransform0(n_rho, rho_max).radii();
  }
  return Eigen::VectorXd::LinSpaced(n_rho, 0.0, rho_max);
}

Eigen::VectorXd GridSpec::zeta_axis() const {
  validate();
  return Eigen::VectorXd::LinSpaced(n_zeta, zeta_min, zeta_max);
}

FieldGrid sample_field(const FieldEvaluator& field, const GridSpec& spec, int threads) {
  spec.validate();
  FieldGrid grid;
  grid.spec = spec;
  grid.rho = spec.rho_axis();
  grid.zeta = spec.zeta_axis();
  grid.info = field.info();
  const double speed = field.info().frame_velocity;

  for (double t : spec.t_samples) {
    Eigen::MatrixXcd values(spec.n_rho, spec.n_zeta);
    parallel_for(static_cast<std::size_t>(spec.n_rho), threads, [&](std::size_t i) {
      for (int j = 0; j < spec.n_zeta; ++j) {
        const double z = grid.zeta(j) + speed * t;
        const FieldSample s = field.sample(grid.rho(i), z, t, spec.phi);
        if (s.status != SampleStatus::ok) {
          std::ostringstream os;
          os.precision(17);
          os << field.info().family << ": grid sample at rho=" << grid.rho(i)
             << ", zeta=" << grid.zeta(j) << ", t=" << t << " is " << to_string(s.status);
          throw EvaluationError(os.str(), grid.rho(i));
        }
        values(static_cast<Eigen::Index>(i), j) = s.psi;
      }
    });
    grid.values.push_back(std::move(values));
  }
  return grid;
}

}  // namespace lwave

namespace lwave {

namespace {

double intensity_or_zero(const FieldEvaluator& field, double rho, double zeta) {
  const FieldSample s = field.sample(std::max(rho, 0.0), zeta, 0.0);
  return s.status == SampleStatus::ok ? std::norm(s.psi) : 0.0;
}

template <typename F>
double golden_max(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

PeakLocation locate_peak(const FieldEvaluator& field, double rho_max, double zeta_min,
                         double zeta_max, int lattice) {
  if (!(rho_max > 0.0) || !(zeta_max > zeta_min) || lattice < 3) {
    throw GridError("peak search needs a non-empty window and at least 3 lattice points");
  }
  const double hr = rho_max / (lattice - 1);
  const double hz = (zeta_max - zeta_min) / (lattice - 1);
  PeakLocation best{0.0, zeta_min, -1.0};
  for (int i = 0; i < lattice; ++i) {
    for (int j = 0; j < lattice; ++j) {
      const double rho = i * hr;
      const double zeta = zeta_min + j * hz;
      const double v = intensity_or_zero(field, rho, zeta);
      if (v > best.intensity) best = {rho, zeta, v};
    }
  }
  if (!(best.intensity > 0.0)) throw MeasurementError("peak search found no finite nonzero sample");
  double rho = best.rho;
  double zeta = best.zeta;
  for (int round = 0; round < 3; ++round) {
    rho = golden_max([&](double r) { return intensity_or_zero(field, r, zeta); },
                     std::max(0.0, rho - hr), std::min(rho_max, rho + hr));
    zeta = golden_max([&](double z) { return intensity_or_zero(field, rho, z); },
                      std::max(zeta_min, zeta - hz), std::min(zeta_max, zeta + hz));
  }
  // The lattice point may beat the refined one when the peak sits on the boundary.
  const double refined = intensity_or_zero(field, rho, zeta);
  if (refined >= best.intensity) return {rho, zeta, refined};
  return best;
}

}  // namespace lwave
