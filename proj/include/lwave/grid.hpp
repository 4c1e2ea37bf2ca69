#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "lwave/field.hpp"

namespace lwave {

enum class RadialSampling { uniform, bessel_zeros };

/// Rectangular lattice in (rho, zeta) repeated for each requested time.
///
/// Uniform radial sampling starts at rho = 0 and ends at rho_max. Bessel-zero
/// sampling places rho_i = j_i rho_max / j_{n+1}, the nodes of the order-0
/// quasi-discrete Hankel transform with aperture rho_max.
struct GridSpec {
  double rho_max = 1.0;
  int n_rho = 8;
  double zeta_min = -1.0;
  double zeta_max = 1.0;
  int n_zeta = 8;
  std::vector<double> t_samples{0.0};
  double phi = 0.0;
  RadialSampling radial = RadialSampling::uniform;

  void validate() const;

  Eigen::VectorXd rho_axis() const;
  Eigen::VectorXd zeta_axis() const;
  double zeta_step() const { return (zeta_max - zeta_min) / (n_zeta - 1); }
};

/// Sampled complex field. values[k](i, j) holds psi(rho_i, zeta_j) at t_samples[k],
/// taken at z = zeta_j + frame_velocity * t_k.
struct FieldGrid {
  GridSpec spec;
  Eigen::VectorXd rho;
  Eigen::VectorXd zeta;
  std::vector<Eigen::MatrixXcd> values;
  FieldInfo info;
  std::map<std::string, std::string> notes;
};

/// Fills a grid from an evaluator, in parallel over rows. Throws
/// EvaluationError if any sample is not ok, so every stored value is finite.
FieldGrid sample_field(const FieldEvaluator& field, const GridSpec& spec, int threads = 1);

}  // namespace lwave

namespace lwave {

struct PeakLocation {
  double rho = 0.0;
  double zeta = 0.0;
  double intensity = 0.0;
};

/// Maximum of |psi|^2 at t = 0 over a (rho, zeta) window: a coarse lattice
/// search followed by golden-section refinement along each axis.
PeakLocation locate_peak(const FieldEvaluator& field, double rho_max, double zeta_min,
                         double zeta_max, int lattice = 65);

}  // namespace lwave
