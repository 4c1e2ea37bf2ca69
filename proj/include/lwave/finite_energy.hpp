#pragma once

#include <vector>

#include "lwave/core.hpp"
#include "lwave/field.hpp"
#include "lwave/quadrature.hpp"

namespace lwave {

/// Gaussian weight over w = sqrt(P) = sqrt(m^2 V^2 + 2 m b) in [mV, inf):
/// S(w) = m sqrt(q_w) / (sqrt(pi) hbar w) exp(-q_w (w - w0)^2). Each w selects
/// the real-exponential solution with decay a and amplitude s0 at b(w).
struct WSpectrum {
  double w0 = 1.5;
  double q_w = 50.0;
  double a = 0.5;
  double s0 = 1.0;

  void validate(const PhysicalContext& ctx) const;
  double weight(const PhysicalContext& ctx, double w) const;
  /// Upper end of the w quadrature; the weight beyond it is below e^{-45} of the peak.
  double w_cut() const;
};

/// b(w) = (w^2 - m^2 V^2) / (2m).
double b_of_w(const PhysicalContext& ctx, double w);

/// Measure of the w superposition: dw, or db = (w/m) dw for a superposition
/// written over b.
enum class WMeasure { dw, db };

/// Authoritative value int_{mV}^{inf} S(w) psi_w(rho, z, t) dw with psi_w the
/// un-normalized real-exponential solution at b(w). Only the hbar, mass and V
/// of ctx are used.
Amplitude finite_energy_quadrature(const PhysicalContext& ctx, const WSpectrum& ws, double rho,
                                   double z, double t, const QuadratureSpec& spec = {},
                                   WMeasure measure = WMeasure::dw);

/// Evaluator over the quadrature, normalized so that |psi(0, 0, 0)| = 1 unless
/// an explicit N is given (N > 0).
FieldEvaluator finite_energy_field(const PhysicalContext& ctx, const WSpectrum& ws,
                                   double N = 0.0, QuadratureSpec spec = {});

/// The printed closed form, transcribed factor by factor with erfc for 1 - Phi
/// and Y/sqrt(P) read as y0/hbar, y0 = sqrt(rho^2 - (hbar a V + i zeta)^2).
/// Un-normalized (N = 1).
Amplitude finite_energy_closed_form_verbatim(const PhysicalContext& ctx, const WSpectrum& ws,
                                             double rho, double z, double t);

/// Exact closed form of the db-measure superposition, where the 1/w of S(w)
/// cancels and the w integral is Gaussian: U = 2 sqrt(q + i t/(2 m hbar)) and
/// the carrier exp(i(mVz - mV^2 t/2)/hbar). Un-normalized (N = 1).
Amplitude finite_energy_closed_form_corrected(const PhysicalContext& ctx, const WSpectrum& ws,
                                              double rho, double z, double t);

struct ClosedFormProbe {
  double rho = 0.0;
  double zeta = 0.0;
  double t = 0.0;
  Complex oracle{};
  Complex verbatim{};
  Complex corrected{};
  Complex db_oracle{};               // db-measure quadrature
  double verbatim_deviation = 0.0;   // |verbatim - oracle| / max |oracle|
  double corrected_deviation = 0.0;
  double verbatim_db_deviation = 0.0;   // |verbatim - db_oracle| / max |db_oracle|
  double corrected_db_deviation = 0.0;
  SampleStatus verbatim_status = SampleStatus::ok;
};

struct ClosedFormReport {
  std::vector<ClosedFormProbe> probes;
  double max_verbatim_deviation = 0.0;
  double max_corrected_deviation = 0.0;
  double max_verbatim_db_deviation = 0.0;
  double max_corrected_db_deviation = 0.0;
  bool verbatim_validated = false;   // max deviation from the dw oracle < 1e-3
  bool corrected_validated = false;
  bool corrected_db_validated = false;  // same against the db oracle
};

/// Compares both closed forms with the oracle on a rho x zeta probe set at time t.
ClosedFormReport compare_closed_form(const PhysicalContext& ctx, const WSpectrum& ws,
                                     const std::vector<double>& rhos,
                                     const std::vector<double>& zetas, double t = 0.0);

struct NormOptions {
  double rho_n_max = 50.0;    // in units of hbar / w0
  double zeta_n_max = 200.0;
  double panel = 4.0;         // panel edge in units of hbar / w0
  int nodes = 8;              // Gauss-Legendre nodes per panel and axis
  int threads = 1;
};

struct NormAndDepth {
  double norm = 0.0;          // 2 pi int int |psi|^2 rho drho dz at t = 0 (normalized field)
  double norm_doubled = 0.0;  // same on the doubled domain
  double tail_fraction = 0.0; // |norm_doubled - norm| / norm_doubled
  double depth_of_field = 0.0;
};

/// Squared L2 norm on a window, by tensor Gauss-Legendre panels.
double finite_energy_norm(const FieldEvaluator& field, double rho_max, double zeta_max,
                          const NormOptions& opt);

/// Largest T with |psi(0, VT', T')|^2 >= |psi(0,0,0)|^2 / 2 for all T' <= T.
double depth_of_field(const FieldEvaluator& field, const PhysicalContext& ctx,
                      const WSpectrum& ws);

/// Throws IntegrationDomainError when doubling the window changes the norm by more than 1%.
NormAndDepth norm_and_depth(const PhysicalContext& ctx, const WSpectrum& ws,
                            const NormOptions& opt = {});

}  // namespace lwave
