#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "lwave/core.hpp"
#include "lwave/field.hpp"
#include "lwave/quadrature.hpp"

namespace lwave {

/// Energy spectrum over [E-, E+] feeding the exact superposition.
///
///   fourier_element   a_n exp(2 pi i n E / D)
///   real_exp          s0 exp(a (E - E+)),  a >= 0
///   general           arbitrary callable S(E)
struct ExactSpectrum {
  enum class Kind { fourier_element, real_exp, general };

  Kind kind = Kind::general;
  int n = 0;
  Complex a_n{1.0};
  double a = 0.0;
  double s0 = 1.0;
  std::function<Complex(double)> general;

  static ExactSpectrum fourier_element(int n, Complex a_n);
  static ExactSpectrum real_exp(double a, double s0);
  static ExactSpectrum from_callable(std::function<Complex(double)> S);

  Complex operator()(const PhysicalContext& ctx, double E) const;
};

/// exp(-shift) * sin(Y) / Y without forming sin(Y) when |Im Y| is large.
Complex scaled_csinc(Complex Y, double shift);

/// Z = sqrt((A zeta/(hbar V) + n pi)^2 + P rho^2 / hbar^2).
double z_argument(const PhysicalContext& ctx, int n, double rho, double zeta);

/// Y = (sqrt(P)/hbar) sqrt(rho^2 - (hbar a V + i zeta)^2), principal branch.
Complex y_argument(const PhysicalContext& ctx, double a, double rho, double zeta);

/// Single Fourier-series element N a_n 2A sinc(Z) e^{imV eta/hbar} e^{2 pi i n B/D}.
/// With peak_normalize the constant N makes the maximum of |psi| equal to one.
FieldEvaluator fourier_element(const PhysicalContext& ctx, int n, Complex a_n, double N = 1.0,
                               bool peak_normalize = false);

/// Real-exponential solution N s0 2V sqrt(P) e^{imV eta/hbar} e^{-aV sqrt(P)} sinc(Y).
FieldEvaluator mackinnon_solution(const PhysicalContext& ctx, double a, double s0, double N = 1.0,
                                  bool peak_normalize = false);

/// Same, parameterized by the normalized decay Abar = sqrt(P) a V.
FieldEvaluator mackinnon_from_abar(const PhysicalContext& ctx, double abar,
                                   bool peak_normalize = true);

/// Coefficients a_n = (1/D) int S(E) e^{-2 pi i n E/D} dE for n = -N_trunc..N_trunc
/// (index n + N_trunc).
struct FourierCoefficients {
  int n_trunc = 0;
  std::vector<Complex> a;
  std::vector<double> error;
  std::vector<bool> converged;

  Complex at(int n) const { return a[static_cast<std::size_t>(n + n_trunc)]; }
};

FourierCoefficients fourier_coefficients(const PhysicalContext& ctx,
                                         const std::function<Complex(double)>& S, int n_trunc,
                                         const QuadratureSpec& spec = {});

/// Truncated series S_N(E) = sum a_n e^{2 pi i n E / D}.
Complex fourier_series_value(const PhysicalContext& ctx, const FourierCoefficients& c, double E);

/// N 2A e^{imV eta/hbar} sum_n a_n e^{2 pi i n B/D} sinc(Z_n); an exact solution for any truncation.
FieldEvaluator general_solution(const PhysicalContext& ctx, const FourierCoefficients& c,
                                double N = 1.0);

/// Quadrature oracle in u:
/// A e^{imV eta/hbar} int_{-1}^{1} S(Au+B) J0(sqrt(P) rho sqrt(1-u^2)/hbar) e^{iA zeta u/(hbar V)} du.
Amplitude superposition_quadrature(const PhysicalContext& ctx, const ExactSpectrum& S, double rho,
                                   double z, double t, const QuadratureSpec& spec = {});

/// Evaluator wrapping superposition_quadrature.
FieldEvaluator superposition_field(const PhysicalContext& ctx, const ExactSpectrum& S,
                                   const QuadratureSpec& spec = {});

/// |psi|^2 and (Re psi)^2 over normalized coordinates rho' = sqrt(P) rho/hbar,
/// zeta' = sqrt(P) zeta/hbar at t = 0. Matrices are indexed (rho', zeta').
struct NormalizedProfile {
  Eigen::VectorXd rho_n;
  Eigen::VectorXd zeta_n;
  Eigen::MatrixXd abs2;
  Eigen::MatrixXd re2;
};

NormalizedProfile normalized_profile(const FieldEvaluator& field, const PhysicalContext& ctx,
                                     double rho_n_max, int n_rho, double zeta_n_max, int n_zeta);

/// Ratio of |psi|^2 on the diagonal rho' = zeta' to |psi|^2 at the point with
/// rho' = zeta'/sqrt(2), both at normalized radius r' from the origin.
double x_arm_contrast(const FieldEvaluator& field, const PhysicalContext& ctx, double radius_n);

}  // namespace lwave
