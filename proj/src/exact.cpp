#include "lwave/exact.hpp"

#include <cmath>
#include <numbers>

#include "lwave/error.hpp"
#include "lwave/parallel.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

namespace {

constexpr double kPi = std::numbers::pi;

Complex eta_phase(const PhysicalContext& ctx, const KinematicConstants& k, double z, double t) {
  const double eta = z - k.v_phase_b * t;
  return std::polar(1.0, ctx.mass * ctx.V * eta / ctx.hbar);
}

FieldInfo exact_info(const PhysicalContext& ctx, const char* family) {
  FieldInfo info;
  info.family = family;
  info.params = {{"hbar", ctx.hbar}, {"mass", ctx.mass}, {"V", ctx.V}, {"b", ctx.b}};
  info.frame_velocity = ctx.V;
  return info;
}

}  // namespace

ExactSpectrum ExactSpectrum::fourier_element(int n, Complex a_n) {
  ExactSpectrum s;
  s.kind = Kind::fourier_element;
  s.n = n;
  s.a_n = a_n;
  return s;
}

ExactSpectrum ExactSpectrum::real_exp(double a, double s0) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("real-exponential decay a must be >= 0");
  ExactSpectrum s;
  s.kind = Kind::real_exp;
  s.a = a;
  s.s0 = s0;
  return s;
}

ExactSpectrum ExactSpectrum::from_callable(std::function<Complex(double)> S) {
  if (!S) throw ArgumentError("general spectrum needs a callable");
  ExactSpectrum s;
  s.kind = Kind::general;
  s.general = std::move(S);
  return s;
}

Complex ExactSpectrum::operator()(const PhysicalContext& ctx, double E) const {
  const KinematicConstants k = kinematics(ctx);
  switch (kind) {
    case Kind::fourier_element: return a_n * std::polar(1.0, 2.0 * kPi * n * E / k.D);
    case Kind::real_exp: return s0 * std::exp(a * (E - k.E_plus));
    case Kind::general: return general(E);
  }
  return 0.0;
}

Complex scaled_csinc(Complex Y, double shift) {
  if (std::abs(Y.imag()) < 30.0) return std::exp(-shift) * specfun::csinc(Y);
  const Complex iY(-Y.imag(), Y.real());
  return (std::exp(iY - shift) - std::exp(-iY - shift)) / (2.0 * iY);
}

double z_argument(const PhysicalContext& ctx, int n, double rho, double zeta) {
  const KinematicConstants k = kinematics(ctx);
  const double axial = k.A * zeta / (ctx.hbar * ctx.V) + n * kPi;
  const double radial = std::sqrt(k.P) * rho / ctx.hbar;
  return std::hypot(axial, radial);
}

Complex y_argument(const PhysicalContext& ctx, double a, double rho, double zeta) {
  const KinematicConstants k = kinematics(ctx);
  const Complex shifted(ctx.hbar * a * ctx.V, zeta);
  Complex radicand = rho * rho - shifted * shifted;
  // A negative real radicand maps to +i sqrt(|.|).
  if (radicand.imag() == 0.0) radicand.imag(0.0);
  return std::sqrt(k.P) / ctx.hbar * std::sqrt(radicand);
}

FieldEvaluator fourier_element(const PhysicalContext& ctx, int n, Complex a_n, double N,
                               bool peak_normalize) {
  const KinematicConstants k = kinematics(ctx);
  if (peak_normalize) {
    if (a_n == Complex(0.0)) throw ArgumentError("cannot peak-normalize a zero coefficient");
    N = 1.0 / std::abs(a_n * 2.0 * k.A);
  }
  FieldInfo info = exact_info(ctx, "fourier_element");
  info.params["n"] = n;
  info.params["a_n_re"] = a_n.real();
  info.params["a_n_im"] = a_n.imag();
  info.params["N"] = N;
  const Complex constant = N * a_n * 2.0 * k.A * std::polar(1.0, 2.0 * kPi * n * k.B / k.D);
  const double V = ctx.V;
  auto kernel = [ctx, k, n, constant, V](double rho, double z, double t, double) {
    const double Z = z_argument(ctx, n, rho, z - V * t);
    return Amplitude{constant * specfun::csinc(Z) * eta_phase(ctx, k, z, t)};
  };
  return FieldEvaluator(kernel, std::move(info));
}

FieldEvaluator mackinnon_solution(const PhysicalContext& ctx, double a, double s0, double N,
                                  bool peak_normalize) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("real-exponential decay a must be >= 0");
  const KinematicConstants k = kinematics(ctx);
  const double abar = a * k.A;
  if (peak_normalize) {
    if (s0 == 0.0) throw ArgumentError("cannot peak-normalize with s0 = 0");
    // Peak on the origin, where Y = i abar.
    N = 1.0 / std::abs(s0 * 2.0 * k.A * scaled_csinc(Complex(0.0, abar), abar));
  }
  FieldInfo info = exact_info(ctx, "mackinnon");
  info.params["a"] = a;
  info.params["s0"] = s0;
  info.params["abar"] = abar;
  info.params["N"] = N;
  const double prefactor = N * s0 * 2.0 * k.A;
  const double V = ctx.V;
  auto kernel = [ctx, k, a, abar, prefactor, V](double rho, double z, double t, double) {
    const Complex Y = y_argument(ctx, a, rho, z - V * t);
    return Amplitude{prefactor * scaled_csinc(Y, abar) * eta_phase(ctx, k, z, t)};
  };
  return FieldEvaluator(kernel, std::move(info));
}

FieldEvaluator mackinnon_from_abar(const PhysicalContext& ctx, double abar, bool peak_normalize) {
  const KinematicConstants k = kinematics(ctx);
  return mackinnon_solution(ctx, abar / k.A, 1.0, 1.0, peak_normalize);
}

FourierCoefficients fourier_coefficients(const PhysicalContext& ctx,
                                         const std::function<Complex(double)>& S, int n_trunc,
                                         const QuadratureSpec& spec) {
  if (n_trunc < 0) throw ArgumentError("truncation order must be >= 0");
  if (!S) throw ArgumentError("fourier_coefficients needs a spectrum");
  const KinematicConstants k = kinematics(ctx);
  FourierCoefficients out;
  out.n_trunc = n_trunc;
  for (int n = -n_trunc; n <= n_trunc; ++n) {
    // E = A u + B: a_n = (1/2) e^{-2 pi i n B/D} int_{-1}^{1} S(Au+B) e^{-i pi n u} du.
    auto integrand = [&](double u) { return S(k.A * u + k.B) * std::polar(1.0, -kPi * n * u); };
    const QuadratureResult r = integrate_complex(integrand, -1.0, 1.0, spec);
    out.a.push_back(0.5 * std::polar(1.0, -2.0 * kPi * n * k.B / k.D) * r.value);
    out.error.push_back(0.5 * r.error);
    out.converged.push_back(r.converged);
  }
  return out;
}

Complex fourier_series_value(const PhysicalContext& ctx, const FourierCoefficients& c, double E) {
  const KinematicConstants k = kinematics(ctx);
  std::vector<Complex> terms;
  terms.reserve(c.a.size());
  for (int n = -c.n_trunc; n <= c.n_trunc; ++n) {
    terms.push_back(c.at(n) * std::polar(1.0, 2.0 * kPi * n * E / k.D));
  }
  return pairwise_sum(terms);
}

FieldEvaluator general_solution(const PhysicalContext& ctx, const FourierCoefficients& c,
                                double N) {
  const KinematicConstants k = kinematics(ctx);
  FieldInfo info = exact_info(ctx, "fourier_series");
  info.params["n_trunc"] = c.n_trunc;
  info.params["N"] = N;
  std::vector<Complex> weights;
  for (int n = -c.n_trunc; n <= c.n_trunc; ++n) {
    weights.push_back(c.at(n) * std::polar(1.0, 2.0 * kPi * n * k.B / k.D));
  }
  const double prefactor = N * 2.0 * k.A;
  const int n_trunc = c.n_trunc;
  const double V = ctx.V;
  auto kernel = [ctx, k, weights, prefactor, n_trunc, V](double rho, double z, double t, double) {
    const double zeta = z - V * t;
    std::vector<Complex> terms(weights.size());
    for (int n = -n_trunc; n <= n_trunc; ++n) {
      const auto idx = static_cast<std::size_t>(n + n_trunc);
      terms[idx] = weights[idx] * specfun::csinc(z_argument(ctx, n, rho, zeta));
    }
    return Amplitude{prefactor * pairwise_sum(terms) * eta_phase(ctx, k, z, t)};
  };
  return FieldEvaluator(kernel, std::move(info));
}

Amplitude superposition_quadrature(const PhysicalContext& ctx, const ExactSpectrum& S, double rho,
                                   double z, double t, const QuadratureSpec& spec) {
  const KinematicConstants k = kinematics(ctx);
  const double zeta = z - ctx.V * t;
  const double radial = std::sqrt(k.P) * rho / ctx.hbar;
  const double axial = k.A * zeta / (ctx.hbar * ctx.V);
  auto integrand = [&](double u) {
    const double transverse = std::sqrt(std::max(0.0, (1.0 - u) * (1.0 + u)));
    return S(ctx, k.A * u + k.B) * specfun::bessel_j(0, radial * transverse) *
           std::polar(1.0, axial * u);
  };
  const QuadratureResult r = integrate_complex(integrand, -1.0, 1.0, spec);
  Amplitude out{k.A * eta_phase(ctx, k, z, t) * r.value};
  out.error_estimate = k.A * r.error;
  if (!r.converged) out.status = SampleStatus::tolerance_not_met;
  return out;
}

FieldEvaluator superposition_field(const PhysicalContext& ctx, const ExactSpectrum& S,
                                   const QuadratureSpec& spec) {
  kinematics(ctx);
  FieldInfo info = exact_info(ctx, "superposition_quadrature");
  auto kernel = [ctx, S, spec](double rho, double z, double t, double) {
    return superposition_quadrature(ctx, S, rho, z, t, spec);
  };
  return FieldEvaluator(kernel, std::move(info));
}

NormalizedProfile normalized_profile(const FieldEvaluator& field, const PhysicalContext& ctx,
                                     double rho_n_max, int n_rho, double zeta_n_max, int n_zeta) {
  if (n_rho < 2 || n_zeta < 2 || !(rho_n_max > 0.0) || !(zeta_n_max > 0.0)) {
    throw GridError("normalized profile needs positive extents and at least 2 points per axis");
  }
  const KinematicConstants k = kinematics(ctx);
  const double unit = ctx.hbar / std::sqrt(k.P);
  NormalizedProfile out;
  out.rho_n = Eigen::VectorXd::LinSpaced(n_rho, 0.0, rho_n_max);
  out.zeta_n = Eigen::VectorXd::LinSpaced(n_zeta, -zeta_n_max, zeta_n_max);
  out.abs2.resize(n_rho, n_zeta);
  out.re2.resize(n_rho, n_zeta);
  for (int i = 0; i < n_rho; ++i) {
    for (int j = 0; j < n_zeta; ++j) {
      const Complex psi = field(out.rho_n(i) * unit, out.zeta_n(j) * unit, 0.0);
      out.abs2(i, j) = std::norm(psi);
      out.re2(i, j) = psi.real() * psi.real();
    }
  }
  return out;
}

double x_arm_contrast(const FieldEvaluator& field, const PhysicalContext& ctx, double radius_n) {
  if (!(radius_n > 0.0)) throw ArgumentError("contrast radius must be > 0");
  const KinematicConstants k = kinematics(ctx);
  const double unit = ctx.hbar / std::sqrt(k.P);
  const double r = radius_n * unit;
  const double diagonal = std::norm(field(r / std::sqrt(2.0), r / std::sqrt(2.0), 0.0));
  // rho' = zeta'/sqrt(2) on the same circle: rho' = r/sqrt(3), zeta' = r sqrt(2/3).
  const double off = std::norm(field(r / std::sqrt(3.0), r * std::sqrt(2.0 / 3.0), 0.0));
  if (!(off > 0.0)) throw MeasurementError("off-diagonal intensity vanishes");
  return diagonal / off;
}

}  // namespace lwave
