#include "lwave/finite_energy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/exact.hpp"
#include "lwave/parallel.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

namespace {

constexpr double kTailExponent = 45.0;
constexpr double kValidationThreshold = 1e-3;

// y0 = sqrt(rho^2 - (hbar a V + i zeta)^2), the w-independent part of Y.
Complex y0_of(const PhysicalContext& ctx, double a, double rho, double zeta) {
  const Complex shifted(ctx.hbar * a * ctx.V, zeta);
  Complex radicand = rho * rho - shifted * shifted;
  if (radicand.imag() == 0.0) radicand.imag(0.0);
  return std::sqrt(radicand);
}

// e^{W^2/U^2} erfc(W/U + mV U/2) and its derivative in W.
struct ErfcTerm {
  Complex value;
  Complex derivative;
};

ErfcTerm erfc_term(Complex W, Complex U, double mV, Complex log_scale) {
  const Complex arg = W / U + 0.5 * mV * U;
  const Complex e = std::exp(W * W / (U * U) + log_scale);
  const Complex value = e * specfun::erfc(arg);
  const Complex derivative =
      2.0 * W / (U * U) * value -
      2.0 / (std::sqrt(std::numbers::pi) * U) * std::exp(W * W / (U * U) - arg * arg + log_scale);
  return {value, derivative};
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void WSpectrum::validate(const PhysicalContext& ctx) const {
  ctx.validate();
  const double mV = ctx.mass * ctx.V;
  if (!(w0 > mV) || !std::isfinite(w0)) {
    std::ostringstream os;
    os << "spectrum centre w0 must exceed m V = " << mV << " (got " << w0 << ")";
    throw DomainError(os.str());
  }
  if (!(q_w > 0.0) || !std::isfinite(q_w)) throw DomainError("spectral concentration q_w must be > 0");
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("decay a must be >= 0");
  if (!std::isfinite(s0)) throw DomainError("amplitude s0 must be finite");
}

double WSpectrum::weight(const PhysicalContext& ctx, double w) const {
  if (w < ctx.mass * ctx.V) return 0.0;
  const double d = w - w0;
  return ctx.mass * std::sqrt(q_w) / (std::sqrt(std::numbers::pi) * ctx.hbar * w) *
         std::exp(-q_w * d * d);
}

double WSpectrum::w_cut() const { return w0 + std::sqrt(kTailExponent / q_w); }

double b_of_w(const PhysicalContext& ctx, double w) {
  const double mV = ctx.mass * ctx.V;
  return (w - mV) * (w + mV) / (2.0 * ctx.mass);
}

Amplitude finite_energy_quadrature(const PhysicalContext& ctx, const WSpectrum& ws, double rho,
                                   double z, double t, const QuadratureSpec& spec,
                                   WMeasure measure) {
  ws.validate(ctx);
  const double hbar = ctx.hbar;
  const double m = ctx.mass;
  const double V = ctx.V;
  const double zeta = z - V * t;
  const Complex y0 = y0_of(ctx, ws.a, rho, zeta);
  // e^{imV eta_w/hbar} with eta_w = z - (V + b(w)/(mV)) t
  //   = e^{i(mVz - mV^2 t/2)/hbar} e^{-i w^2 t/(2 m hbar)}.
  const double phase0 = (m * V * z - 0.5 * m * V * V * t) / hbar;
  auto integrand = [&](double w) {
    const Complex Y = w * y0 / hbar;
    const Complex psi_w = ws.s0 * 2.0 * V * w * scaled_csinc(Y, ws.a * V * w) *
                          std::polar(1.0, phase0 - w * w * t / (2.0 * m * hbar));
    const double jacobian = measure == WMeasure::db ? w / m : 1.0;
    return jacobian * ws.weight(ctx, w) * psi_w;
  };
  const QuadratureResult r = integrate_complex(integrand, m * V, ws.w_cut(), spec);
  Amplitude out{r.value};
  out.error_estimate = r.error;
  if (!r.converged) out.status = SampleStatus::tolerance_not_met;
  return out;
}

FieldEvaluator finite_energy_field(const PhysicalContext& ctx, const WSpectrum& ws, double N,
                                   QuadratureSpec spec) {
  ws.validate(ctx);
  const Amplitude origin = finite_energy_quadrature(ctx, ws, 0.0, 0.0, 0.0, spec);
  const double scale = std::abs(origin.value);
  if (!(scale > 0.0)) throw MeasurementError("finite-energy field vanishes at the origin");
  // Absolute tolerance tied to the field's own size so that far samples stay cheap.
  spec.abs_tol = std::min(spec.abs_tol, 1e-13 * scale);
  if (!(N > 0.0)) N = 1.0 / scale;

  FieldInfo info;
  info.family = "finite_energy";
  info.params = {{"hbar", ctx.hbar}, {"mass", ctx.mass}, {"V", ctx.V},  {"w0", ws.w0},
                 {"q_w", ws.q_w},    {"a", ws.a},        {"s0", ws.s0}, {"N", N}};
  info.frame_velocity = ctx.V;
  auto kernel = [ctx, ws, spec, N](double rho, double z, double t, double) {
    Amplitude a = finite_energy_quadrature(ctx, ws, rho, z, t, spec);
    a.value *= N;
    a.error_estimate *= N;
    return a;
  };
  return FieldEvaluator(kernel, std::move(info));
}

Amplitude finite_energy_closed_form_verbatim(const PhysicalContext& ctx, const WSpectrum& ws,
                                             double rho, double z, double t) {
  ws.validate(ctx);
  const double hbar = ctx.hbar;
  const double m = ctx.mass;
  const double V = ctx.V;
  const double q = ws.q_w;
  const Complex y0 = y0_of(ctx, ws.a, rho, z - V * t);
  const Complex U = 2.0 * std::sqrt(Complex(q, hbar * t / (2.0 * m)));
  const Complex W0(-2.0 * q * ws.w0 + ws.a * V, 0.0);
  const Complex shift = Complex(0.0, 1.0) * y0 / hbar;
  // (sqrt(q)/U) e^{-q w0} e^{imVz/(2 hbar)} in front of each erfc term.
  const Complex common = std::sqrt(q) / U * std::exp(-q * ws.w0) *
                         std::polar(1.0, m * V * z / (2.0 * hbar));
  try {
    Complex difference;  // (I- - I+) / (iY), Y/sqrt(P) = y0/hbar
    const Complex vsp_over_iy_unit = ws.s0 * V * hbar;
    if (std::abs(y0) / hbar < 1e-6) {
      const ErfcTerm f = erfc_term(W0, U, m * V, 0.0);
      difference = common * (-2.0 / hbar) * f.derivative;
    } else {
      const ErfcTerm fm = erfc_term(W0 - shift, U, m * V, 0.0);
      const ErfcTerm fp = erfc_term(W0 + shift, U, m * V, 0.0);
      difference = common * (fm.value - fp.value) / (Complex(0.0, 1.0) * y0);
    }
    const Complex value = vsp_over_iy_unit * difference;
    if (!finite(value)) return Amplitude{Complex(0.0), SampleStatus::overflow};
    return Amplitude{value};
  } catch (const RangeError&) {
    return Amplitude{Complex(0.0), SampleStatus::overflow};
  }
}

Amplitude finite_energy_closed_form_corrected(const PhysicalContext& ctx, const WSpectrum& ws,
                                              double rho, double z, double t) {
  ws.validate(ctx);
  const double hbar = ctx.hbar;
  const double m = ctx.mass;
  const double V = ctx.V;
  const double q = ws.q_w;
  const Complex y0 = y0_of(ctx, ws.a, rho, z - V * t);
  const Complex U = 2.0 * std::sqrt(Complex(q, t / (2.0 * m * hbar)));
  const Complex W0(-2.0 * q * ws.w0 + ws.a * V, 0.0);
  const Complex shift = Complex(0.0, 1.0) * y0 / hbar;
  const double log_scale = -q * ws.w0 * ws.w0;
  const Complex carrier = std::polar(1.0, (m * V * z - 0.5 * m * V * V * t) / hbar);
  const Complex front = ws.s0 * V * m * std::sqrt(q) / U * carrier;
  try {
    Complex bracket;  // [f(W-) - f(W+)] / (i y0)
    if (std::abs(y0) / hbar < 1e-6) {
      bracket = (-2.0 / hbar) * erfc_term(W0, U, m * V, log_scale).derivative;
    } else {
      const ErfcTerm fm = erfc_term(W0 - shift, U, m * V, log_scale);
      const ErfcTerm fp = erfc_term(W0 + shift, U, m * V, log_scale);
      bracket = (fm.value - fp.value) / (Complex(0.0, 1.0) * y0);
    }
    const Complex value = front * bracket;
    if (!finite(value)) return Amplitude{Complex(0.0), SampleStatus::overflow};
    return Amplitude{value};
  } catch (const RangeError&) {
    return Amplitude{Complex(0.0), SampleStatus::overflow};
  }
}

ClosedFormReport compare_closed_form(const PhysicalContext& ctx, const WSpectrum& ws,
                                     const std::vector<double>& rhos,
                                     const std::vector<double>& zetas, double t) {
  ws.validate(ctx);
  ClosedFormReport report;
  double scale = 0.0;
  double db_scale = 0.0;
  for (double rho : rhos) {
    for (double zeta : zetas) {
      ClosedFormProbe p;
      p.rho = rho;
      p.zeta = zeta;
      p.t = t;
      const double z = zeta + ctx.V * t;
      p.oracle = finite_energy_quadrature(ctx, ws, rho, z, t).value;
      const Amplitude v = finite_energy_closed_form_verbatim(ctx, ws, rho, z, t);
      p.verbatim = v.value;
      p.verbatim_status = v.status;
      p.corrected = finite_energy_closed_form_corrected(ctx, ws, rho, z, t).value;
      p.db_oracle = finite_energy_quadrature(ctx, ws, rho, z, t, {}, WMeasure::db).value;
      scale = std::max(scale, std::abs(p.oracle));
      db_scale = std::max(db_scale, std::abs(p.db_oracle));
      report.probes.push_back(p);
    }
  }
  if (!(scale > 0.0)) scale = 1.0;
  if (!(db_scale > 0.0)) db_scale = 1.0;
  for (auto& p : report.probes) {
    p.verbatim_db_deviation = p.verbatim_status == SampleStatus::ok
                                  ? std::abs(p.verbatim - p.db_oracle) / db_scale
                                  : std::numeric_limits<double>::infinity();
    p.corrected_db_deviation = std::abs(p.corrected - p.db_oracle) / db_scale;
    report.max_verbatim_db_deviation =
        std::max(report.max_verbatim_db_deviation, p.verbatim_db_deviation);
    report.max_corrected_db_deviation =
        std::max(report.max_corrected_db_deviation, p.corrected_db_deviation);
    p.verbatim_deviation = p.verbatim_status == SampleStatus::ok
                               ? std::abs(p.verbatim - p.oracle) / scale
                               : std::numeric_limits<double>::infinity();
    p.corrected_deviation = std::abs(p.corrected - p.oracle) / scale;
    report.max_verbatim_deviation = std::max(report.max_verbatim_deviation, p.verbatim_deviation);
    report.max_corrected_deviation =
        std::max(report.max_corrected_deviation, p.corrected_deviation);
  }
  report.verbatim_validated = report.max_verbatim_deviation < kValidationThreshold;
  report.corrected_validated = report.max_corrected_deviation < kValidationThreshold;
  report.corrected_db_validated = report.max_corrected_db_deviation < kValidationThreshold;
  return report;
}

namespace {

// Tensor Gauss-Legendre sum of 2 pi rho |psi|^2 over [r0, r1] x [z0, z1].
double window_norm(const FieldEvaluator& field, double r0, double r1, double z0, double z1,
                   const NormOptions& opt, const GaussLegendre& gl) {
  const int n_rho = std::max(1, static_cast<int>(std::ceil((r1 - r0) / opt.panel - 1e-9)));
  const int n_zeta = std::max(1, static_cast<int>(std::ceil((z1 - z0) / opt.panel - 1e-9)));
  const double hr = (r1 - r0) / n_rho;
  const double hz = (z1 - z0) / n_zeta;
  const int nodes = opt.nodes;
  const std::size_t rows = static_cast<std::size_t>(n_rho) * static_cast<std::size_t>(nodes);
  std::vector<double> row_sums(rows);
  parallel_for(rows, opt.threads, [&](std::size_t idx) {
    const int panel = static_cast<int>(idx) / nodes;
    const int node = static_cast<int>(idx) % nodes;
    const double rho = r0 + hr * (panel + 0.5 * (gl.nodes(node) + 1.0));
    const double wr = 0.5 * hr * gl.weights(node);
    std::vector<double> parts(static_cast<std::size_t>(n_zeta * nodes));
    for (int pz = 0; pz < n_zeta; ++pz) {
      for (int k = 0; k < nodes; ++k) {
        const double zeta = z0 + hz * (pz + 0.5 * (gl.nodes(k) + 1.0));
        const double wz = 0.5 * hz * gl.weights(k);
        parts[static_cast<std::size_t>(pz * nodes + k)] = wz * std::norm(field(rho, zeta, 0.0));
      }
    }
    row_sums[idx] = 2.0 * std::numbers::pi * rho * wr * pairwise_sum(parts);
  });
  return pairwise_sum(row_sums);
}

void check_norm_options(double rho_max, double zeta_max, const NormOptions& opt) {
  if (!(rho_max > 0.0) || !(zeta_max > 0.0)) {
    throw GridError("norm window needs rho_max > 0 and zeta_max > 0");
  }
  if (!(opt.panel > 0.0) || opt.nodes < 2) throw GridError("norm panels need a positive size and >= 2 nodes");
}

}  // namespace

double finite_energy_norm(const FieldEvaluator& field, double rho_max, double zeta_max,
                          const NormOptions& opt) {
  check_norm_options(rho_max, zeta_max, opt);
  return window_norm(field, 0.0, rho_max, -zeta_max, zeta_max, opt, gauss_legendre(opt.nodes));
}

double depth_of_field(const FieldEvaluator& field, const PhysicalContext& ctx,
                      const WSpectrum& ws) {
  ws.validate(ctx);
  const double reference = std::norm(field(0.0, 0.0, 0.0));
  const double goal = 0.5 * reference;
  auto on_axis = [&](double t) { return std::norm(field(0.0, ctx.V * t, t)); };
  // Dephasing time of the w components on the pulse centre.
  const double spread = ws.w0 / std::sqrt(2.0 * ws.q_w);
  double step = ctx.mass * ctx.hbar / spread / 50.0;
  double t = 0.0;
  for (int i = 0; i < 100000; ++i) {
    if (on_axis(t + step) < goal) {
      double lo = t;
      double hi = t + step;
      for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (on_axis(mid) >= goal ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    t += step;
    if (i > 0 && i % 200 == 0) step *= 2.0;
  }
  throw MeasurementError("on-axis intensity never dropped to half its initial value");
}

NormAndDepth norm_and_depth(const PhysicalContext& ctx, const WSpectrum& ws,
                            const NormOptions& opt) {
  ws.validate(ctx);
  const double unit = ctx.hbar / ws.w0;
  const FieldEvaluator field = finite_energy_field(ctx, ws);
  NormOptions scaled = opt;
  scaled.panel = opt.panel * unit;
  NormAndDepth out;
  const double R = opt.rho_n_max * unit;
  const double Z = opt.zeta_n_max * unit;
  check_norm_options(R, Z, scaled);
  const GaussLegendre gl = gauss_legendre(opt.nodes);
  out.norm = window_norm(field, 0.0, R, -Z, Z, scaled, gl);
  // The doubled window is the inner one plus three outer strips.
  const double outer = window_norm(field, R, 2.0 * R, -2.0 * Z, 2.0 * Z, scaled, gl) +
                       window_norm(field, 0.0, R, Z, 2.0 * Z, scaled, gl) +
                       window_norm(field, 0.0, R, -2.0 * Z, -Z, scaled, gl);
  out.norm_doubled = out.norm + outer;
  out.tail_fraction = std::abs(out.norm_doubled - out.norm) / out.norm_doubled;
  if (!(out.tail_fraction < 0.01)) {
    std::ostringstream os;
    os << "norm integral does not settle: doubling the window changes it by "
       << 100.0 * out.tail_fraction << "%";
    throw IntegrationDomainError(os.str());
  }
  out.depth_of_field = depth_of_field(field, ctx, ws);
  return out;
}

}  // namespace lwave
