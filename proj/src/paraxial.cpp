#include "lwave/paraxial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/grid.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

namespace {

// Gaussian spectra are cut where the weight drops by e^{-45} below its maximum.
constexpr double kTailExponent = 45.0;

Complex carrier(const PhysicalContext& ctx, double zeta) {
  return std::polar(1.0, 2.0 * ctx.mass * ctx.V * zeta / ctx.hbar);
}

double spectral_cutoff(const PhysicalContext& ctx, const ParaxialSpectrum& spec) {
  const double q = spec.q(ctx);
  const double width = std::sqrt(kTailExponent / q);
  if (spec.family == ParaxialFamily::i0mod) return spec.s / (2.0 * q * ctx.hbar) + width;
  return width;
}

void require_closed(const ParaxialSpectrum& spec) {
  if (spec.family == ParaxialFamily::custom) {
    throw ArgumentError("a custom spectrum has no closed form; use paraxial_quadrature");
  }
}

Amplitude from_quadrature(const QuadratureResult& r, Complex prefactor) {
  Amplitude a{prefactor * r.value};
  a.error_estimate = r.error;
  if (!r.converged) a.status = SampleStatus::tolerance_not_met;
  return a;
}

}  // namespace

const char* to_string(ParaxialFamily f) {
  switch (f) {
    case ParaxialFamily::g1: return "g1";
    case ParaxialFamily::invp: return "invp";
    case ParaxialFamily::i0mod: return "i0mod";
    case ParaxialFamily::j0mod: return "j0mod";
    case ParaxialFamily::custom: return "custom";
  }
  return "unknown";
}

ParaxialFamily parse_paraxial_family(const std::string& name) {
  if (name == "g1") return ParaxialFamily::g1;
  if (name == "invp") return ParaxialFamily::invp;
  if (name == "i0mod") return ParaxialFamily::i0mod;
  if (name == "j0mod") return ParaxialFamily::j0mod;
  throw ArgumentError("unknown paraxial family '" + name + "' (expected g1, invp, i0mod, j0mod)");
}

ParaxialSpectrum ParaxialSpectrum::make(ParaxialFamily family, double alpha, double s) {
  if (family == ParaxialFamily::custom) {
    throw ArgumentError("use ParaxialSpectrum::from_callable for custom spectra");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 0");
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("bandwidth parameter s must be >= 0");
  ParaxialSpectrum out;
  out.family = family;
  out.alpha = alpha;
  out.s = s;
  if (alpha < 10.0) out.quality_flags.push_back("alpha_below_10");
  return out;
}

ParaxialSpectrum ParaxialSpectrum::from_callable(std::function<Complex(double)> weight) {
  if (!weight) throw ArgumentError("custom spectrum needs a callable");
  ParaxialSpectrum out;
  out.family = ParaxialFamily::custom;
  out.custom = std::move(weight);
  return out;
}

double ParaxialSpectrum::q(const PhysicalContext& ctx) const {
  return alpha / (ctx.mass * ctx.mass * ctx.V * ctx.V);
}

Complex ParaxialSpectrum::weight(const PhysicalContext& ctx, double p) const {
  if (family == ParaxialFamily::custom) return custom(p);
  const double qq = q(ctx);
  const double g = std::exp(-qq * p * p);
  switch (family) {
    case ParaxialFamily::g1: return 4.0 * qq * p * g;
    case ParaxialFamily::invp: return g / p;
    case ParaxialFamily::i0mod:
      return qq * p * g * specfun::mod_bessel_i0(Complex(s * p / ctx.hbar)).real();
    case ParaxialFamily::j0mod: return qq * p * g * specfun::bessel_j(0, s * p / ctx.hbar);
    case ParaxialFamily::custom: break;
  }
  return 0.0;
}

Complex q_function(const PhysicalContext& ctx, double q, double zeta) {
  return ctx.hbar *
         Complex(q * ctx.hbar, -kParaxialPhaseSign * zeta / (2.0 * ctx.mass * ctx.V));
}

Amplitude paraxial_closed_value(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                double rho, double zeta) {
  require_closed(spectrum);
  const double q = spectrum.q(ctx);
  const double hbar = ctx.hbar;
  const Complex Q = q_function(ctx, q, zeta);
  const Complex x = rho * rho / (4.0 * Q);
  const Complex phase = carrier(ctx, zeta);
  const double s = spectrum.s;
  try {
    switch (spectrum.family) {
      case ParaxialFamily::g1:
        return Amplitude{phase * (4.0 * q * hbar * hbar / (2.0 * Q)) * std::exp(-x)};
      case ParaxialFamily::invp: {
        if (rho == 0.0) return Amplitude{Complex(0.0), SampleStatus::divergent};
        // The integral itself carries an additive divergent constant times the
        // carrier; this is the rho-dependent part with the constant fixed at
        // ln(hbar/(m V)).
        const Complex value =
            -0.5 * specfun::expint_e1(x) - std::log(rho * ctx.mass * ctx.V / hbar);
        return Amplitude{phase * value};
      }
      case ParaxialFamily::i0mod:
        return Amplitude{phase * (q * hbar * hbar / (2.0 * Q)) *
                         std::exp((s * s - rho * rho) / (4.0 * Q)) *
                         specfun::bessel_j0(s * rho / (2.0 * Q))};
      case ParaxialFamily::j0mod:
        return Amplitude{phase * (q * hbar * hbar / (2.0 * Q)) *
                         std::exp(-(s * s + rho * rho) / (4.0 * Q)) *
                         specfun::mod_bessel_i0(s * rho / (2.0 * Q))};
      case ParaxialFamily::custom: break;
    }
  } catch (const RangeError&) {
    return Amplitude{Complex(0.0), SampleStatus::overflow};
  }
  return {};
}

FieldEvaluator paraxial_closed_form(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                    Normalization norm) {
  ctx.validate();
  require_closed(spectrum);
  FieldInfo info;
  info.family = std::string("paraxial_") + to_string(spectrum.family);
  info.params = {{"hbar", ctx.hbar}, {"mass", ctx.mass}, {"V", ctx.V},
                 {"alpha", spectrum.alpha}, {"s", spectrum.s},
                 {"phase_sign", static_cast<double>(kParaxialPhaseSign)}};
  info.errata_flags = {"gaussian_exponent_uses_Q", "paraxial_phase_sign_negative"};
  if (spectrum.family == ParaxialFamily::invp) info.errata_flags.push_back("invp_log_term");
  if (spectrum.family == ParaxialFamily::i0mod || spectrum.family == ParaxialFamily::j0mod) {
    info.errata_flags.push_back("bessel_spectra_prefactor");
  }
  for (const auto& f : spectrum.quality_flags) info.errata_flags.push_back(f);
  info.frame_velocity = ctx.V;

  const double V = ctx.V;
  auto raw = [ctx, spectrum, V](double rho, double z, double t, double) {
    return paraxial_closed_value(ctx, spectrum, rho, z - V * t);
  };

  double N = norm.value;
  if (norm.peak) {
    switch (spectrum.family) {
      case ParaxialFamily::g1: N = 0.5; break;
      case ParaxialFamily::invp: N = norm.value; break;
      default: {
        const double q = spectrum.q(ctx);
        const double rho_scale = ctx.hbar * std::sqrt(2.0 * q) + spectrum.s;
        const double zeta_scale = 2.0 * q * ctx.hbar * ctx.mass * V;
        const FieldEvaluator probe(raw, info);
        const PeakLocation peak = locate_peak(probe, 6.0 * rho_scale, -4.0 * zeta_scale,
                                              4.0 * zeta_scale);
        N = 1.0 / std::sqrt(peak.intensity);
      }
    }
  }
  info.params["N"] = N;
  auto kernel = [raw, N](double rho, double z, double t, double phi) {
    Amplitude a = raw(rho, z, t, phi);
    a.value *= N;
    a.error_estimate *= N;
    return a;
  };
  return FieldEvaluator(kernel, std::move(info));
}

Amplitude paraxial_quadrature(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                              double rho, double zeta, const QuadratureSpec& spec,
                              int phase_sign) {
  ctx.validate();
  if (spectrum.family == ParaxialFamily::invp) {
    return Amplitude{Complex(0.0), SampleStatus::divergent};
  }
  const double hbar = ctx.hbar;
  const double chirp = phase_sign * zeta / (2.0 * hbar * ctx.mass * ctx.V);
  auto integrand = [&](double p) {
    return specfun::bessel_j(0, rho * p / hbar) * spectrum.weight(ctx, p) *
           std::polar(1.0, chirp * p * p);
  };
  QuadratureResult r;
  if (spectrum.family == ParaxialFamily::custom) {
    r = integrate_semiinfinite(integrand, 0.0, spec, ctx.mass * ctx.V);
  } else {
    r = integrate_complex(integrand, 0.0, spectral_cutoff(ctx, spectrum), spec);
  }
  return from_quadrature(r, carrier(ctx, zeta));
}

Amplitude paraxial_quadrature_difference(const PhysicalContext& ctx,
                                         const ParaxialSpectrum& spectrum, double rho1,
                                         double rho2, double zeta, const QuadratureSpec& spec) {
  ctx.validate();
  const double hbar = ctx.hbar;
  const double chirp = kParaxialPhaseSign * zeta / (2.0 * hbar * ctx.mass * ctx.V);
  auto integrand = [&](double p) -> Complex {
    if (p == 0.0 && spectrum.family == ParaxialFamily::invp) return 0.0;
    const double kernel = specfun::bessel_j(0, rho1 * p / hbar) - specfun::bessel_j(0, rho2 * p / hbar);
    return kernel * spectrum.weight(ctx, p) * std::polar(1.0, chirp * p * p);
  };
  QuadratureResult r;
  if (spectrum.family == ParaxialFamily::custom) {
    r = integrate_semiinfinite(integrand, 0.0, spec, ctx.mass * ctx.V);
  } else {
    r = integrate_complex(integrand, 0.0, spectral_cutoff(ctx, spectrum), spec);
  }
  return from_quadrature(r, carrier(ctx, zeta));
}

Complex paraxial_closed_difference(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                   double rho1, double rho2, double zeta) {
  require_closed(spectrum);
  if (spectrum.family == ParaxialFamily::invp) {
    if (rho1 == 0.0 || rho2 == 0.0) {
      throw SingularityError("invp difference needs both radii > 0");
    }
    const Complex Q = q_function(ctx, spectrum.q(ctx), zeta);
    const Complex e1 = specfun::expint_e1(rho1 * rho1 / (4.0 * Q));
    const Complex e2 = specfun::expint_e1(rho2 * rho2 / (4.0 * Q));
    return carrier(ctx, zeta) * (-0.5 * (e1 - e2) - std::log(rho1 / rho2));
  }
  return paraxial_closed_value(ctx, spectrum, rho1, zeta).value -
         paraxial_closed_value(ctx, spectrum, rho2, zeta).value;
}

Amplitude exact_integrand_quadrature(const PhysicalContext& ctx, const ParaxialSpectrum& spectrum,
                                     double rho, double zeta, const QuadratureSpec& spec) {
  ctx.validate();
  if (spectrum.family == ParaxialFamily::invp) {
    return Amplitude{Complex(0.0), SampleStatus::divergent};
  }
  const double hbar = ctx.hbar;
  const double mV = ctx.mass * ctx.V;
  double theta_max = std::numbers::pi / 2.0;
  if (spectrum.family != ParaxialFamily::custom) {
    const double cut = spectral_cutoff(ctx, spectrum) / mV;
    if (cut < 1.0) theta_max = std::asin(cut);
  }
  // p = mV sin(theta): sqrt(1 - p^2/(mV)^2) = cos(theta), and the phase is
  // written relative to 2 m V zeta / hbar as -2 sin^2(theta/2) m V zeta / hbar.
  auto integrand = [&](double theta) {
    const double p = mV * std::sin(theta);
    const double half = std::sin(0.5 * theta);
    const double phase = -2.0 * half * half * mV * zeta / hbar;
    return specfun::bessel_j(0, rho * p / hbar) * spectrum.weight(ctx, p) *
           std::polar(mV * std::cos(theta), phase);
  };
  const QuadratureResult r = integrate_complex(integrand, 0.0, theta_max, spec);
  return from_quadrature(r, carrier(ctx, zeta));
}

namespace {

double intensity(const FieldEvaluator& field, double rho, double zeta) {
  const FieldSample s = field.sample(rho, zeta, 0.0);
  if (s.status != SampleStatus::ok) {
    std::ostringstream os;
    os << "width measurement hit a " << to_string(s.status) << " sample at rho=" << rho
       << ", zeta=" << zeta;
    throw MeasurementError(os.str());
  }
  return std::norm(s.psi);
}

// First x > 0 with profile(x) = target * reference, for a profile that
// decreases from x = 0.
template <typename F>
double crossing(F&& profile, double reference, double target, double step) {
  const double goal = target * reference;
  double lo = 0.0;
  double hi = step;
  int doublings = 0;
  while (profile(hi) > goal) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 200) throw MeasurementError("intensity never drops to the requested level");
  }
  constexpr int kChecks = 64;
  double previous = reference;
  for (int i = 1; i <= kChecks; ++i) {
    const double v = profile(hi * i / kChecks);
    if (v > previous * (1.0 + 1e-9) + 1e-300) {
      throw MeasurementError("intensity profile is not monotone before the crossing");
    }
    previous = v;
    if (v <= goal) break;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (profile(mid) > goal ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

WidthMeasurement width_measurements(const FieldEvaluator& field, const PhysicalContext& ctx) {
  ctx.validate();
  const double step = ctx.hbar / (ctx.mass * ctx.V);
  const double peak = intensity(field, 0.0, 0.0);
  if (!(peak > 0.0)) throw MeasurementError("field vanishes at the origin");
  WidthMeasurement w;
  w.rho_half_width = crossing([&](double r) { return intensity(field, r, 0.0); }, peak,
                              std::exp(-1.0), step);
  w.zeta_half_width = crossing([&](double z) { return intensity(field, 0.0, z); }, peak,
                               std::exp(-2.0), step);
  return w;
}

WidthMeasurement predicted_g1_widths(const PhysicalContext& ctx, double alpha) {
  const double unit = ctx.hbar / (ctx.mass * ctx.V);
  return {unit * std::sqrt(2.0 * alpha), std::sqrt(std::exp(2.0) - 1.0) * 2.0 * alpha * unit};
}

}  // namespace lwave
