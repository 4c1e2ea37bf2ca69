// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lwave/beams.hpp"
#include "lwave/error.hpp"
#include "lwave/exact.hpp"
#include "lwave/finite_energy.hpp"
#include "lwave/grid.hpp"
#include "lwave/hankel.hpp"
#include "lwave/io.hpp"
#include "lwave/parallel.hpp"
#include "lwave/paraxial.hpp"
#include "lwave/potential.hpp"
#include "lwave/specfun.hpp"
#include "lwave/verify.hpp"

using namespace lwave;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int worker_count() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

std::string fix(double x, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

QuadratureSpec tight() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 10000;
  return spec;
}

bool order_near_two(double order) { return order >= 1.8 && order <= 2.2; }

// ---------------------------------------------------------------------------

Outcome kinematics_roots() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_root = 0.0;
  double worst_prho = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double hbar = std::pow(10.0, log_scale(rng));
    const double m = std::pow(10.0, log_scale(rng));
    const double V = std::pow(10.0, log_scale(rng));
    const double b = i % 10 == 0 ? 0.0 : std::pow(10.0, 2.0 * log_scale(rng)) * unit(rng);
    const auto ctx = PhysicalContext::make(hbar, m, V, b);
    const KinematicConstants k = kinematics(ctx);
    // Roots of -E^2 + 2 (m V^2 + b) E - b^2 in extended precision.
    const long double Bl = static_cast<long double>(m) * V * V + b;
    const long double disc = std::sqrt(Bl * Bl - static_cast<long double>(b) * b);
    const long double plus = Bl + disc;
    const long double minus = static_cast<long double>(b) * b / plus;
    worst_root = std::max(worst_root, static_cast<double>(std::abs((k.E_plus - plus) / plus)));
    if (minus > 0.0L) {
      worst_root = std::max(worst_root, static_cast<double>(std::abs((k.E_minus - minus) / minus)));
    } else {
      worst_root = std::max(worst_root, std::abs(k.E_minus) / k.E_plus);
    }
    const double p_scale = std::sqrt(2.0 * m * k.E_plus);
    worst_prho = std::max({worst_prho, p_rho_of_E(ctx, k.E_plus) / p_scale,
                           p_rho_of_E(ctx, k.E_minus) / p_scale});
  }
  const auto ctx = PhysicalContext::make(1.3, 0.7, 2.1, 0.0);
  const KinematicConstants k = kinematics(ctx);
  const double boundary = std::abs(k.E_plus - 2.0 * ctx.mass * ctx.V * ctx.V) / k.E_plus;
  const bool pass = worst_root <= 1e-12 && worst_prho <= 1e-12 && boundary <= 1e-12 && k.E_minus == 0.0;
  return {pass, "max root error " + sci(worst_root) + ", max p_rho(E+-) " + sci(worst_prho) +
                    ", b=0 E+ vs 2mV^2 " + sci(boundary)};
}

Outcome bessel_residual() {
  BesselBeamParams params;
  params.E = 1.0;
  params.p_z = 1.0;
  const FieldEvaluator beam = bessel_beam(params);
  GridSpec grid;
  grid.rho_max = 8.0;
  grid.n_rho = 33;
  grid.zeta_min = -4.0;
  grid.zeta_max = 4.0;
  grid.n_zeta = 33;
  grid.t_samples = {0.3};
  ResidualOptions opt;
  opt.h = 0.05;
  opt.threads = worker_count();
  const ResidualReport good = schrodinger_residual(beam, grid, opt);

  // Same profile with E = p_z^2/m in the time factor: not a solution.
  const double p_rho = params.p_rho();
  FieldInfo info = beam.info();
  info.family = "wrong_dispersion";
  const FieldEvaluator wrong(
      [p_rho](double rho, double z, double t, double) {
        return Amplitude{specfun::bessel_j(0, p_rho * rho) * std::exp(Complex(0.0, z - 2.0 * t))};
      },
      info);
  const ResidualReport bad = schrodinger_residual(wrong, grid, opt);
  const bool control_fails = !order_near_two(bad.convergence_order) && bad.relative_residual > 1e-2;
  return {order_near_two(good.convergence_order) && control_fails,
          "order " + fix(good.convergence_order, 3) + " (max residual " + sci(good.max_residual) +
              " -> " + sci(good.max_residual_half) + "); control order " +
              fix(bad.convergence_order, 3) + ", relative residual " + sci(bad.relative_residual)};
}

Outcome paraxial_g1() {
  const PhysicalContext ctx;
  const auto spectrum = ParaxialSpectrum::make(ParaxialFamily::g1, 100.0);
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> rho_d(0.0, 40.0);
  std::uniform_real_distribution<double> zeta_d(-600.0, 600.0);
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double rho = rho_d(rng);
    const double zeta = zeta_d(rng);
    const Complex closed = paraxial_closed_value(ctx, spectrum, rho, zeta).value;
    const Complex quad = paraxial_quadrature(ctx, spectrum, rho, zeta, tight()).value;
    worst = std::max(worst, std::abs(closed - quad));
    scale = std::max(scale, std::abs(closed));
  }
  const double agreement = worst / scale;
  std::string detail = "closed vs quadrature " + sci(agreement);
  bool widths_ok = true;
  for (double alpha : {25.0, 100.0}) {
    const FieldEvaluator field =
        paraxial_closed_form(ctx, ParaxialSpectrum::make(ParaxialFamily::g1, alpha));
    const WidthMeasurement w = width_measurements(field, ctx);
    const double rho_expected = ctx.hbar * std::sqrt(2.0 * alpha) / (ctx.mass * ctx.V);
    const double zeta_expected =
        std::sqrt(std::exp(2.0) - 1.0) * 2.0 * alpha * ctx.hbar / (ctx.mass * ctx.V);
    const double e_rho = std::abs(w.rho_half_width / rho_expected - 1.0);
    const double e_zeta = std::abs(w.zeta_half_width / zeta_expected - 1.0);
    widths_ok = widths_ok && e_rho < 0.01 && e_zeta < 0.01;
    detail += "; alpha " + fix(alpha, 0) + ": d_rho " + fix(w.rho_half_width) + " (" + sci(e_rho) +
              "), d_zeta " + fix(w.zeta_half_width, 2) + " (" + sci(e_zeta) + ")";
  }
  return {agreement < 1e-6 && widths_ok, detail};
}

Outcome paraxial_trend() {
  const PhysicalContext ctx;
  std::vector<double> deviation;
  std::string detail = "L-inf deviation";
  for (double alpha : {10.0, 100.0, 1000.0}) {
    const auto spectrum = ParaxialSpectrum::make(ParaxialFamily::g1, alpha);
    const double d_rho = std::sqrt(2.0 * alpha);
    const double d_zeta = std::sqrt(std::exp(2.0) - 1.0) * 2.0 * alpha;
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 9; ++j) {
        const double rho = 3.0 * d_rho * i / 6.0;
        const double zeta = -d_zeta + 2.0 * d_zeta * j / 8.0;
        const Complex para = paraxial_quadrature(ctx, spectrum, rho, zeta, tight()).value;
        const Complex exact = exact_integrand_quadrature(ctx, spectrum, rho, zeta, tight()).value;
        worst = std::max(worst, std::abs(para - exact));
        scale = std::max(scale, std::abs(para));
      }
    }
    deviation.push_back(worst / scale);
    detail += " alpha " + fix(alpha, 0) + ": " + sci(worst / scale) + ";";
  }
  const bool monotone = deviation[0] > deviation[1] && deviation[1] > deviation[2];
  return {monotone, detail};
}

Outcome exact_element() {
  const auto ctx = PhysicalContext::make(1.0, 1.0, 1.0, 0.3);
  const FieldEvaluator element = fourier_element(ctx, 1, Complex(0.8, 0.3));
  const ExactSpectrum spectrum = ExactSpectrum::fourier_element(1, Complex(0.8, 0.3));
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> rho_d(0.0, 10.0);
  std::uniform_real_distribution<double> span(-10.0, 10.0);
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double rho = rho_d(rng);
    const double z = span(rng);
    const double t = 0.5 * span(rng);
    const Complex closed = element(rho, z, t);
    const Complex quad = superposition_quadrature(ctx, spectrum, rho, z, t, tight()).value;
    worst = std::max(worst, std::abs(closed - quad));
    scale = std::max(scale, std::abs(closed));
  }
  const double agreement = worst / scale;
  const TranslationReport rigid =
      rigid_translation_check(element, ctx.V, random_probes(506, 100, 10.0, 20.0));

  GridSpec grid;
  grid.rho_max = 6.0;
  grid.n_rho = 25;
  grid.zeta_min = -6.0;
  grid.zeta_max = 6.0;
  grid.n_zeta = 49;
  grid.t_samples = {0.7};
  ResidualOptions opt;
  opt.h = 0.05;
  opt.threads = worker_count();
  const ResidualReport residual = schrodinger_residual(element, grid, opt);
  return {agreement < 1e-9 && rigid.max_rel_deviation <= 1e-12 &&
              order_near_two(residual.convergence_order),
          "closed vs quadrature " + sci(agreement) + ", translation " +
              sci(rigid.max_rel_deviation) + ", residual order " +
              fix(residual.convergence_order, 3)};
}

Outcome general_series() {
  const PhysicalContext ctx;
  const KinematicConstants k = kinematics(ctx);
  const double sigma = k.D / 10.0;
  const auto gaussian = [B = k.B, sigma](double E) {
    return Complex(std::exp(-(E - B) * (E - B) / (2.0 * sigma * sigma)));
  };
  const ExactSpectrum spectrum = ExactSpectrum::from_callable(gaussian);
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 20; ++j) points.emplace_back(1.0 * i, -10.0 + 1.0 * j);
  }
  std::vector<Complex> oracle(points.size());
  parallel_for(points.size(), worker_count(), [&](std::size_t p) {
    oracle[p] = superposition_quadrature(ctx, spectrum, points[p].first, points[p].second, 0.0,
                                         tight()).value;
  });
  double norm = 0.0;
  for (const Complex& v : oracle) norm += std::norm(v);

  std::vector<double> errors;
  std::string detail = "grid-L2 error";
  for (int n_trunc : {2, 4, 8, 16}) {
    const FourierCoefficients c = fourier_coefficients(ctx, gaussian, n_trunc, tight());
    const FieldEvaluator series = general_solution(ctx, c);
    double diff = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      diff += std::norm(series(points[p].first, points[p].second, 0.0) - oracle[p]);
    }
    errors.push_back(std::sqrt(diff / norm));
    detail += " N=" + std::to_string(n_trunc) + ": " + sci(errors.back()) + ";";
  }
  bool monotone = true;
  for (std::size_t i = 1; i < errors.size(); ++i) monotone = monotone && errors[i] < errors[i - 1];
  return {monotone && errors.back() < 1e-4, detail};
}

Outcome mackinnon() {
  const PhysicalContext ctx;
  const KinematicConstants k = kinematics(ctx);
  std::string detail;
  bool ok = true;
  for (double a : {k.E_plus / 5.0, 5.0 * k.E_plus}) {
    const FieldEvaluator closed = mackinnon_solution(ctx, a, 1.0);
    const ExactSpectrum spectrum = ExactSpectrum::real_exp(a, 1.0);
    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> rho_d(0.0, 10.0);
    std::uniform_real_distribution<double> span(-10.0, 10.0);
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double rho = rho_d(rng);
      const double z = span(rng);
      const double t = 0.5 * span(rng);
      const Complex value = closed(rho, z, t);
      const Complex quad = superposition_quadrature(ctx, spectrum, rho, z, t, tight()).value;
      worst = std::max(worst, std::abs(value - quad));
      scale = std::max(scale, std::abs(value));
    }
    ok = ok && worst / scale < 1e-8;
    detail += "a=" + fix(a, 1) + " vs quadrature " + sci(worst / scale) + "; ";
  }

  const FieldEvaluator ball = mackinnon_from_abar(ctx, 0.0);
  const NormalizedProfile profile = normalized_profile(ball, ctx, 20.0, 41, 20.0, 81);
  double zeta_asym = 0.0;
  const Eigen::Index nz = profile.zeta_n.size();
  for (Eigen::Index i = 0; i < profile.rho_n.size(); ++i) {
    for (Eigen::Index j = 0; j < nz; ++j) {
      zeta_asym = std::max(zeta_asym, std::abs(profile.abs2(i, j) - profile.abs2(i, nz - 1 - j)));
    }
  }
  double rho_asym = 0.0;
  for (Eigen::Index i = 0; i < profile.rho_n.size(); ++i) {
    for (Eigen::Index j = 0; j < nz; ++j) {
      const double rho = profile.rho_n(i) * ctx.hbar / std::sqrt(k.P);
      const double zeta = profile.zeta_n(j) * ctx.hbar / std::sqrt(k.P);
      const Complex y_pos = y_argument(ctx, 0.0, rho, zeta);
      const Complex y_neg = y_argument(ctx, 0.0, -rho, zeta);
      rho_asym = std::max(rho_asym, std::abs(std::norm(specfun::csinc(y_pos)) -
                                             std::norm(specfun::csinc(y_neg))));
    }
  }
  Eigen::Index pi = 0, pj = 0;
  profile.abs2.maxCoeff(&pi, &pj);
  const bool ball_ok = zeta_asym <= 1e-12 && rho_asym <= 1e-12 && profile.rho_n(pi) == 0.0 &&
                       profile.zeta_n(pj) == 0.0;
  detail += "Abar=0 asymmetry zeta " + sci(zeta_asym) + ", rho " + sci(rho_asym) + "; ";

  const FieldEvaluator xwave = mackinnon_from_abar(ctx, 20.0);
  bool contrast_ok = true;
  detail += "Abar=20 X-arm contrast";
  for (double r : {10.0, 20.0, 40.0, 80.0}) {
    const double c = x_arm_contrast(xwave, ctx, r);
    contrast_ok = contrast_ok && c > 1.0;
    detail += " r'=" + fix(r, 0) + ": " + fix(c, 4);
  }
  return {ok && ball_ok && contrast_ok, detail};
}

Outcome finite_energy() {
  const PhysicalContext ctx;
  const WSpectrum ws;
  const int threads = worker_count();
  NormOptions norm_opt;
  norm_opt.threads = threads;
  NormAndDepth nd;
  try {
    nd = norm_and_depth(ctx, ws, norm_opt);
  } catch (const IntegrationDomainError& e) {
    return {false, std::string("norm did not converge: ") + e.what()};
  }

  const FieldEvaluator field = finite_energy_field(ctx, ws);
  GridSpec spec;
  spec.radial = RadialSampling::bessel_zeros;
  spec.rho_max = 60.0;
  spec.n_rho = 128;
  spec.zeta_min = -80.0;
  spec.zeta_max = 80.0;
  spec.n_zeta = 512;
  const double T = nd.depth_of_field;
  const FieldGrid initial = sample_field(field, spec, threads);
  const FieldGrid evolved = free_propagate(initial, T, ctx.hbar, ctx.mass);
  GridSpec later = spec;
  later.t_samples = {T};
  const FieldGrid oracle = sample_field(field, later, threads);
  const HankelTransform0 hankel(spec.n_rho, spec.rho_max);
  const double error = relative_l2(evolved.values[0], oracle.values[0], hankel.radial_weights());

  const ClosedFormReport report = compare_closed_form(ctx, ws, {0.0, 1.0, 2.0}, {-1.0, 0.0, 1.0}, 0.0);
  return {nd.tail_fraction < 0.01 && error < 1e-3,
          "norm " + fix(nd.norm, 6) + " (doubling change " + sci(nd.tail_fraction) +
              "); propagated to T=" + fix(T, 3) + " rel L2 " + sci(error) + " (edge " +
              evolved.notes.at("boundary_fraction") + "); closed form vs dw oracle: verbatim " +
              sci(report.max_verbatim_deviation) + ", corrected " +
              sci(report.max_corrected_deviation) + "; vs db oracle: verbatim " +
              sci(report.max_verbatim_db_deviation) + ", corrected " +
              sci(report.max_corrected_db_deviation) + " [informative]"};
}

// Local maxima of |psi(0, zeta)|^2 on a fine lattice, refined by golden section.
std::vector<double> intensity_maxima(const FieldEvaluator& f, double lo, double hi, int samples) {
  auto intensity = [&](double zeta) { return std::norm(f(0.0, zeta, 0.0)); };
  const double step = (hi - lo) / samples;
  std::vector<double> maxima;
  for (int i = 1; i < samples; ++i) {
    const double z = lo + i * step;
    if (intensity(z) > intensity(z - step) && intensity(z) >= intensity(z + step)) {
      double a = z - step;
      double b = z + step;
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
        const double c = b - g * (b - a);
        const double d = a + g * (b - a);
        if (intensity(c) > intensity(d)) {
          b = d;
        } else {
          a = c;
        }
      }
      maxima.push_back(0.5 * (a + b));
    }
  }
  return maxima;
}

Outcome potential_trains() {
  const auto ctx = PhysicalContext::make(1.0, 1.0, 1.0);
  HarmonicGuide guide{ctx, 0.05};
  const std::vector<GuideMode> modes = solve_modes(guide);
  int admissible = 0;
  for (const GuideMode& m : modes) admissible += m.minus_admissible ? 1 : 0;
  const double root = std::sqrt(0.9);
  const double e_plus = std::abs(modes.at(0).p_z_plus - (1.0 + root));
  const double e_minus = std::abs(modes.at(0).p_z_minus - (1.0 - root));

  const FieldEvaluator beat = pulse_train(guide, {{0, Branch::plus, 1.0}, {0, Branch::minus, 1.0}});
  const std::vector<double> maxima = intensity_maxima(beat, -1.0, 30.0, 3100);
  const double period = (maxima.back() - maxima.front()) / static_cast<double>(maxima.size() - 1);
  const double expected = 2.0 * std::numbers::pi / (2.0 * root);
  const double period_error = std::abs(period / expected - 1.0);

  const FieldEvaluator train =
      pulse_train(guide, {{0, Branch::plus, 1.0}, {0, Branch::minus, 0.6}, {1, Branch::plus, 0.4}});
  const TranslationReport rigid =
      rigid_translation_check(train, ctx.V, random_probes(909, 100, 15.0, 30.0));
  GridSpec grid;
  grid.rho_max = 12.0;
  grid.n_rho = 25;
  grid.zeta_min = -6.0;
  grid.zeta_max = 6.0;
  grid.n_zeta = 25;
  grid.t_samples = {0.4};
  ResidualOptions opt;
  opt.h = 0.05;
  opt.potential = [guide](double rho) { return guide.potential(rho); };
  opt.threads = worker_count();
  const ResidualReport residual = schrodinger_residual(train, grid, opt);

  const bool pass = modes.size() == 5 && admissible == 5 && e_plus <= 1e-12 && e_minus <= 1e-12 &&
                    period_error < 1e-3 && rigid.max_rel_deviation <= 1e-12 &&
                    order_near_two(residual.convergence_order);
  return {pass, std::to_string(modes.size()) + " modes (" + std::to_string(admissible) +
                    " with both branches), p_z+- errors " + sci(e_plus) + "/" + sci(e_minus) +
                    ", beat period " + fix(period, 6) + " vs " + fix(expected, 6) + " (" +
                    sci(period_error) + "), translation " + sci(rigid.max_rel_deviation) +
                    ", residual order " + fix(residual.convergence_order, 3)};
}

bool same_bits(const FieldGrid& a, const FieldGrid& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.values[k].rows() != b.values[k].rows() || a.values[k].cols() != b.values[k].cols()) return false;
    for (Eigen::Index i = 0; i < a.values[k].size(); ++i) {
      const Complex x = a.values[k](i);
      const Complex y = b.values[k](i);
      if (std::memcmp(&x, &y, sizeof(Complex)) != 0) return false;
    }
  }
  return a.rho == b.rho && a.zeta == b.zeta && a.spec.t_samples == b.spec.t_samples;
}

Outcome infrastructure() {
  const PhysicalContext ctx;
  GridSpec spec;
  spec.rho_max = 5.0;
  spec.n_rho = 12;
  spec.zeta_min = -5.0;
  spec.zeta_max = 5.0;
  spec.n_zeta = 16;
  spec.t_samples = {0.0, 0.25};
  const FieldEvaluator quad = superposition_field(ctx, ExactSpectrum::real_exp(0.4, 1.0));
  const FieldGrid one = sample_field(quad, spec, 1);
  const FieldGrid four = sample_field(quad, spec, 4);
  const FieldEvaluator fe = finite_energy_field(ctx, WSpectrum{});
  NormOptions n1;
  n1.rho_n_max = 10.0;
  n1.zeta_n_max = 10.0;
  n1.threads = 1;
  NormOptions n4 = n1;
  n4.threads = 4;
  const double norm1 = finite_energy_norm(fe, 5.0, 5.0, n1);
  const double norm4 = finite_energy_norm(fe, 5.0, 5.0, n4);
  const bool threads_ok = same_bits(one, four) && std::memcmp(&norm1, &norm4, sizeof(double)) == 0;

  std::ostringstream csv;
  write_csv(one, csv);
  std::istringstream csv_in(csv.str());
  const FieldGrid from_csv = read_csv(csv_in);
  std::ostringstream csv_again;
  write_csv(from_csv, csv_again);
  const FieldGrid from_json_grid = from_json(to_json(one));
  const bool csv_ok = same_bits(one, from_csv) && csv.str() == csv_again.str();
  const bool json_ok = same_bits(one, from_json_grid) && from_json_grid.info.family == one.info.family &&
                       from_json_grid.info.params == one.info.params;
  return {threads_ok && csv_ok && json_ok,
          std::string("threads {1,4} bit-identical: ") + (threads_ok ? "yes" : "no") +
              ", CSV round trip: " + (csv_ok ? "lossless" : "lossy") +
              ", JSON round trip: " + (json_ok ? "lossless" : "lossy")};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "kinematics roots", 1.0, kinematics_roots},
      {2, "Bessel beam residual", 10.0, bessel_residual},
      {3, "paraxial G1 closed form and widths", 30.0, paraxial_g1},
      {4, "paraxial validity trend", 60.0, paraxial_trend},
      {5, "exact Fourier element", 30.0, exact_element},
      {6, "general series convergence", 60.0, general_series},
      {7, "real-exponential solution", 60.0, mackinnon},
      {8, "finite energy", 300.0, finite_energy},
      {9, "potential trains", 60.0, potential_trains},
      {10, "infrastructure", 10.0, infrastructure},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_s;
    const bool pass = out.pass && in_time;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << out.detail
              << " (" << fix(seconds, 2) << " s" << (in_time ? "" : ", over budget") << ")"
              << std::endl;
  }
  return failures;
}
