#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lwave/beams.hpp"
#include "lwave/errata.hpp"
#include "lwave/error.hpp"
#include "lwave/exact.hpp"
#include "lwave/finite_energy.hpp"
#include "lwave/grid.hpp"
#include "lwave/hankel.hpp"
#include "lwave/io.hpp"
#include "lwave/paraxial.hpp"
#include "lwave/potential.hpp"
#include "lwave/verify.hpp"

using namespace lwave;

namespace {

struct GlobalOptions {
  double hbar = 1.0;
  double mass = 1.0;
  double V = 1.0;
  double b = 0.0;
  std::string grid = "10,64,-10,10,128";
  std::vector<double> t{0.0};
  std::string out;
  std::string format;  // from the --out extension when empty, else csv
  double tol = 1e-10;
  int threads = 1;

  PhysicalContext context() const { return PhysicalContext::make(hbar, mass, V, b); }

  QuadratureSpec quadrature() const {
    QuadratureSpec spec;
    spec.abs_tol = tol;
    spec.rel_tol = tol;
    return spec;
  }

  GridSpec grid_spec(RadialSampling radial = RadialSampling::uniform) const {
    std::vector<double> parts;
    std::stringstream ss(grid);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        parts.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ArgumentError("--grid: '" + cell + "' is not a number");
      }
    }
    if (parts.size() != 5) throw ArgumentError("--grid expects rho_max,n_rho,zeta_min,zeta_max,n_zeta");
    GridSpec spec;
    spec.rho_max = parts[0];
    spec.n_rho = static_cast<int>(parts[1]);
    spec.zeta_min = parts[2];
    spec.zeta_max = parts[3];
    spec.n_zeta = static_cast<int>(parts[4]);
    spec.t_samples = t;
    spec.radial = radial;
    spec.validate();
    return spec;
  }
};

struct BeamOptions {
  double E = 1.0;
  double pz = 1.0;
  int order = 0;
  double slit_r = -1.0;
  double focal = 1.0;
};

struct ParaxialOptions {
  std::string family = "g1";
  double alpha = 100.0;
  double s = 0.0;
  double N = 0.0;
  bool measure_widths = false;
};

struct ExactOptions {
  std::string family = "element";
  int n = 0;
  double an_re = 1.0;
  double an_im = 0.0;
  double a = 0.0;
  double s0 = 1.0;
  double abar = -1.0;
  double sigma = 0.1;
  int n_trunc = 8;
  bool peak = false;
};

struct FiniteEnergyOptions {
  double w0 = 1.5;
  double q_w = 50.0;
  double a = 0.5;
  double s0 = 1.0;
  bool report = false;
  bool norm = false;
};

struct TrainOptions {
  double omega = 0.05;
  std::vector<std::string> terms{"0:plus:1", "0:minus:1"};
  bool list_modes = false;
};

struct VerifyOptions {
  std::string mode = "residual";
  std::string family = "beam";
  std::string input;
  double dt = 1.0;
  unsigned seed = 1;
  int probes = 100;
  double h = 0.05;
};

struct Options {
  GlobalOptions global;
  BeamOptions beam;
  ParaxialOptions paraxial;
  ExactOptions exact;
  FiniteEnergyOptions fe;
  TrainOptions train;
  VerifyOptions verify;
};

// ---------------------------------------------------------------------------
// Family builders shared by the generating subcommands and verify.

FieldEvaluator build_beam(const Options& o) {
  BesselBeamParams p;
  p.ctx = o.global.context();
  p.order = o.beam.order;
  if (o.beam.slit_r >= 0.0) {
    const SlitMomenta slit = slit_parameters(p.ctx, o.beam.slit_r, o.beam.focal, o.beam.E);
    p.E = o.beam.E;
    p.p_z = slit.p_z;
  } else {
    p.E = o.beam.E;
    p.p_z = o.beam.pz;
  }
  return bessel_beam(p);
}

FieldEvaluator build_paraxial(const Options& o) {
  const auto spectrum = ParaxialSpectrum::make(parse_paraxial_family(o.paraxial.family),
                                               o.paraxial.alpha, o.paraxial.s);
  Normalization norm;
  if (o.paraxial.N > 0.0) {
    norm.peak = false;
    norm.value = o.paraxial.N;
  }
  return paraxial_closed_form(o.global.context(), spectrum, norm);
}

FieldEvaluator build_exact(const Options& o) {
  const PhysicalContext ctx = o.global.context();
  const ExactOptions& e = o.exact;
  if (e.family == "element") {
    return fourier_element(ctx, e.n, Complex(e.an_re, e.an_im), 1.0, e.peak);
  }
  if (e.family == "mackinnon") {
    if (e.abar >= 0.0) return mackinnon_from_abar(ctx, e.abar, true);
    return mackinnon_solution(ctx, e.a, e.s0, 1.0, e.peak);
  }
  if (e.family == "series") {
    const KinematicConstants k = kinematics(ctx);
    const double sigma = e.sigma * k.D;
    const auto gaussian = [B = k.B, sigma](double E) {
      return Complex(std::exp(-(E - B) * (E - B) / (2.0 * sigma * sigma)));
    };
    const FourierCoefficients c =
        fourier_coefficients(ctx, gaussian, e.n_trunc, o.global.quadrature());
    return general_solution(ctx, c);
  }
  throw ArgumentError("exact --family must be element, mackinnon or series");
}

WSpectrum build_w_spectrum(const Options& o) {
  return WSpectrum{o.fe.w0, o.fe.q_w, o.fe.a, o.fe.s0};
}

FieldEvaluator build_finite_energy(const Options& o) {
  return finite_energy_field(o.global.context(), build_w_spectrum(o), 0.0, o.global.quadrature());
}

std::vector<TrainTerm> parse_terms(const std::vector<std::string>& specs) {
  std::vector<TrainTerm> terms;
  for (const std::string& spec : specs) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string cell;
    while (std::getline(ss, cell, ':')) parts.push_back(cell);
    if (parts.size() < 3 || parts.size() > 4) {
      throw ArgumentError("--term expects n:plus|minus:re[:im], got '" + spec + "'");
    }
    TrainTerm term;
    try {
      term.n = std::stoi(parts[0]);
      const double re = std::stod(parts[2]);
      const double im = parts.size() == 4 ? std::stod(parts[3]) : 0.0;
      term.f = Complex(re, im);
    } catch (const std::exception&) {
      throw ArgumentError("--term '" + spec + "' has a malformed number");
    }
    if (parts[1] == "plus") {
      term.branch = Branch::plus;
    } else if (parts[1] == "minus") {
      term.branch = Branch::minus;
    } else {
      throw ArgumentError("--term branch must be plus or minus, got '" + parts[1] + "'");
    }
    terms.push_back(term);
  }
  return terms;
}

HarmonicGuide build_guide(const Options& o) {
  HarmonicGuide guide{o.global.context().with_b(0.0), o.train.omega};
  guide.validate();
  return guide;
}

FieldEvaluator build_train(const Options& o) {
  return train_with_offset(build_guide(o), parse_terms(o.train.terms), o.global.b);
}

FieldEvaluator build_family(const Options& o, const std::string& family) {
  if (family == "beam") return build_beam(o);
  if (family == "paraxial") return build_paraxial(o);
  if (family == "element" || family == "mackinnon" || family == "series") {
    Options copy = o;
    copy.exact.family = family;
    return build_exact(copy);
  }
  if (family == "finite-energy") return build_finite_energy(o);
  if (family == "potential-train") return build_train(o);
  throw ArgumentError("unknown family '" + family +
                      "' (beam, paraxial, element, mackinnon, series, finite-energy, potential-train)");
}

// ---------------------------------------------------------------------------

void emit(const FieldGrid& grid, const GlobalOptions& g) {
  std::string name = g.format;
  if (name.empty()) {
    name = std::filesystem::path(g.out).extension() == ".json" ? "json" : "csv";
  }
  const ExportFormat format = parse_export_format(name);
  if (g.out.empty()) {
    write_field(grid, std::cout, format);
  } else {
    write_field(grid, std::filesystem::path(g.out), format);
  }
}

void emit_field(const FieldEvaluator& field, const GlobalOptions& g) {
  emit(sample_field(field, g.grid_spec(), g.threads), g);
}

void run_paraxial(const Options& o) {
  const FieldEvaluator field = build_paraxial(o);
  if (o.paraxial.measure_widths) {
    const WidthMeasurement w = width_measurements(field, o.global.context());
    std::cout.precision(8);
    std::cout << "delta_rho " << w.rho_half_width << "\n"
              << "delta_zeta " << w.zeta_half_width << "\n";
    if (o.global.out.empty()) return;
  }
  emit_field(field, o.global);
}

void run_finite_energy(const Options& o) {
  const PhysicalContext ctx = o.global.context();
  const WSpectrum ws = build_w_spectrum(o);
  if (o.fe.report || o.fe.norm) {
    std::cout.precision(6);
    if (o.fe.report) {
      const ClosedFormReport r = compare_closed_form(ctx, ws, {0.0, 1.0, 2.0}, {-1.0, 0.0, 1.0});
      std::cout << "rho zeta |oracle| dev_verbatim dev_corrected dev_corrected_db\n";
      for (const ClosedFormProbe& p : r.probes) {
        std::cout << p.rho << ' ' << p.zeta << ' ' << std::abs(p.oracle) << ' '
                  << p.verbatim_deviation << ' ' << p.corrected_deviation << ' '
                  << p.corrected_db_deviation << "\n";
      }
      std::cout << "verbatim " << (r.verbatim_validated ? "validated" : "unvalidated")
                << ", corrected " << (r.corrected_validated ? "validated" : "unvalidated")
                << " against the dw oracle, "
                << (r.corrected_db_validated ? "validated" : "unvalidated")
                << " against the db oracle\n";
    }
    if (o.fe.norm) {
      NormOptions opt;
      opt.threads = o.global.threads;
      const NormAndDepth nd = norm_and_depth(ctx, ws, opt);
      std::cout << "norm " << nd.norm << "\nnorm_doubled " << nd.norm_doubled << "\ntail_fraction "
                << nd.tail_fraction << "\ndepth_of_field " << nd.depth_of_field << "\n";
    }
    if (o.global.out.empty()) return;
  }
  emit_field(build_finite_energy(o), o.global);
}

void run_train(const Options& o) {
  if (o.train.list_modes) {
    std::cout << "n lambda_sq p_z_plus p_z_minus minus_admissible\n";
    std::cout.precision(15);
    for (const GuideMode& m : solve_modes(build_guide(o), o.global.b)) {
      std::cout << m.n << ' ' << m.lambda_sq << ' ' << m.p_z_plus << ' ' << m.p_z_minus << ' '
                << (m.minus_admissible ? "yes" : "no") << "\n";
    }
    if (o.global.out.empty()) return;
  }
  emit_field(build_train(o), o.global);
}

void run_verify(const Options& o) {
  const GlobalOptions& g = o.global;
  const VerifyOptions& v = o.verify;
  std::cout.precision(6);
  if (v.mode == "residual") {
    const FieldEvaluator field = build_family(o, v.family);
    ResidualOptions opt;
    opt.hbar = g.hbar;
    opt.mass = g.mass;
    opt.h = v.h;
    opt.threads = g.threads;
    if (v.family == "potential-train") {
      const HarmonicGuide guide = build_guide(o);
      opt.potential = [guide](double rho) { return guide.potential(rho); };
    }
    const ResidualReport r = schrodinger_residual(field, g.grid_spec(), opt);
    std::cout << "points " << r.points << "\nmax_residual " << r.max_residual
              << "\nmax_residual_half " << r.max_residual_half << "\nl2_residual " << r.l2_residual
              << "\nl2_residual_half " << r.l2_residual_half << "\nrelative_residual "
              << r.relative_residual << "\nconvergence_order " << r.convergence_order << "\n";
    return;
  }
  if (v.mode == "translate") {
    const FieldEvaluator field = build_family(o, v.family);
    const GridSpec spec = g.grid_spec();
    const double extent = std::max(std::abs(spec.zeta_min), std::abs(spec.zeta_max));
    const TranslationReport r = rigid_translation_check(
        field, g.V, random_probes(v.seed, v.probes, spec.rho_max, extent));
    std::cout << "max_abs_deviation " << r.max_abs_deviation << "\nmax_rel_deviation "
              << r.max_rel_deviation << "\n";
    return;
  }
  if (v.mode == "propagate") {
    FieldGrid initial;
    FieldEvaluator reference;
    if (!v.input.empty()) {
      initial = read_field(v.input);
    } else {
      reference = build_family(o, v.family);
      initial = sample_field(reference, g.grid_spec(RadialSampling::bessel_zeros), g.threads);
    }
    const FieldGrid evolved = free_propagate(initial, v.dt, g.hbar, g.mass);
    for (const char* key : {"norm_before", "norm_after", "relative_norm_change", "boundary_fraction",
                            "support_ok"}) {
      std::cout << key << ' ' << evolved.notes.at(key) << "\n";
    }
    if (reference) {
      const FieldGrid oracle = sample_field(reference, evolved.spec, g.threads);
      const HankelTransform0 hankel(initial.spec.n_rho, initial.spec.rho_max);
      std::cout << "relative_l2_vs_evaluator "
                << relative_l2(evolved.values[0], oracle.values[0], hankel.radial_weights()) << "\n";
    }
    if (!g.out.empty()) emit(evolved, g);
    return;
  }
  throw ArgumentError("verify mode must be residual, translate or propagate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localized-wave solutions of the free and guided Schroedinger equation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file with one section per subcommand");
  app.fallthrough();
  Options o;
  GlobalOptions& g = o.global;
  app.add_option("--hbar", g.hbar, "Reduced Planck constant")->capture_default_str();
  app.add_option("--mass", g.mass, "Particle mass")->capture_default_str();
  app.add_option("--V", g.V, "Peak velocity")->capture_default_str();
  app.add_option("--b", g.b, "Intercept of the line E = V p_z + b")->capture_default_str();
  app.add_option("--grid", g.grid, "rho_max,n_rho,zeta_min,zeta_max,n_zeta")->capture_default_str();
  app.add_option("--t", g.t, "Time samples")->delimiter(',')->capture_default_str();
  app.add_option("--out", g.out, "Output file (stdout when absent)");
  app.add_option("--format", g.format, "csv or json (default: from the --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", g.tol, "Quadrature tolerance")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* beam = app.add_subcommand("beam", "Monochromatic Bessel beam");
  beam->add_option("--E", o.beam.E, "Energy")->capture_default_str();
  beam->add_option("--pz", o.beam.pz, "Longitudinal momentum")->capture_default_str();
  beam->add_option("--order", o.beam.order, "Bessel order")->capture_default_str();
  beam->add_option("--slit-r", o.beam.slit_r, "Annular slit radius (sets p_z from the lens)");
  beam->add_option("--focal", o.beam.focal, "Lens focal length")->capture_default_str();

  auto* paraxial = app.add_subcommand("paraxial", "Paraxial localized pulses");
  paraxial->add_option("--family", o.paraxial.family, "g1, invp, i0mod or j0mod")
      ->capture_default_str();
  paraxial->add_option("--alpha", o.paraxial.alpha, "Spectral concentration")->capture_default_str();
  paraxial->add_option("--s", o.paraxial.s, "Bandwidth length of i0mod and j0mod")
      ->capture_default_str();
  paraxial->add_option("--N", o.paraxial.N, "Explicit normalization (peak normalization when absent)");
  paraxial->add_flag("--measure-widths", o.paraxial.measure_widths,
                     "Print the measured 1/e radial and 1/e^2 longitudinal half-widths");

  auto* exact = app.add_subcommand("exact", "Exact localized solutions");
  exact->add_option("--family", o.exact.family, "element, mackinnon or series")
      ->capture_default_str();
  exact->add_option("--n", o.exact.n, "Fourier index of the element")->capture_default_str();
  exact->add_option("--an-re", o.exact.an_re, "Re a_n")->capture_default_str();
  exact->add_option("--an-im", o.exact.an_im, "Im a_n")->capture_default_str();
  exact->add_option("--a", o.exact.a, "Decay of the real-exponential spectrum")->capture_default_str();
  exact->add_option("--s0", o.exact.s0, "Amplitude of the real-exponential spectrum")
      ->capture_default_str();
  exact->add_option("--abar", o.exact.abar, "Normalized decay (peak-normalized field)");
  exact->add_option("--sigma", o.exact.sigma, "Gaussian spectrum width as a fraction of D")
      ->capture_default_str();
  exact->add_option("--ntrunc", o.exact.n_trunc, "Series truncation")->capture_default_str();
  exact->add_flag("--peak-normalize", o.exact.peak, "Scale the field to unit peak modulus");

  auto* fe = app.add_subcommand("finite-energy", "Finite-energy superposition over b");
  fe->add_option("--w0", o.fe.w0, "Spectral centre in w")->capture_default_str();
  fe->add_option("--qw", o.fe.q_w, "Gaussian concentration in w")->capture_default_str();
  fe->add_option("--a", o.fe.a, "Decay of each real-exponential component")->capture_default_str();
  fe->add_option("--s0", o.fe.s0, "Amplitude of each component")->capture_default_str();
  fe->add_flag("--report", o.fe.report, "Compare the closed forms with the quadrature oracles");
  fe->add_flag("--norm", o.fe.norm, "Print the norm, its doubling change and the depth of field");

  auto* train = app.add_subcommand("potential-train", "Pulse trains in a harmonic guide");
  train->add_option("--omega", o.train.omega, "Guide frequency")->capture_default_str();
  train->add_option("--term", o.train.terms, "n:plus|minus:re[:im], repeatable")
      ->capture_default_str();
  train->add_flag("--modes", o.train.list_modes, "Print the guided modes on the spectral line");

  auto* verify = app.add_subcommand("verify", "Residual, translation and propagation checks");
  verify->add_option("mode", o.verify.mode, "residual, translate or propagate")
      ->check(CLI::IsMember({"residual", "translate", "propagate"}))
      ->capture_default_str();
  verify->add_option("--family", o.verify.family,
                     "beam, paraxial, element, mackinnon, series, finite-energy or potential-train")
      ->capture_default_str();
  verify->add_option("--input", o.verify.input, "Field file to propagate instead of a family");
  verify->add_option("--dt", o.verify.dt, "Propagation time")->capture_default_str();
  verify->add_option("--seed", o.verify.seed, "Probe seed")->capture_default_str();
  verify->add_option("--probes", o.verify.probes, "Number of translation probes")
      ->capture_default_str();
  verify->add_option("--step", o.verify.h, "Stencil step (grid spacing when 0)")->capture_default_str();
  // Family parameters used by verify.
  verify->add_option("--E", o.beam.E, "Beam energy");
  verify->add_option("--pz", o.beam.pz, "Beam longitudinal momentum");
  verify->add_option("--alpha", o.paraxial.alpha, "Paraxial concentration");
  verify->add_option("--n", o.exact.n, "Element index");
  verify->add_option("--a", o.exact.a, "Real-exponential decay");
  verify->add_option("--omega", o.train.omega, "Guide frequency");
  verify->add_option("--term", o.train.terms, "Train term");

  auto* errata = app.add_subcommand("errata", "Printed-formula discrepancies with live evidence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*beam) emit_field(build_beam(o), g);
    if (*paraxial) run_paraxial(o);
    if (*exact) emit_field(build_exact(o), g);
    if (*fe) run_finite_energy(o);
    if (*train) run_train(o);
    if (*verify) run_verify(o);
    if (*errata) std::cout << format_errata(errata_ledger());
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
