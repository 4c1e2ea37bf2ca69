#include "lwave/potential.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/parallel.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

void HarmonicGuide::validate() const {
  ctx.validate();
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("guide frequency omega must be > 0");
}

double HarmonicGuide::potential(double rho) const {
  return 0.5 * ctx.mass * omega * omega * rho * rho;
}

double HarmonicGuide::length() const { return std::sqrt(ctx.hbar / (ctx.mass * omega)); }

const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

double GuideMode::p_z(Branch branch) const {
  if (branch == Branch::plus) return p_z_plus;
  if (!minus_admissible) {
    std::ostringstream os;
    os << "mode " << n << ": the minus root p_z = " << p_z_minus
       << " travels backward (needs Lambda^2 >= 2 m b)";
    throw DomainError(os.str());
  }
  return p_z_minus;
}

double GuideMode::energy(const PhysicalContext& ctx, Branch branch) const {
  return ctx.V * p_z(branch) + b;
}

double mode_profile(const HarmonicGuide& guide, int n, double rho) {
  if (n < 0) throw ArgumentError("mode index must be >= 0");
  const double m = guide.ctx.mass;
  const double hbar = guide.ctx.hbar;
  const double x = m * guide.omega * rho * rho / hbar;
  return std::sqrt(m * guide.omega / (std::numbers::pi * hbar)) * specfun::laguerre(n, x) *
         std::exp(-0.5 * x);
}

std::vector<GuideMode> solve_modes(const HarmonicGuide& guide, double b) {
  guide.validate();
  if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("line intercept b must be >= 0");
  const double m = guide.ctx.mass;
  const double mV = m * guide.ctx.V;
  const double ceiling = mV * mV + 2.0 * m * b;
  const double quantum = 2.0 * m * guide.ctx.hbar * guide.omega;
  std::vector<GuideMode> modes;
  for (int n = 0;; ++n) {
    const double lambda_sq = quantum * (2 * n + 1);
    if (lambda_sq > ceiling) break;
    const double root = std::sqrt(ceiling - lambda_sq);
    GuideMode mode;
    mode.n = n;
    mode.lambda_sq = lambda_sq;
    mode.b = b;
    mode.p_z_plus = mV + root;
    // mV - root without cancellation.
    mode.p_z_minus = (lambda_sq - 2.0 * m * b) / (mV + root);
    mode.minus_admissible = mode.p_z_minus >= 0.0;
    modes.push_back(mode);
  }
  if (modes.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "no guided mode meets the line E = V p_z + b: the lowest Lambda^2 = " << quantum
       << " exceeds m^2 V^2 + 2 m b = " << ceiling;
    throw DomainError(os.str());
  }
  return modes;
}

Eigen::VectorXd radial_eigenvalues(const PhysicalContext& ctx,
                                   const std::function<double(double)>& potential, double rho_max,
                                   int points, int count) {
  ctx.validate();
  if (points < 8 || count < 1 || count > points || !(rho_max > 0.0)) {
    throw GridError("radial eigensolver needs rho_max > 0, >= 8 points and 1 <= count <= points");
  }
  const double h = rho_max / points;
  const double hb2 = ctx.hbar * ctx.hbar / (h * h);
  Eigen::VectorXd diag(points);
  Eigen::VectorXd off(points - 1);
  for (int i = 0; i < points; ++i) {
    const double r = (i + 0.5) * h;
    const double outer = (i + 1.0) * h;
    const double inner = i * h;  // zero flux through the axis
    // Dirichlet wall at rho_max through the odd ghost value R_n = -R_{n-1}.
    const double wall = i + 1 == points ? 2.0 * outer : outer;
    diag(i) = hb2 * (wall + inner) / r + 2.0 * ctx.mass * (potential ? potential(r) : 0.0);
    if (i + 1 < points) off(i) = -hb2 * outer / std::sqrt(r * (r + h));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().head(count);
}

FieldEvaluator train_with_offset(const HarmonicGuide& guide, const std::vector<TrainTerm>& terms,
                                 double b) {
  const std::vector<GuideMode> modes = solve_modes(guide, b);
  std::vector<double> momenta;
  for (const TrainTerm& term : terms) {
    if (term.n < 0 || term.n >= static_cast<int>(modes.size())) {
      std::ostringstream os;
      os << "mode " << term.n << " is not guided on this line (admissible modes: 0.."
         << modes.size() - 1 << ")";
      throw DomainError(os.str());
    }
    momenta.push_back(modes[static_cast<std::size_t>(term.n)].p_z(term.branch));
  }
  FieldInfo info;
  info.family = "potential_train";
  info.params = {{"hbar", guide.ctx.hbar}, {"mass", guide.ctx.mass}, {"V", guide.ctx.V},
                 {"omega", guide.omega},   {"b", b},
                 {"terms", static_cast<double>(terms.size())}};
  info.frame_velocity = guide.ctx.V;
  const double hbar = guide.ctx.hbar;
  const double V = guide.ctx.V;
  auto kernel = [guide, terms, momenta, hbar, V, b](double rho, double z, double t, double) {
    const double zeta = z - V * t;
    std::vector<Complex> parts(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      parts[i] = terms[i].f * mode_profile(guide, terms[i].n, rho) *
                 std::polar(1.0, momenta[i] * zeta / hbar);
    }
    return Amplitude{pairwise_sum(parts) * std::polar(1.0, -b * t / hbar)};
  };
  return FieldEvaluator(kernel, std::move(info));
}

FieldEvaluator pulse_train(const HarmonicGuide& guide, const std::vector<TrainTerm>& terms) {
  return train_with_offset(guide, terms, 0.0);
}

}  // namespace lwave
