#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lwave/error.hpp"
#include "lwave/fd.hpp"
#include "lwave/grid.hpp"
#include "lwave/potential.hpp"
#include "lwave/quadrature.hpp"
#include "lwave/verify.hpp"

using namespace lwave;
using doctest::Approx;

namespace {

HarmonicGuide default_guide() {
  HarmonicGuide g;
  g.omega = 0.05;
  return g;
}

}  // namespace

TEST_SUITE("potential") {

TEST_CASE("admissible modes and longitudinal momenta") {
  const HarmonicGuide g = default_guide();
  const auto modes = solve_modes(g);
  REQUIRE(modes.size() == 5);
  for (const GuideMode& m : modes) CHECK(m.lambda_sq == Approx(0.1 * (2 * m.n + 1)).epsilon(1e-14));
  CHECK(modes[0].p_z_plus == Approx(1.0 + std::sqrt(0.9)).epsilon(1e-15));
  CHECK(modes[0].p_z_minus == Approx(1.0 - std::sqrt(0.9)).epsilon(1e-13));
  CHECK(modes[0].p_z_plus == Approx(1.94868).epsilon(1e-5));
  CHECK(modes[0].p_z_minus == Approx(0.05132).epsilon(1e-4));
  CHECK(modes[0].energy(g.ctx, Branch::plus) == Approx(modes[0].p_z_plus).epsilon(1e-15));

  HarmonicGuide tight = g;
  tight.omega = 0.6;  // 2 m hbar omega > m^2 V^2
  CHECK_THROWS_AS(solve_modes(tight), DomainError);
  tight.omega = -1.0;
  CHECK_THROWS_AS(tight.validate(), DomainError);
}

TEST_CASE("roots with an energy offset solve the quadratic") {
  const HarmonicGuide g = default_guide();
  const double b = 0.1;
  const auto modes = solve_modes(g, b);
  for (const GuideMode& m : modes) {
    // p_z^2 - 2 m V p_z + Lambda^2 - 2 m b = 0
    const double B = -2.0;
    const double C = m.lambda_sq - 2.0 * b;
    const double disc = std::sqrt(B * B - 4.0 * C);
    CHECK(m.p_z_plus == Approx((-B + disc) / 2.0).epsilon(1e-14));
    CHECK(m.p_z_minus == Approx(2.0 * C / (-B + disc)).epsilon(1e-12));
    for (double p : {m.p_z_plus, m.p_z_minus}) {
      CHECK((p * p + m.lambda_sq) / 2.0 == Approx(p + b).epsilon(1e-13));
    }
  }
  // Minus branch of n = 0 turns backward once 2 m b > Lambda_0^2.
  const auto shifted = solve_modes(g, 0.2);
  CHECK_FALSE(shifted[0].minus_admissible);
  CHECK_THROWS_AS(shifted[0].p_z(Branch::minus), DomainError);
  CHECK_THROWS_AS(solve_modes(g, -0.1), DomainError);
}

TEST_CASE("mode profiles are orthonormal") {
  const HarmonicGuide g = default_guide();
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-12;
  for (int n = 0; n < 5; ++n) {
    for (int k = n; k < 5; ++k) {
      const double overlap =
          integrate_semiinfinite(
              [&](double rho) {
                return Complex(2.0 * std::numbers::pi * rho * mode_profile(g, n, rho) * mode_profile(g, k, rho));
              },
              0.0, spec, g.length())
              .value.real();
      CAPTURE(n);
      CAPTURE(k);
      CHECK(std::abs(overlap - (n == k ? 1.0 : 0.0)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(mode_profile(g, -1, 0.0), ArgumentError);
}

TEST_CASE("finite-difference eigenvalues match the oscillator ladder") {
  const HarmonicGuide g = default_guide();
  const Eigen::VectorXd ev =
      radial_eigenvalues(g.ctx, [&](double r) { return g.potential(r); }, 12.0 * g.length(), 1200, 5);
  for (int n = 0; n < 5; ++n) CHECK(ev(n) == Approx(0.1 * (2 * n + 1)).epsilon(1e-3));
  CHECK_THROWS_AS(radial_eigenvalues(g.ctx, {}, 1.0, 4, 1), GridError);
  // Without a potential the box eigenvalues are (hbar j_k / R)^2.
  const Eigen::VectorXd box = radial_eigenvalues(PhysicalContext{}, {}, 1.0, 2000, 2);
  CHECK(box(0) == Approx(std::pow(2.404825557695773, 2)).epsilon(1e-4));
  CHECK(box(1) == Approx(std::pow(5.520078110286311, 2)).epsilon(1e-4));
}

TEST_CASE("profiles satisfy the radial eigenvalue equation") {
  const HarmonicGuide g = default_guide();
  auto max_err = [&](int n, double h) {
    const int points = static_cast<int>(std::lround(6.0 * g.length() / h)) + 1;
    Eigen::MatrixXcd R(points, 1);
    for (int i = 0; i < points; ++i) R(i, 0) = mode_profile(g, n, i * h);
    const Eigen::MatrixXcd lap = fd::transverse_laplacian(R, 0.0, h);
    const double lambda_sq = 0.1 * (2 * n + 1);
    double e = 0.0;
    for (int i = 0; i + 1 < points; ++i) {
      const double r = i * h;
      const double lhs = -lap(i, 0).real() + 2.0 * g.potential(r) * R(i, 0).real();
      e = std::max(e, std::abs(lhs - lambda_sq * R(i, 0).real()));
    }
    return e;
  };
  for (int n : {0, 2, 4}) {
    const double order = std::log2(max_err(n, 0.4) / max_err(n, 0.2));
    CAPTURE(n);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
  }
}

TEST_CASE("train moduli") {
  const HarmonicGuide g = default_guide();
  const FieldEvaluator one = pulse_train(g, {{1, Branch::plus, Complex(0.5, 0.2)}});
  for (double zeta = -20.0; zeta <= 20.0; zeta += 0.7) {
    CHECK(std::abs(one(2.0, zeta, 0.0)) == Approx(std::abs(one(2.0, 0.0, 0.0))).epsilon(1e-14));
  }
  const FieldEvaluator zero = pulse_train(g, {{0, Branch::plus, 0.0}, {3, Branch::minus, 0.0}});
  CHECK(zero(1.0, 2.0, 3.0) == Complex(0.0));

  const FieldEvaluator beat = pulse_train(g, {{0, Branch::plus, 1.0}, {0, Branch::minus, 1.0}});
  const double period = 2.0 * std::numbers::pi / (2.0 * std::sqrt(0.9));
  CHECK(period == Approx(3.3115).epsilon(1e-4));
  for (double zeta : {0.0, 0.4, 1.9}) {
    CHECK(std::norm(beat(0.0, zeta, 0.0)) == Approx(std::norm(beat(0.0, zeta + period, 0.0))).epsilon(1e-12));
  }
  // Half a period later the two branches are out of phase.
  CHECK(std::norm(beat(0.0, 0.5 * period, 0.0)) < 1e-20);
  CHECK_THROWS_AS(pulse_train(g, {{5, Branch::plus, 1.0}}), DomainError);
}

TEST_CASE("offset train") {
  const HarmonicGuide g = default_guide();
  const std::vector<TrainTerm> terms = {{0, Branch::plus, 1.0}, {2, Branch::minus, Complex(0.3, 0.4)}};
  const FieldEvaluator a = pulse_train(g, terms);
  const FieldEvaluator b = train_with_offset(g, terms, 0.0);
  for (double z : {-3.0, 0.0, 4.5}) CHECK(a(1.5, z, 0.8) == b(1.5, z, 0.8));
  const FieldEvaluator off = train_with_offset(g, terms, 0.1);
  // Global phase e^{-i b t/hbar} only.
  const Complex p = off(1.0, 2.0 + g.ctx.V * 1.7, 1.7);
  const Complex q = off(1.0, 2.0, 0.0);
  CHECK(std::abs(std::abs(p) - std::abs(q)) < 1e-14);
  CHECK(std::abs(p - q * std::polar(1.0, -0.1 * 1.7)) < 1e-13);
  CHECK_THROWS_AS(train_with_offset(g, {{0, Branch::minus, 1.0}}, 0.2), DomainError);
  CHECK_THROWS_AS(train_with_offset(g, {{9, Branch::plus, 1.0}}, 0.1), DomainError);
}

TEST_CASE("train translates rigidly and solves the guided equation") {
  const HarmonicGuide g = default_guide();
  const FieldEvaluator f =
      pulse_train(g, {{0, Branch::plus, 1.0}, {1, Branch::minus, 0.5}, {4, Branch::plus, Complex(0.0, 0.7)}});
  const TranslationReport tr = rigid_translation_check(f, g.ctx.V, random_probes(3, 100, 8.0, 20.0));
  CHECK(tr.max_rel_deviation <= 1e-12);

  GridSpec grid;
  grid.rho_max = 8.0;
  grid.n_rho = 9;
  grid.zeta_min = -4.0;
  grid.zeta_max = 4.0;
  grid.n_zeta = 9;
  ResidualOptions opt;
  opt.h = 0.05;
  opt.potential = [&](double r) { return g.potential(r); };
  const ResidualReport r = schrodinger_residual(f, grid, opt);
  CHECK(r.convergence_order >= 1.8);
  CHECK(r.convergence_order <= 2.2);
  opt.potential = {};
  const ResidualReport free = schrodinger_residual(f, grid, opt);
  CHECK(free.relative_residual > 100.0 * r.relative_residual);
}

}
