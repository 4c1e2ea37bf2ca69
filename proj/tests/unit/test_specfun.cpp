#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lwave/error.hpp"
#include "lwave/quadrature.hpp"
#include "lwave/specfun.hpp"

using namespace lwave;
using doctest::Approx;
namespace sf = lwave::specfun;

namespace {

double series_j0(double x) {
  // Direct power series, long double accumulation.
  long double term = 1.0L;
  long double sum = 1.0L;
  const long double q = -static_cast<long double>(x) * x / 4.0L;
  for (int k = 1; k < 120; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
  }
  return static_cast<double>(sum);
}

Complex e1_ray(Complex z) {
  // E1(z) = int_1^inf e^{-z s}/s ds for Re z > 0.
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  return integrate_semiinfinite([&](double s) { return std::exp(-z * s) / s; }, 1.0, spec).value;
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("real Bessel functions at the origin and known points") {
  CHECK(sf::bessel_j(0, 0.0) == 1.0);
  CHECK(sf::bessel_j(1, 0.0) == 0.0);
  CHECK(std::abs(sf::bessel_j(0, 2.404826)) < 1e-6);
  CHECK(sf::bessel_j(0, 1.0) == Approx(series_j0(1.0)).epsilon(1e-15));
  CHECK(sf::bessel_j(0, 1.0) == Approx(0.7651976866).epsilon(1e-10));
}

TEST_CASE("first zero of J0 by bisection on the series") {
  double lo = 2.0;
  double hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (series_j0(mid) > 0.0 ? lo : hi) = mid;
  }
  CHECK(lo == Approx(2.404825557695773).epsilon(1e-13));
  CHECK(std::abs(sf::bessel_j(0, lo)) < 1e-14);
}

TEST_CASE("real Bessel functions against the standard library") {
  for (int n : {0, 1, 2, 5, 10}) {
    for (double x = 0.05; x < 120.0; x *= 1.37) {
      CAPTURE(n);
      CAPTURE(x);
      const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
      CHECK(std::abs(sf::bessel_j(n, x) - ref) < 2e-14 * std::max(1.0, 1.0 / std::sqrt(x)));
    }
  }
  CHECK(sf::bessel_j(3, -1.5) == Approx(-std::cyl_bessel_j(3.0, 1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(sf::bessel_j(-1, 1.0), ArgumentError);
  CHECK_THROWS_AS(sf::bessel_j(0, std::nan("")), ArgumentError);
}

TEST_CASE("J0 derivative equals -J1") {
  const double h = 1e-5;
  for (double x = 0.1; x <= 20.0; x += 0.37) {
    const double d = (sf::bessel_j(0, x + h) - sf::bessel_j(0, x - h)) / (2 * h);
    CHECK(std::abs(d + sf::bessel_j(1, x)) < 1e-6);
  }
}

TEST_CASE("complex J0 and I0") {
  CHECK(sf::bessel_j0(Complex(0.0)) == Complex(1.0));
  CHECK(sf::mod_bessel_i0(Complex(0.0)) == Complex(1.0));
  const Complex ji = sf::bessel_j0(Complex(0.0, 1.0));
  CHECK(ji.real() == Approx(std::cyl_bessel_i(0.0, 1.0)).epsilon(1e-15));
  CHECK(ji.real() == Approx(1.2660658778).epsilon(1e-10));
  CHECK(std::abs(ji.imag()) < 1e-16);
  CHECK(sf::mod_bessel_i0(Complex(2.0)).real() == Approx(2.2795853023).epsilon(1e-10));
  for (double x : {0.3, 3.0, 17.0, 40.0, 200.0}) {
    CAPTURE(x);
    CHECK(sf::bessel_j0(Complex(x)).real() == Approx(std::cyl_bessel_j(0.0, x)).epsilon(1e-12).scale(1.0));
    CHECK(sf::mod_bessel_i0(Complex(x)).real() == Approx(std::cyl_bessel_i(0.0, x)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(sf::bessel_j0(Complex(800.0)), RangeError);
}

TEST_CASE("complex J0 against its integral representation") {
  // J0(z) = (1/pi) int_0^pi cos(z sin t) dt
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-30.0, 30.0);
  std::uniform_real_distribution<double> di(-8.0, 8.0);
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-14;
  for (int i = 0; i < 40; ++i) {
    const Complex z(d(rng), di(rng));
    const Complex ref =
        integrate_complex([&](double t) { return std::cos(z * std::sin(t)); }, 0.0, std::numbers::pi, spec)
            .value /
        std::numbers::pi;
    CAPTURE(z);
    CHECK(std::abs(sf::bessel_j0(z) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
    const Complex iz(-z.imag(), z.real());
    CHECK(std::abs(sf::mod_bessel_i0(z) - sf::bessel_j0(iz)) <
          1e-12 * std::max(1.0, std::abs(ref) + std::abs(sf::bessel_j0(iz))));
  }
}

TEST_CASE("csinc") {
  CHECK(sf::csinc(Complex(0.0)) == Complex(1.0));
  CHECK(std::abs(sf::csinc(Complex(std::numbers::pi))) < 1e-14);
  const Complex v = sf::csinc(Complex(0.0, std::numbers::pi));
  CHECK(v.real() == Approx(std::sinh(std::numbers::pi) / std::numbers::pi).epsilon(1e-15));
  CHECK(v.real() == Approx(3.676078).epsilon(1e-6));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex z(n(rng), n(rng));
    CHECK(sf::csinc(-z) == sf::csinc(z));
  }
  // Small-argument branch continuous with the direct quotient.
  const Complex small(1.1e-4, 0.3e-4);
  CHECK(std::abs(sf::csinc(small) - std::sin(small) / small) < 1e-15);
}

TEST_CASE("exponential integral") {
  CHECK(sf::expint_e1(Complex(1.0)).real() == Approx(-std::expint(-1.0)).epsilon(1e-14));
  CHECK(sf::expint_e1(Complex(1.0)).real() == Approx(0.2193839344).epsilon(1e-9));
  CHECK(sf::expint_e1(Complex(1.0)).real() == Approx(e1_ray(Complex(1.0)).real()).epsilon(1e-12));
  const double x = 50.0;
  CHECK(sf::expint_e1(Complex(x)).real() * std::exp(x) * x == Approx(1.0).epsilon(0.03));
  const Complex z(0.5, 0.5);
  CHECK(std::abs(sf::expint_e1(z) - e1_ray(z)) < 1e-12);
  for (double re : {0.1, 2.0, 3.9, 4.1, 12.0}) {
    for (double im : {-6.0, -0.5, 0.0, 0.7, 5.0}) {
      const Complex w(re, im);
      CAPTURE(w);
      CHECK(std::abs(sf::expint_e1(w) - e1_ray(w)) < 1e-11 * std::max(1.0, std::abs(e1_ray(w))));
    }
  }
  CHECK_THROWS_AS(sf::expint_e1(Complex(0.0)), SingularityError);
  CHECK_THROWS_AS(sf::expint_e1(Complex(-1.0)), DomainError);
}

TEST_CASE("upper incomplete gamma recurrence at s = -1") {
  // Gamma(-1, A) = int_A^inf t^{-2} e^{-t} dt by quadrature.
  // Standard recurrence: Gamma(0, A) = -Gamma(-1, A) + e^{-A}/A.
  // The variant with -e^{-A}/A is inconsistent; the residual is 2 e^{-A}/A.
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  for (double A = 0.5; A <= 5.0; A += 0.5) {
    const double g_m1 =
        integrate_semiinfinite([](double t) { return Complex(std::exp(-t) / (t * t)); }, A, spec)
            .value.real();
    const double g0 = sf::expint_e1(Complex(A)).real();
    CAPTURE(A);
    CHECK(g0 == Approx(-g_m1 + std::exp(-A) / A).epsilon(1e-11));
    CHECK(std::abs(g0 - (-g_m1 - std::exp(-A) / A)) == Approx(2.0 * std::exp(-A) / A).epsilon(1e-9));
  }
}

TEST_CASE("complementary error function") {
  CHECK(sf::erfc(Complex(0.0)) == Complex(1.0));
  CHECK(sf::erfc(Complex(1.0)).real() == Approx(0.1572992071).epsilon(1e-9));
  // erf(i) = (2i/sqrt(pi)) sum 1/(n!(2n+1))
  double s = 0.0;
  double fact = 1.0;
  for (int n = 0; n < 30; ++n) {
    if (n > 0) fact *= n;
    s += 1.0 / (fact * (2 * n + 1));
  }
  const Complex erfc_i = sf::erfc(Complex(0.0, 1.0));
  CHECK(erfc_i.real() == Approx(1.0).epsilon(1e-15));
  CHECK(erfc_i.imag() == Approx(-2.0 / std::sqrt(std::numbers::pi) * s).epsilon(1e-14));
  CHECK(erfc_i.imag() == Approx(-1.650425759).epsilon(1e-9));
  for (double x = -6.0; x <= 26.0; x += 0.173) {
    CAPTURE(x);
    const double ref = std::erfc(x);
    CHECK(std::abs(sf::erfc(Complex(x)).real() - ref) <= 1e-12 * std::max(ref, 1e-300) + 1e-300);
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(d(rng), d(rng));
    CHECK(std::abs(sf::erfc(-z) - (2.0 - sf::erfc(z))) < 1e-12 * std::max(1.0, std::abs(sf::erfc(z))));
  }
  CHECK_THROWS_AS(sf::erfc(Complex(0.0, 40.0)), RangeError);
}

TEST_CASE("complex erfc against quadrature of the Faddeeva integral") {
  // erfc(z) = 1 - (2/sqrt(pi)) z int_0^1 e^{-z^2 s^2} ds
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-14;
  for (const Complex z : {Complex(0.3, 0.4), Complex(1.5, -2.0), Complex(2.5, 1.0), Complex(-1.2, 3.0)}) {
    const Complex ref = 1.0 - 2.0 / std::sqrt(std::numbers::pi) * z *
                                  integrate_complex([&](double s) { return std::exp(-z * z * s * s); },
                                                    0.0, 1.0, spec)
                                      .value;
    CAPTURE(z);
    CHECK(std::abs(sf::erfc(z) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("Laguerre polynomials") {
  CHECK(sf::laguerre(0, 3.7) == 1.0);
  CHECK(sf::laguerre(2, 1.0) == Approx(-0.5).epsilon(1e-15));
  CHECK(sf::laguerre(3, 0.0) == 1.0);
  for (int n = 0; n <= 12; ++n) {
    for (double x = 0.0; x < 30.0; x += 1.3) {
      CHECK(sf::laguerre(n, x) ==
            Approx(std::laguerre(static_cast<unsigned>(n), x)).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK_THROWS_AS(sf::laguerre(-1, 0.0), ArgumentError);
}

}
