#pragma once

// Real and complex special functions used by the closed-form solutions.
//
// Everything here is header-only and templated on the real scalar type; the
// algorithms are tuned for double precision.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "lwave/error.hpp"

namespace lwave::specfun {

namespace detail {

template <typename T>
struct real_of {
  using type = T;
};
template <typename T>
struct real_of<std::complex<T>> {
  using type = T;
};
template <typename T>
using real_of_t = typename real_of<T>::type;

template <typename T>
bool all_finite(const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(x);
  } else {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  }
}

template <typename T>
void require_finite(const T& x, const char* fn) {
  if (!all_finite(x)) {
    throw ArgumentError(std::string(fn) + ": non-finite argument");
  }
}

/// Power series for J_n(z); accurate where |z| is small enough that the
/// alternating terms do not cancel badly (|z| <= 2 here).
template <typename T>
T bessel_j_series(int n, const T& z) {
  using R = real_of_t<T>;
  T term = T(1);
  for (int k = 1; k <= n; ++k) term *= z / R(2 * k);
  const T x = -z * z / R(4);
  T sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= x / R(k * (n + k));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<R>::epsilon() * std::abs(sum) * R(0.25)) break;
  }
  return sum;
}

/// Miller backward recurrence for J_n(z).
///
/// Normalised with 1 = J0 + 2 sum J_2k when |Im z| <= 1 and with
/// cos z = J0 + 2 sum (-1)^k J_2k otherwise; the second identity keeps the
/// normalising sum free of cancellation when the J_k grow like e^{|Im z|}.
template <typename T>
T bessel_j_miller(int n, const T& z) {
  using R = real_of_t<T>;
  const R az = std::abs(z);
  int start = static_cast<int>(std::max<R>(az, R(n)) + R(30) + R(10) * std::cbrt(az));
  start += start % 2;  // even

  const R big = R(1e250);
  const R rescale = R(1e-250);
  T j_next = T(0);
  T j_cur = T(1e-30);
  T sum_one = T(0);
  T sum_cos = T(0);
  T result = T(0);
  const T two_over_z = R(2) / z;

  // j_cur holds J_k (unnormalised) at the top of each iteration.
  for (int k = start; k >= 1; --k) {
    if (k == n) result = j_cur;
    if (k % 2 == 0) {
      sum_one += R(2) * j_cur;
      sum_cos += ((k / 2) % 2 == 0 ? R(2) : R(-2)) * j_cur;
    }
    const T j_prev = R(k) * two_over_z * j_cur - j_next;
    j_next = j_cur;
    j_cur = j_prev;
    if (std::abs(j_cur) > big) {
      j_cur *= rescale;
      j_next *= rescale;
      sum_one *= rescale;
      sum_cos *= rescale;
      result *= rescale;
    }
  }
  if (n == 0) result = j_cur;
  sum_one += j_cur;
  sum_cos += j_cur;

  if constexpr (std::is_floating_point_v<T>) {
    return result / sum_one;
  } else {
    if (std::abs(z.imag()) <= R(1)) return result / sum_one;
    return result * std::cos(z) / sum_cos;
  }
}

/// Hankel asymptotic expansion of J_n(z), Re z > 0 and |z| large.
template <typename T>
T bessel_j_asymptotic(int n, const T& z) {
  using R = real_of_t<T>;
  const R mu = R(4) * R(n) * R(n);
  const T inv8z = R(1) / (R(8) * z);
  T p = T(1);
  T q = T(0);
  T term = T(1);
  R last = std::numeric_limits<R>::max();
  for (int k = 1; k < 100; ++k) {
    const R odd = R(2 * k - 1);
    term *= (mu - odd * odd) * inv8z / R(k);
    const R mag = std::abs(term);
    if (mag > last) break;  // asymptotic series started to diverge
    last = mag;
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? R(1) : R(-1)) * term;
    } else {
      p += ((k / 2) % 2 == 1 ? R(-1) : R(1)) * term;
    }
    if (mag < std::numeric_limits<R>::epsilon() * R(1e-2)) break;
  }
  const T chi = z - (R(n) / R(2) + R(0.25)) * std::numbers::pi_v<R>;
  return std::sqrt(R(2) / (std::numbers::pi_v<R> * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

/// Bessel function of the first kind J_n(x), integer order n >= 0.
template <typename Real>
Real bessel_j(int n, Real x) {
  if (n < 0) throw ArgumentError("bessel_j: order must be >= 0");
  detail::require_finite(x, "bessel_j");
  const Real sign = (x < 0 && n % 2 == 1) ? Real(-1) : Real(1);
  const Real ax = std::abs(x);
  if (ax == Real(0)) return n == 0 ? Real(1) : Real(0);
  if (ax <= Real(2)) return sign * detail::bessel_j_series(n, ax);
  if (ax > Real(60) && Real(n) < ax / Real(4)) return sign * detail::bessel_j_asymptotic(n, ax);
  return sign * detail::bessel_j_miller(n, ax);
}

/// J0 of a complex argument; principal values, |z| <= 700.
template <typename Real>
std::complex<Real> bessel_j0(std::complex<Real> z) {
  detail::require_finite(z, "bessel_j0");
  const Real az = std::abs(z);
  if (az > Real(700)) {
    std::ostringstream os;
    os << "bessel_j0: |z| = " << az << " exceeds the overflow guard 700";
    throw RangeError(os.str(), static_cast<double>(az));
  }
  if (az == Real(0)) return {Real(1), Real(0)};
  if (az <= Real(2)) return detail::bessel_j_series(0, z);
  if (az <= Real(25)) return detail::bessel_j_miller(0, z);
  // J0 is even; keep the asymptotic expansion in the right half plane.
  return detail::bessel_j_asymptotic(0, z.real() < Real(0) ? -z : z);
}

/// Modified Bessel function I0 of a complex argument, |z| <= 700.
///
/// Uses its own power series / large-argument expansion when |Re z| >= |Im z|
/// and the identity I0(z) = J0(i z) otherwise.
template <typename Real>
std::complex<Real> mod_bessel_i0(std::complex<Real> z) {
  using C = std::complex<Real>;
  detail::require_finite(z, "mod_bessel_i0");
  const Real az = std::abs(z);
  if (az > Real(700)) {
    std::ostringstream os;
    os << "mod_bessel_i0: |z| = " << az << " exceeds the overflow guard 700";
    throw RangeError(os.str(), static_cast<double>(az));
  }
  if (std::abs(z.real()) < std::abs(z.imag())) return bessel_j0(C(-z.imag(), z.real()));
  if (az <= Real(25)) {
    const C x = z * z / Real(4);
    C term(1);
    C sum(1);
    for (int k = 1; k < 400; ++k) {
      term *= x / Real(k * k);
      sum += term;
      if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * std::abs(sum) * Real(0.25)) break;
    }
    return sum;
  }
  const C w = z.real() < Real(0) ? -z : z;
  const C inv8z = Real(1) / (Real(8) * w);
  C term(1);
  C sum(1);
  Real last = std::numeric_limits<Real>::max();
  for (int k = 1; k < 100; ++k) {
    const Real odd = Real(2 * k - 1);
    term *= odd * odd * inv8z / Real(k);
    const Real mag = std::abs(term);
    if (mag > last) break;
    last = mag;
    sum += term;
    if (mag < std::numeric_limits<Real>::epsilon() * Real(1e-2)) break;
  }
  return std::exp(w) / std::sqrt(Real(2) * std::numbers::pi_v<Real> * w) * sum;
}

/// sin Z / Z with the removable singularity at Z = 0.
template <typename T>
T csinc(const T& Z) {
  using R = detail::real_of_t<T>;
  if (std::abs(Z) < R(1e-4)) {
    const T z2 = Z * Z;
    return T(1) - z2 / R(6) + z2 * z2 / R(120);
  }
  return std::sin(Z) / Z;
}

/// Exponential integral E1(z) = Gamma(0, z), principal branch, |arg z| < pi.
template <typename Real>
std::complex<Real> expint_e1(std::complex<Real> z) {
  using C = std::complex<Real>;
  detail::require_finite(z, "expint_e1");
  if (z == C(0)) throw SingularityError("expint_e1: logarithmic singularity at z = 0");
  if (z.imag() == Real(0) && z.real() < Real(0)) {
    throw DomainError("expint_e1: z on the branch cut (negative real axis)");
  }
  constexpr Real euler = std::numbers::egamma_v<Real>;
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (std::abs(z) <= Real(4)) {
    // E1 = -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
    C term(1);
    C sum(0);
    for (int k = 1; k < 300; ++k) {
      term *= -z / Real(k);
      const C add = term / Real(k);
      sum += add;
      if (std::abs(add) <= eps * std::abs(sum) * Real(0.1)) break;
    }
    return -euler - std::log(z) - sum;
  }
  // Even continued fraction, modified Lentz:
  // E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...)))
  const Real tiny = Real(1e-300);
  C b = z + Real(1);
  C c = Real(1) / tiny;
  C d = Real(1) / b;
  C h = d;
  for (int i = 1; i < 20000; ++i) {
    const Real a = -Real(i) * Real(i);
    b += Real(2);
    d = Real(1) / (a * d + b);
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const C delta = c * d;
    h *= delta;
    if (std::abs(delta - Real(1)) <= eps) return h * std::exp(-z);
  }
  throw ToleranceError("expint_e1: continued fraction did not converge");
}

/// Complementary error function of a complex argument.
///
/// Power series of erf for |Re z| < 2 (and |z|^2 < 600), Laplace continued
/// fraction for e^{z^2} erfc(z) otherwise; reflection erfc(-z) = 2 - erfc(z).
template <typename Real>
std::complex<Real> erfc(std::complex<Real> z) {
  using C = std::complex<Real>;
  detail::require_finite(z, "erfc");
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (z.real() < Real(0)) return Real(2) - erfc(-z);

  const Real x = z.real();
  const Real y = z.imag();
  const C z2 = z * z;
  // |erfc| ~ e^{y^2 - x^2}; beyond this the result cannot be represented.
  if (y * y - x * x > Real(700)) {
    std::ostringstream os;
    os << "erfc: Re(-z^2) = " << (y * y - x * x) << " overflows";
    throw RangeError(os.str(), static_cast<double>(std::abs(z)));
  }

  if (x < Real(2) && std::norm(z) < Real(600)) {
    // erf z = 2/sqrt(pi) sum (-1)^n z^{2n+1} / (n! (2n+1))
    C term = z;
    C sum = z;
    for (int n = 1; n < 2000; ++n) {
      term *= -z2 / Real(n);
      const C add = term / Real(2 * n + 1);
      sum += add;
      if (std::abs(add) <= eps * std::abs(sum) * Real(0.1)) break;
    }
    return Real(1) - Real(2) / std::sqrt(std::numbers::pi_v<Real>) * sum;
  }

  // sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + (2/2)/(z + (3/2)/(z + ...))))
  const Real tiny = Real(1e-300);
  C f = z;
  C c = z;
  C d = C(0);
  for (int k = 1; k < 20000; ++k) {
    const Real a = Real(k) / Real(2);
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = Real(1) / d;
    const C delta = c * d;
    f *= delta;
    if (std::abs(delta - Real(1)) <= eps) {
      return std::exp(-z2) / (std::sqrt(std::numbers::pi_v<Real>) * f);
    }
  }
  throw ToleranceError("erfc: continued fraction did not converge");
}

/// Laguerre polynomial L_n(x) by the three-term recurrence.
template <typename Real>
Real laguerre(int n, Real x) {
  if (n < 0) throw ArgumentError("laguerre: degree must be >= 0");
  if (n == 0) return Real(1);
  Real prev = Real(1);
  Real cur = Real(1) - x;
  for (int k = 1; k < n; ++k) {
    const Real next = ((Real(2 * k + 1) - x) * cur - Real(k) * prev) / Real(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace lwave::specfun
