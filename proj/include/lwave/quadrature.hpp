#pragma once

// Adaptive Gauss-Kronrod quadrature for complex-valued integrands.
//
// The interval queue is ordered by (error, left endpoint), so the sequence of
// bisections and therefore the result is a pure function of the inputs.

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lwave/core.hpp"
#include "lwave/error.hpp"
#include "lwave/parallel.hpp"

namespace lwave {

enum class KronrodRule { gk15, gk21 };

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  KronrodRule rule = KronrodRule::gk15;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
      throw ArgumentError("QuadratureSpec: tolerances must be > 0");
    }
    if (max_subdivisions < 1) throw ArgumentError("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

struct QuadratureResult {
  Complex value{};
  double error = 0.0;
  bool converged = false;
  int subdivisions = 0;
  int evaluations = 0;
  std::string substitution = "none";
};

namespace detail {

struct KronrodTable {
  std::span<const double> xgk;  // descending, last entry is the centre (0)
  std::span<const double> wgk;
  std::span<const double> wg;   // Gauss weights for xgk[1], xgk[3], ...; centre last if odd
  bool gauss_has_centre;
};

inline constexpr std::array<double, 8> kXgk15 = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk15 = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg7 = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline constexpr std::array<double, 11> kXgk21 = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720, 0.0};
inline constexpr std::array<double, 11> kWgk21 = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg10 = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline KronrodTable table_for(KronrodRule rule) {
  if (rule == KronrodRule::gk21) return {kXgk21, kWgk21, kWg10, false};
  return {kXgk15, kWgk15, kWg7, true};
}

struct Segment {
  double a = 0.0;
  double b = 0.0;
  Complex value{};
  double error = 0.0;
};

template <typename F>
Complex checked_eval(F& f, double x) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand sample at x = " << x;
    throw EvaluationError(os.str(), x);
  }
  return v;
}

/// One Kronrod rule application with the QUADPACK error heuristic.
template <typename F>
Segment apply_rule(F& f, double a, double b, const KronrodTable& t, int& evaluations) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t nk = t.xgk.size();
  const Complex fc = checked_eval(f, centre);
  ++evaluations;

  Complex resk = fc * t.wgk[nk - 1];
  Complex resg = t.gauss_has_centre ? fc * t.wg[t.wg.size() - 1] : Complex(0.0);
  double resabs = std::abs(fc) * t.wgk[nk - 1];

  std::array<Complex, 11> f1{};
  std::array<Complex, 11> f2{};
  for (std::size_t j = 0; j + 1 < nk; ++j) {
    const double dx = half * t.xgk[j];
    f1[j] = checked_eval(f, centre - dx);
    f2[j] = checked_eval(f, centre + dx);
    evaluations += 2;
    const Complex sum = f1[j] + f2[j];
    resk += t.wgk[j] * sum;
    resabs += t.wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += t.wg[j / 2] * sum;
  }
  const Complex mean = resk * 0.5;
  double resasc = t.wgk[nk - 1] * std::abs(fc - mean);
  for (std::size_t j = 0; j + 1 < nk; ++j) {
    resasc += t.wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double ah = std::abs(half);
  resk *= half;
  resg *= half;
  resabs *= ah;
  resasc *= ah;

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * std::numeric_limits<double>::epsilon())) {
    err = std::max(err, floor);
  }
  return {a, b, resk, err};
}

struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace detail

/// Adaptive quadrature of a complex integrand over [a, b].
///
/// When the tolerance is not met within max_subdivisions the best estimate is
/// still returned with converged == false.
template <typename F>
QuadratureResult integrate_complex(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const auto table = detail::table_for(spec.rule);

  std::priority_queue<detail::Segment, std::vector<detail::Segment>, detail::SegmentOrder> queue;
  queue.push(detail::apply_rule(f, a, b, table, out.evaluations));

  Complex total = queue.top().value;
  double total_err = queue.top().error;
  int segments = 1;
  while (true) {
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= target) {
      out.converged = true;
      break;
    }
    if (segments >= spec.max_subdivisions) break;
    detail::Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      break;  // interval can no longer be split in double precision
    }
    queue.pop();
    const detail::Segment left = detail::apply_rule(f, worst.a, mid, table, out.evaluations);
    const detail::Segment right = detail::apply_rule(f, mid, worst.b, table, out.evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }

  // Final sums in left-to-right order with pairwise reduction.
  std::vector<detail::Segment> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const detail::Segment& x, const detail::Segment& y) { return x.a < y.a; });
  std::vector<Complex> values(all.size());
  std::vector<double> errors(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    values[i] = all[i].value;
    errors[i] = all[i].error;
  }
  out.value = pairwise_sum<Complex>(values);
  out.error = pairwise_sum<double>(errors);
  out.subdivisions = segments;
  if (!out.converged) {
    out.converged = out.error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
  }
  return out;
}

/// Quadrature over [a, inf) through x = a + scale * s / (1 - s), s in [0, 1).
template <typename F>
QuadratureResult integrate_semiinfinite(F&& f, double a, const QuadratureSpec& spec = {},
                                        double scale = 1.0) {
  if (!(scale > 0.0)) throw ArgumentError("integrate_semiinfinite: scale must be > 0");
  auto mapped = [&](double s) -> Complex {
    const double one_minus = 1.0 - s;
    const double x = a + scale * s / one_minus;
    const Complex v = f(x);
    if (v == Complex(0.0)) return v;  // also covers x = inf when f decays to exact zero
    return v * (scale / (one_minus * one_minus));
  };
  QuadratureResult out = integrate_complex(mapped, 0.0, 1.0, spec);
  std::ostringstream os;
  os.precision(17);
  os << "x = " << a << " + " << scale << " * s/(1-s)";
  out.substitution = os.str();
  return out;
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace lwave
