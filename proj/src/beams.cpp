#include "lwave/beams.hpp"

#include <cmath>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/specfun.hpp"

namespace lwave {

void BesselBeamParams::validate() const {
  ctx.validate();
  if (order < 0) throw ArgumentError("Bessel beam order must be >= 0");
  if (!std::isfinite(E) || !std::isfinite(p_z)) throw DomainError("E and p_z must be finite");
  if (p_z < 0.0) throw DomainError("forward travel requires p_z >= 0");
  const double radicand = 2.0 * ctx.mass * E - p_z * p_z;
  // Allow rounding on the plane-wave boundary E = p_z^2 / 2m.
  if (radicand < -1e-14 * std::max(1.0, p_z * p_z)) {
    std::ostringstream os;
    os.precision(17);
    os << "a non-evanescent beam needs E >= p_z^2/(2m) (E = " << E
       << ", p_z^2/(2m) = " << p_z * p_z / (2.0 * ctx.mass) << ")";
    throw DomainError(os.str());
  }
}

double BesselBeamParams::p_rho() const {
  validate();
  return std::sqrt(std::max(0.0, 2.0 * ctx.mass * E - p_z * p_z));
}

FieldEvaluator bessel_beam(const BesselBeamParams& params) {
  const double p_rho = params.p_rho();
  const double hbar = params.ctx.hbar;
  const double E = params.E;
  const double p_z = params.p_z;
  const int n = params.order;

  FieldInfo info;
  info.family = "bessel_beam";
  info.params = {{"hbar", hbar},  {"mass", params.ctx.mass}, {"E", E},
                 {"p_z", p_z},    {"p_rho", p_rho},          {"order", static_cast<double>(n)}};
  info.frame_velocity = 0.0;
  info.axisymmetric = n == 0;

  auto kernel = [=](double rho, double z, double t, double phi) {
    const double radial = specfun::bessel_j(n, rho * p_rho / hbar);
    const double phase = (z * p_z - E * t) / hbar + n * phi;
    return Amplitude{radial * std::polar(1.0, phase)};
  };
  return FieldEvaluator(kernel, std::move(info));
}

SlitMomenta slit_parameters(const PhysicalContext& ctx, double r, double f, double E) {
  ctx.validate();
  if (!(f > 0.0) || !(r >= 0.0) || !std::isfinite(r) || !std::isfinite(f)) {
    throw GeometryError("slit radius must be >= 0 and focal length > 0");
  }
  if (r >= f) throw GeometryError("slit radius must be smaller than the focal length");
  if (!(E >= 0.0)) throw DomainError("beam energy must be >= 0");
  const double ratio = r / f;
  SlitMomenta out;
  out.p = std::sqrt(2.0 * ctx.mass * E);
  out.p_rho = ratio * out.p;
  out.p_z = out.p * std::sqrt((1.0 - ratio) * (1.0 + ratio));
  return out;
}

}  // namespace lwave
