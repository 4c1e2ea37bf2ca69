#include "lwave/core.hpp"

#include <cmath>
#include <sstream>

#include "lwave/error.hpp"

namespace lwave {

namespace {

// Slack used when an energy sits on an endpoint up to rounding.
constexpr double kEndpointSlack = 1e-13;

std::string interval_message(const char* what, double value, double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << what << " = " << value << " outside the allowed interval [" << lo << ", " << hi
     << "]";
  return os.str();
}

}  // namespace

void PhysicalContext::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(hbar)) throw DomainError("hbar must be finite and > 0");
  if (!positive(mass)) throw DomainError("mass must be finite and > 0");
  if (!positive(V)) throw DomainError("V (peak velocity) must be finite and > 0");
  if (!std::isfinite(b) || b < 0.0) throw DomainError("b (line intercept) must be finite and >= 0");
}

PhysicalContext PhysicalContext::make(double hbar, double mass, double V, double b) {
  PhysicalContext ctx{hbar, mass, V, b};
  ctx.validate();
  return ctx;
}

PhysicalContext PhysicalContext::with_b(double new_b) const {
  return make(hbar, mass, V, new_b);
}

KinematicConstants kinematics(const PhysicalContext& ctx) {
  ctx.validate();
  const double m = ctx.mass;
  const double V = ctx.V;
  const double b = ctx.b;
  const double mV2 = m * V * V;

  KinematicConstants k;
  k.P = m * m * V * V + 2.0 * m * b;
  k.A = std::sqrt(k.P) * V;
  k.B = mV2 + b;
  k.D = 2.0 * k.A;
  // s = sqrt(1 + 2b/(mV^2)); E- = b (s - 1)/(s + 1) with s - 1 = (2b/(mV^2))/(s + 1)
  // avoids the cancellation in mV^2 (1 - s) + b for small b.
  const double s = std::sqrt(1.0 + 2.0 * b / mV2);
  const double s_minus_one = 2.0 * b / mV2 / (s + 1.0);
  k.E_plus = mV2 * (1.0 + s) + b;
  k.E_minus = b * s_minus_one / (s + 1.0);
  k.v_phase_b = V + b / (m * V);
  return k;
}

double p_rho_of_E(const PhysicalContext& ctx, double E) {
  const KinematicConstants k = kinematics(ctx);
  const double slack = kEndpointSlack * k.E_plus;
  if (!(E >= k.E_minus - slack && E <= k.E_plus + slack)) {
    throw DomainError(interval_message("energy E", E, k.E_minus, k.E_plus));
  }
  // -E^2 + (2mV^2 + 2b) E - b^2 = (E - E-)(E+ - E), factored to keep the endpoints exact.
  const double radicand = (E - k.E_minus) * (k.E_plus - E);
  return radicand <= 0.0 ? 0.0 : std::sqrt(radicand) / ctx.V;
}

double p_z_of_E(const PhysicalContext& ctx, double E) {
  ctx.validate();
  const double pz = (E - ctx.b) / ctx.V;
  if (pz < 0.0) {
    std::ostringstream os;
    os << "forward travel requires p_z >= 0 (got p_z = " << pz << " at E = " << E << ")";
    throw DomainError(os.str());
  }
  return pz;
}

double u_of_E(const PhysicalContext& ctx, double E) {
  const KinematicConstants k = kinematics(ctx);
  const double slack = kEndpointSlack * k.E_plus;
  if (!(E >= k.E_minus - slack && E <= k.E_plus + slack)) {
    throw DomainError(interval_message("energy E", E, k.E_minus, k.E_plus));
  }
  return (E - k.B) / k.A;
}

double E_of_u(const PhysicalContext& ctx, double u) {
  if (!(u >= -1.0 - kEndpointSlack && u <= 1.0 + kEndpointSlack)) {
    throw DomainError(interval_message("u", u, -1.0, 1.0));
  }
  const KinematicConstants k = kinematics(ctx);
  return k.A * u + k.B;
}

ComovingCoords comoving(const PhysicalContext& ctx, double rho, double z, double t,
                        double phi) {
  const KinematicConstants k = kinematics(ctx);
  return ComovingCoords{z - ctx.V * t, z - k.v_phase_b * t, rho, phi};
}

}  // namespace lwave
