#include "lwave/field.hpp"

#include <cmath>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/parallel.hpp"

namespace lwave {

const char* to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::ok: return "ok";
    case SampleStatus::divergent: return "divergent";
    case SampleStatus::tolerance_not_met: return "tolerance_not_met";
    case SampleStatus::overflow: return "overflow";
  }
  return "unknown";
}

FieldEvaluator::FieldEvaluator(Kernel kernel, FieldInfo info)
    : kernel_(std::move(kernel)), info_(std::move(info)) {
  if (!kernel_) throw ArgumentError("FieldEvaluator: empty kernel");
}

FieldSample FieldEvaluator::sample(double rho, double z, double t, double phi) const {
  if (!kernel_) throw ArgumentError("FieldEvaluator: evaluator is empty");
  if (!(rho >= 0.0) || !std::isfinite(rho) || !std::isfinite(z) || !std::isfinite(t) ||
      !std::isfinite(phi)) {
    throw DomainError("field coordinates must be finite with rho >= 0");
  }
  const Amplitude a = kernel_(rho, z, t, phi);
  FieldSample s{a.value, rho, phi, z, t, a.status, a.error_estimate};
  if (s.status == SampleStatus::ok &&
      (!std::isfinite(a.value.real()) || !std::isfinite(a.value.imag()))) {
    s.status = SampleStatus::overflow;
  }
  return s;
}

Complex FieldEvaluator::operator()(double rho, double z, double t, double phi) const {
  const FieldSample s = sample(rho, z, t, phi);
  if (s.status != SampleStatus::ok) {
    std::ostringstream os;
    os.precision(17);
    os << info_.family << ": sample at (rho=" << rho << ", z=" << z << ", t=" << t
       << ") is " << to_string(s.status);
    throw EvaluationError(os.str(), rho);
  }
  return s.psi;
}

FieldEvaluator superpose(const std::vector<FieldEvaluator>& terms,
                         const std::vector<Complex>& weights, FieldInfo info) {
  if (terms.size() != weights.size()) {
    throw ArgumentError("superpose: terms and weights differ in length");
  }
  auto kernel = [terms, weights](double rho, double z, double t, double phi) {
    std::vector<Complex> parts(terms.size());
    Amplitude out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const FieldSample s = terms[i].sample(rho, z, t, phi);
      if (s.status != SampleStatus::ok && out.status == SampleStatus::ok) out.status = s.status;
      parts[i] = weights[i] * s.psi;
      out.error_estimate += std::abs(weights[i]) * s.error_estimate;
    }
    out.value = pairwise_sum(parts);
    return out;
  };
  return FieldEvaluator(kernel, std::move(info));
}

}  // namespace lwave
