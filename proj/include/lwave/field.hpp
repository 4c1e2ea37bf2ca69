#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lwave/core.hpp"

namespace lwave {

enum class SampleStatus { ok, divergent, tolerance_not_met, overflow };

const char* to_string(SampleStatus s);

/// Value returned by a field kernel: the amplitude plus how far to trust it.
struct Amplitude {
  Complex value{};
  SampleStatus status = SampleStatus::ok;
  double error_estimate = 0.0;
};

/// A complex amplitude together with the point it was evaluated at.
struct FieldSample {
  Complex psi{};
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;
  double t = 0.0;
  SampleStatus status = SampleStatus::ok;
  double error_estimate = 0.0;
};

/// Descriptive metadata carried by every evaluator and copied into exports.
struct FieldInfo {
  std::string family;
  std::map<std::string, double> params;
  std::vector<std::string> errata_flags;
  /// Speed of the frame in which |psi| is stationary (V for localized waves).
  double frame_velocity = 0.0;
  bool axisymmetric = true;
};

/// Maps (rho, z, t, phi) to a complex amplitude. Immutable and cheap to copy;
/// the kernel must be safe to call concurrently.
class FieldEvaluator {
 public:
  using Kernel = std::function<Amplitude(double rho, double z, double t, double phi)>;

  FieldEvaluator() = default;
  FieldEvaluator(Kernel kernel, FieldInfo info);

  FieldSample sample(double rho, double z, double t, double phi = 0.0) const;

  /// Amplitude at a point; throws EvaluationError unless the status is ok.
  Complex operator()(double rho, double z, double t, double phi = 0.0) const;

  const FieldInfo& info() const noexcept { return info_; }
  explicit operator bool() const noexcept { return static_cast<bool>(kernel_); }

 private:
  Kernel kernel_;
  FieldInfo info_;
};

/// Pointwise sum of evaluators with complex weights.
FieldEvaluator superpose(const std::vector<FieldEvaluator>& terms,
                         const std::vector<Complex>& weights, FieldInfo info);

}  // namespace lwave
