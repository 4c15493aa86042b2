#pragma once

#include <utility>
#include <vector>

#include "monopole/ivp.hpp"
#include "monopole/shooting.hpp"

namespace monopole {

/// First-integral curve P(z) of P P' - P = z(z-1)(z-2) on [z0, 1] with the
/// P ~ -z start. Along the x > 0 orbit it encodes y*' = -P(1 - y*).
///
/// Internally the curve is carried as eta(w) with w = log z and
/// P = -z (1 + z eta); eta stays O(1) on the whole range, so relative
/// accuracy survives down to z0 = 1e-40 where P itself underflows any
/// absolute error control.
class PhaseCurve {
 public:
  PhaseCurve(Trajectory eta_traj, double z0);

  [[nodiscard]] double z0() const { return z0_; }
  [[nodiscard]] double p_value(double z) const;
  [[nodiscard]] double dp_dz(double z) const;
  [[nodiscard]] double p_at_one() const;

  /// (z, P) at the integrator's accepted nodes, ascending in z.
  [[nodiscard]] std::vector<std::pair<double, double>> samples() const;
  [[nodiscard]] const Trajectory& eta_trajectory() const { return eta_; }

 private:
  Trajectory eta_;  // Generic-mode trajectory of eta over [log z0, 0]
  double z0_;
};

/// Integrates the curve from P(z0) = -z0 up to z = 1. Throws SingularP if P
/// reaches zero in the interior (wrong branch).
PhaseCurve solve_P(double z0 = 1e-40, const IntegratorConfig& cfg = {
                       1e-12, 1e-14, 0.1, 2000000, 1e3});

/// max over sampled x in [0, x_hi] of |y*'(x) + P(1 - y*(x))|, interpolating
/// on the curve; links the shooting orbit to the phase-plane first integral.
double check_P_relation(const RightBranch& right, const PhaseCurve& curve,
                        double x_hi = 10.0, int samples = 2001);

}  // namespace monopole
