#pragma once

#include "monopole/ivp.hpp"

namespace monopole {

/// Shot classification thresholds. The saddle at y = 1 has unstable
/// eigenvalue 2, so deviations amplify like e^{2x}; tight thresholds keep
/// the under/overshoot dichotomy sharp.
struct ShootingParams {
  double delta_over = 1e-9;  // y >= 1 + delta_over counts as Overshoot
  double delta_conv = 1e-6;  // |y-1|, |y'| <= delta_conv at window end: Converged
};

enum class ShotKind { Undershoot, Overshoot, Converged };

struct ShotOutcome {
  ShotKind kind = ShotKind::Undershoot;
  double witness_x = 0.0;  // abscissa of the classifying event
  State final_state{};     // state at the witness
};

struct CriticalSlope {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// Integrates y'' - y' + y = y^3 from (0, 0, a) up to `window`, stopping at
/// the first classifying event: an upward crossing of 1 + delta_over
/// (Overshoot) or a turning point y' = 0 with y < 1 - delta_conv
/// (Undershoot). A blow-up classifies by its sign; a clean arrival inside the
/// convergence box classifies as Converged. Throws IndeterminateShot when the
/// window is exhausted unclassified.
ShotOutcome classify_shot(double a, double window, const IntegratorConfig& cfg,
                          const ShootingParams& params = {});

/// Bisection on the shot classification. Requires classify(lo) = Undershoot
/// and classify(hi) = Overshoot (else InvalidBracket); maintains that bracket
/// until its width is <= tol. A Converged midpoint shrinks the bracket by the
/// sign of y - 1 at its witness state.
CriticalSlope find_critical_slope(double lo, double hi, double tol,
                                  double window, const IntegratorConfig& cfg,
                                  const ShootingParams& params = {});

/// Orbit on the stable manifold of the saddle y = 1, i.e. the x > 0 branch
/// of y*. Computed in the z = 1 - y frame (z'' - z' - 2z = -3z^2 + z^3) by
/// integrating backward from x = x_max with the manifold seed
/// z = s, z' = -s + 3s^2/4, s = beta e^{-x_max}, and matching z(0) = 1 in
/// beta. Backward integration damps the unstable e^{2x} mode, and relative
/// error control in z keeps the exponentially small tail accurate — a
/// forward shot loses the orbit near x ~ 12 in double precision.
class RightBranch {
 public:
  RightBranch(Trajectory z_traj, double beta, int iterations);

  /// y-frame state (y, y') at x in [0, x_max].
  [[nodiscard]] State evaluate(double x) const;
  [[nodiscard]] double value(double x) const { return evaluate(x).y; }
  /// z = 1 - y, accurate in relative terms down to the e^{-x_max} tail.
  [[nodiscard]] double z_value(double x) const { return z_traj_.value(x); }
  [[nodiscard]] double x_max() const { return z_traj_.x_max(); }
  [[nodiscard]] bool covers(double lo, double hi) const;

  [[nodiscard]] double decay_coeff() const { return beta_; }
  [[nodiscard]] double slope_at_zero() const;  // y'(0), an estimate of a*
  [[nodiscard]] double y0_residual() const;    // |y(0)| left by the matching
  [[nodiscard]] int iterations() const { return iterations_; }
  [[nodiscard]] const Trajectory& z_trajectory() const { return z_traj_; }

 private:
  Trajectory z_traj_;  // domain [0, x_max]
  double beta_;        // z ~ beta e^{-x} as x grows
  int iterations_;
};

/// cfg.abs_tol should be far below rel_tol here so the error control stays
/// relative along the decaying tail; solve() uses 1e-300.
RightBranch solve_stable_manifold(double x_max, const IntegratorConfig& cfg,
                                  double beta_lo = 1.0, double beta_hi = 20.0);

}  // namespace monopole
