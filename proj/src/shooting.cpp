#include "monopole/shooting.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace monopole {

namespace {

// Bisect pred over [a, b] within one step's dense output; pred(a), pred(b)
// must straddle zero.
double bisect_step(const Trajectory& traj, double a, double b,
                   const std::function<double(const State&)>& pred) {
  double pa = pred(traj.evaluate(a));
  while (b - a > 1e-13) {
    const double m = 0.5 * (a + b);
    const double pm = pred(traj.evaluate(m));
    if (pa * pm <= 0.0) {
      b = m;
    } else {
      a = m;
      pa = pm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ShotOutcome classify_shot(double a, double window, const IntegratorConfig& cfg,
                          const ShootingParams& params) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("slope outside sanity range (0, 1)");
  if (!(window > 0.0)) throw std::invalid_argument("window must be positive");

  const Trajectory traj =
      integrate(rhs_forward, State{0.0, 0.0, a}, window, cfg);
  const double over_th = 1.0 + params.delta_over;
  const auto y_over = [over_th](const State& s) { return s.y - over_th; };
  const auto dy_pred = [](const State& s) { return s.dy; };

  for (const StepRecord& rec : traj.steps()) {
    std::optional<double> x_over;
    std::optional<double> x_under;

    const State sl = traj.evaluate(rec.x0);
    const State sr = traj.evaluate(rec.x1);
    if (sl.y < over_th && sr.y >= over_th)
      x_over = bisect_step(traj, rec.x0, rec.x1, y_over);
    if (sl.dy * sr.dy < 0.0 || (sr.dy == 0.0 && sl.dy != 0.0)) {
      const double xz = bisect_step(traj, rec.x0, rec.x1, dy_pred);
      if (traj.value(xz) < 1.0 - params.delta_conv) x_under = xz;
    }

    if (x_over && (!x_under || *x_over <= *x_under))
      return {ShotKind::Overshoot, *x_over, traj.evaluate(*x_over)};
    if (x_under)
      return {ShotKind::Undershoot, *x_under, traj.evaluate(*x_under)};
  }

  const State end = traj.last();
  if (traj.status() == Trajectory::Status::Blowup) {
    if (end.y >= over_th) return {ShotKind::Overshoot, end.x, end};
    if (end.y < 1.0 - params.delta_conv)
      return {ShotKind::Undershoot, end.x, end};
    throw IndeterminateShot("blow-up without classifiable sign");
  }
  if (std::abs(end.y - 1.0) <= params.delta_conv &&
      std::abs(end.dy) <= params.delta_conv)
    return {ShotKind::Converged, end.x, end};

  std::ostringstream msg;
  msg << "window " << window << " exhausted unclassified at y=" << end.y
      << ", y'=" << end.dy << "; enlarge the window";
  throw IndeterminateShot(msg.str());
}

CriticalSlope find_critical_slope(double lo, double hi, double tol,
                                  double window, const IntegratorConfig& cfg,
                                  const ShootingParams& params) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!(lo < hi)) throw InvalidBracket("bracket endpoints out of order");

  if (classify_shot(lo, window, cfg, params).kind != ShotKind::Undershoot)
    throw InvalidBracket("lower endpoint does not undershoot");
  if (classify_shot(hi, window, cfg, params).kind != ShotKind::Overshoot)
    throw InvalidBracket("upper endpoint does not overshoot");

  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    ++iterations;
    const ShotOutcome out = classify_shot(mid, window, cfg, params);
    switch (out.kind) {
      case ShotKind::Undershoot:
        lo = mid;
        break;
      case ShotKind::Overshoot:
        hi = mid;
        break;
      case ShotKind::Converged:
        // Shrink by the side of the saddle the shot ends on.
        if (out.final_state.y < 1.0)
          lo = mid;
        else
          hi = mid;
        break;
    }
  }

  CriticalSlope result{0.5 * (lo + hi), lo, hi, iterations};
  if (!(result.value > 0.0 && result.value < 0.25))
    throw InvalidBracket("bisection converged outside (0, 1/4)");
  return result;
}

RightBranch::RightBranch(Trajectory z_traj, double beta, int iterations)
    : z_traj_(std::move(z_traj)), beta_(beta), iterations_(iterations) {}

State RightBranch::evaluate(double x) const {
  const State z = z_traj_.evaluate(x);
  return {x, 1.0 - z.y, -z.dy};
}

bool RightBranch::covers(double lo, double hi) const {
  return z_traj_.covers(lo, hi);
}

double RightBranch::slope_at_zero() const { return -z_traj_.evaluate(0.0).dy; }

double RightBranch::y0_residual() const {
  return std::abs(1.0 - z_traj_.evaluate(0.0).y);
}

RightBranch solve_stable_manifold(double x_max, const IntegratorConfig& cfg,
                                  double beta_lo, double beta_hi) {
  if (!(x_max > 0.0)) throw std::invalid_argument("x_max must be positive");
  if (!(0.0 < beta_lo && beta_lo < beta_hi))
    throw InvalidBracket("beta bracket out of order");

  const auto shoot = [&](double beta) {
    const double s = beta * std::exp(-x_max);
    // Manifold seed to second order: z = s, z' = -s + (3/4)s^2.
    const State init{x_max, s, -s + 0.75 * s * s};
    return integrate(rhs_z, init, 0.0, cfg);
  };
  // z(0) - 1 changes sign across the matching beta.
  const auto defect = [](const Trajectory& t) { return t.last().y - 1.0; };

  if (!(defect(shoot(beta_lo)) < 0.0 && defect(shoot(beta_hi)) > 0.0))
    throw InvalidBracket("beta bracket does not straddle z(0) = 1");

  int iterations = 0;
  while (beta_hi - beta_lo > 1e-15 * beta_hi) {
    const double mid = 0.5 * (beta_lo + beta_hi);
    if (mid <= beta_lo || mid >= beta_hi) break;
    ++iterations;
    if (defect(shoot(mid)) < 0.0)
      beta_lo = mid;
    else
      beta_hi = mid;
  }

  const double beta = 0.5 * (beta_lo + beta_hi);
  return RightBranch(shoot(beta), beta, iterations);
}

}  // namespace monopole
