#include "monopole/pipeline.hpp"

#include <cmath>
#include <limits>

namespace monopole {

Solution solve(const SolveOptions& opts) {
  const CriticalSlope critical =
      find_critical_slope(opts.bracket_lo, opts.bracket_hi, opts.slope_tol,
                          opts.window, opts.ode);

  IntegratorConfig manifold_cfg = opts.ode;
  manifold_cfg.rel_tol = opts.manifold_rel_tol;
  manifold_cfg.abs_tol = 1e-300;  // keep the error control relative in z
  auto right = std::make_shared<const RightBranch>(
      solve_stable_manifold(opts.manifold_x, manifold_cfg));

  const double a_star =
      opts.a_star_override.value_or(right->slope_at_zero());
  if (!opts.a_star_override &&
      std::abs(critical.value - a_star) > 10.0 * opts.slope_tol + 1e-10)
    throw InconsistentInputs(
        "shooting bisection and manifold slope disagree at x = 0");

  auto [u_star, picard_report] =
      solve_fixed_point(a_star, opts.horizon, opts.grid_n, opts.picard_tol);
  auto left = std::make_shared<const LeftBranch>(
      extend_left(std::move(u_star), a_star));

  const double b_star = compute_b_star(*left, opts.trunc_bc);
  const double c_star = compute_c_star(*left, opts.trunc_bc);
  const double d_star = compute_d_star(*right, opts.trunc_d);
  const ConnectionConstants constants =
      assemble(a_star, b_star, c_star, d_star, opts.trunc_bc, opts.trunc_d);

  ProfileOptions popts;
  popts.x_left = opts.x_left;
  popts.x_right = opts.x_right;
  popts.switch_tol = opts.switch_tol;
  if (opts.a_star_override) {
    // The injected value is meant to disagree with the manifold; let the
    // model build so the verification checks can fail loudly instead.
    popts.branch_tol = std::numeric_limits<double>::infinity();
  }
  ProfileModel model = build_profile(constants, left, right, popts);

  PhaseCurve phase = solve_P(opts.z0);

  return Solution{critical,       a_star, right,
                  left,           picard_report, constants,
                  std::move(model), std::move(phase)};
}

}  // namespace monopole
