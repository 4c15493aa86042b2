#pragma once

#include <memory>
#include <optional>

#include "monopole/connection.hpp"
#include "monopole/phase.hpp"
#include "monopole/picard.hpp"
#include "monopole/profile.hpp"
#include "monopole/shooting.hpp"

namespace monopole {

/// Knobs for the end-to-end construction of y*. Defaults reproduce the
/// reference run: a* bracketed to 1e-11, manifold orbit to x = 25, Picard
/// horizon 30 on a 1e-3 grid, truncations 30 / 15 for the connection
/// integrals.
struct SolveOptions {
  // critical slope
  double bracket_lo = 0.01;
  double bracket_hi = 0.25;
  double slope_tol = 1e-11;
  double window = 40.0;
  IntegratorConfig ode{};

  // stable manifold (x > 0 core)
  double manifold_x = 25.0;
  double manifold_rel_tol = 1e-13;

  // Picard branch (x < 0 core)
  double horizon = 30.0;
  std::size_t grid_n = 30001;
  double picard_tol = 1e-12;

  // connection integrals
  double trunc_bc = 30.0;
  double trunc_d = 15.0;

  // phase curve
  double z0 = 1e-40;

  // profile assembly
  double x_left = -20.0;
  double x_right = 25.0;
  double switch_tol = 1e-8;

  /// Replaces the working a* (the Picard branch and the assembled record
  /// follow it); the manifold orbit is independent of it, so downstream
  /// consistency checks expose the injection. For sensitivity probes.
  std::optional<double> a_star_override;
};

struct Solution {
  CriticalSlope critical;  // bisection result, reported as-is
  double a_star = 0.0;     // working value: manifold slope (or the override)
  std::shared_ptr<const RightBranch> right;
  std::shared_ptr<const LeftBranch> left;
  FixedPointReport picard;
  ConnectionConstants constants;
  ProfileModel model;
  PhaseCurve phase;
};

/// Runs the full pipeline: shooting bisection for a*, stable-manifold orbit,
/// Picard fixed point, connection integrals and formulas, profile assembly,
/// phase curve. The manifold slope y'(0) serves as the working a* (it is the
/// same heteroclinic data as the bisection value, accurate to ~1e-12 instead
/// of the bisection tolerance); the two are cross-checked against each other.
Solution solve(const SolveOptions& opts = {});

}  // namespace monopole
