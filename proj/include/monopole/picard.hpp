#pragma once

#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

/// Uniform samples of u(t) on [0, horizon], t = -x >= 0. Membership in the
/// iteration space requires sup |u| <= 1/2 and u(0) = 0.
struct GridFunction {
  double horizon = 0.0;
  std::vector<double> values;

  [[nodiscard]] std::size_t n() const { return values.size(); }
  [[nodiscard]] double dt() const {
    return horizon / static_cast<double>(n() - 1);
  }
  /// Throws DomainViolation if the space-membership invariants fail.
  void validate() const;
};

struct FixedPointReport {
  int iterations = 0;
  double final_residual = 0.0;      // sup |T(u*) - u*|
  double contraction_estimate = 0.0;  // max observed d_{k+1}/d_k
};

/// One sweep of the integral operator
///   T(u)(t) = -(2/sqrt3) a* sin(sqrt3 t/2)
///             + (2/sqrt3) \int_0^t e^{-s} sin(sqrt3 (t-s)/2) u^3(s) ds,
/// evaluated on u's grid. The kernel splits by the angle-difference identity
/// into two running integrals, so a sweep costs O(n); each cell uses the
/// four-point Newton-Cotes rule (O(h^4) cumulative error).
GridFunction apply_T(const GridFunction& u, double a_star);

/// sup-metric of the iteration space.
double sup_distance(const GridFunction& a, const GridFunction& b);

/// Picard iteration u_{k+1} = T(u_k) from u = 0 until
/// d(u_{k+1}, u_k) <= tol (1 - sqrt3/2); the geometric a priori bound then
/// puts the iterate within tol of the fixed point of the discrete operator.
/// Throws NoConvergence if the iteration cap is hit.
std::pair<GridFunction, FixedPointReport> solve_fixed_point(
    double a_star, double horizon = 30.0, std::size_t n = 30001,
    double tol = 1e-12, int max_iterations = 400);

/// The negative-axis branch y*(x) = e^{x/2} u*(-x), x in [-horizon, 0],
/// with dense evaluation (local cubic interpolation on the grid).
class LeftBranch {
 public:
  LeftBranch(GridFunction u_star, double a_star);

  [[nodiscard]] double value(double x) const;       // y*(x)
  [[nodiscard]] double derivative(double x) const;  // y*'(x)
  [[nodiscard]] double x_min() const { return -u_.horizon; }
  [[nodiscard]] bool covers(double lo, double hi) const;

  [[nodiscard]] const GridFunction& grid() const { return u_; }
  [[nodiscard]] double a_star() const { return a_star_; }

  /// u and u' at t = -x, by the same local cubics.
  [[nodiscard]] double u_value(double t) const;
  [[nodiscard]] double u_derivative(double t) const;

 private:
  GridFunction u_;
  double a_star_;
};

/// Wraps a converged fixed point as the left branch of y*.
LeftBranch extend_left(GridFunction u_star, double a_star);

}  // namespace monopole
