#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

/// Point (y, y') at abscissa x on a trajectory of the planar system.
struct State {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

[[nodiscard]] bool is_finite(const State& s);

/// Vector field of a planar first-order system u' = f(u), u = (y, dy).
using Rhs = std::function<std::array<double, 2>(const State&)>;

/// y'' - y' + y = y^3 written as (y, y')' = (y', y' - y + y^3).
std::array<double, 2> rhs_forward(const State& s);

/// z'' - z' - 2z = -3 z^2 + z^3, the y = 1 - z frame; the y-slot stores z.
std::array<double, 2> rhs_z(const State& s);

struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = 0.5;
  long max_steps = 2000000;
  /// |y| beyond this ends the run with Trajectory::Status::Blowup instead of
  /// erroring; the shooting layer consumes the classification.
  double blow_up = 1e3;

  /// Throws std::invalid_argument on non-positive tolerances or step caps.
  void validate() const;
};

/// Interpolation model attached to each accepted step.
///
/// SecondOrder assumes the system is (y, y')' = (y', f); the dense output is
/// then the two-point quintic Hermite through (y, y', y'') at both endpoints
/// (y'' comes free from the FSAL stage), and derivative() is its analytic
/// derivative. Generic treats the two components independently with cubic
/// Hermite data, for first-order equations embedded in the y-slot.
enum class Structure { SecondOrder, Generic };

struct StepRecord {
  double x0 = 0.0, x1 = 0.0;      // x0 < x1 regardless of integration direction
  std::array<double, 2> u0{}, u1{};  // state components at the endpoints
  std::array<double, 2> f0{}, f1{};  // vector field at the endpoints
};

/// Dense-output solution of an IVP over a closed interval.
///
/// Accepted steps tile [x_min, x_max] with no gaps; the interpolant matches
/// the stored endpoint states. Read-only after construction and safe to
/// share across threads.
class Trajectory {
 public:
  enum class Status { Completed, Blowup };

  Trajectory(std::vector<StepRecord> steps, Structure structure, Status status,
             State last);

  [[nodiscard]] double x_min() const { return steps_.front().x0; }
  [[nodiscard]] double x_max() const { return steps_.back().x1; }
  [[nodiscard]] bool covers(double lo, double hi) const;

  /// State (y, dy) at any x in the domain; throws std::out_of_range outside.
  [[nodiscard]] State evaluate(double x) const;
  [[nodiscard]] double value(double x) const;
  [[nodiscard]] double derivative(double x) const;
  /// y''(x) from the quintic; meaningful in SecondOrder mode only.
  [[nodiscard]] double second_derivative(double x) const;

  [[nodiscard]] Status status() const { return status_; }
  /// Chronologically final state (the truncation point of a Blowup run).
  [[nodiscard]] const State& last() const { return last_; }
  [[nodiscard]] const std::vector<StepRecord>& steps() const { return steps_; }
  [[nodiscard]] Structure structure() const { return structure_; }

 private:
  const StepRecord& locate(double x) const;

  std::vector<StepRecord> steps_;
  Structure structure_;
  Status status_;
  State last_;
};

/// Adaptive Dormand-Prince 5(4) with dense output.
///
/// Integrates from init.x to x_end (either direction). Throws
/// StepCountExceeded / StepUnderflow / NonFiniteState; a blow-up past
/// cfg.blow_up truncates the run instead (see IntegratorConfig).
Trajectory integrate(const Rhs& rhs, const State& init, double x_end,
                     const IntegratorConfig& cfg = {},
                     Structure structure = Structure::SecondOrder);

/// Abscissa where the predicate crosses zero, refined by bisection on the
/// dense output to 1e-13 in x. Throws NoSignChange if no step straddles zero.
double find_event(const Trajectory& traj,
                  const std::function<double(const State&)>& predicate);

}  // namespace monopole
