#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "monopole/connection.hpp"
#include "monopole/picard.hpp"
#include "monopole/shooting.hpp"

namespace monopole {

struct Zero {
  double x = 0.0;
  /// true when the location comes from the tail formula rather than
  /// bisection on the computed core.
  bool asymptotic = false;
};

struct ProfileOptions {
  double x_left = -20.0;   // switch to the A e^{x/2} sin tail
  double x_right = 25.0;   // switch to the 1 - B e^{-x} tail
  double switch_tol = 1e-8;  // required core/tail agreement at the switches
  /// Allowed |y'(0)| mismatch between the two core branches; infinity
  /// disables the gate (used when probing with an injected wrong a*).
  double branch_tol = 1e-8;
};

/// Piecewise global model of y*: asymptotic tail for x <= x_left, Picard
/// branch on [x_left, 0], stable-manifold orbit on [0, x_right], decay tail
/// beyond. Immutable and cheap to copy.
class ProfileModel {
 public:
  ProfileModel(ConnectionConstants constants,
               std::shared_ptr<const LeftBranch> left,
               std::shared_ptr<const RightBranch> right, double x_left,
               double x_right, std::vector<Zero> zeros);

  /// y and y' at any real x.
  [[nodiscard]] State evaluate(double x) const;
  [[nodiscard]] double value(double x) const { return evaluate(x).y; }

  [[nodiscard]] const ConnectionConstants& constants() const {
    return constants_;
  }
  [[nodiscard]] double x_left() const { return x_left_; }
  [[nodiscard]] double x_right() const { return x_right_; }
  /// Descending zero list x0 = 0 > x1 > ...; bisected core zeros only.
  [[nodiscard]] const std::vector<Zero>& zeros() const { return zeros_; }
  [[nodiscard]] const LeftBranch& left() const { return *left_; }
  [[nodiscard]] const RightBranch& right() const { return *right_; }

 private:
  ConnectionConstants constants_;
  std::shared_ptr<const LeftBranch> left_;
  std::shared_ptr<const RightBranch> right_;
  double x_left_, x_right_;
  std::vector<Zero> zeros_;
};

/// Assembles the model, validating that the branches carry a consistent
/// slope at x = 0 (InconsistentInputs otherwise) and that core and tails
/// agree within switch_tol at the switch points, deepening the switches if
/// needed.
ProfileModel build_profile(const ConnectionConstants& constants,
                           std::shared_ptr<const LeftBranch> left,
                           std::shared_ptr<const RightBranch> right,
                           const ProfileOptions& opts = {});

/// Descending zeros x1 ... xN. Beyond the computed core the tail-formula
/// locations x_k = -(2/sqrt3)(k pi + phi) are reported with the asymptotic
/// flag set; they are never mixed silently with bisected ones.
std::vector<Zero> find_zeros(const ProfileModel& model, int count);

/// The translate x -> y*(x + x_n): the unique solution with exactly n zeros
/// in (0, inf). Requires n within the bisected zero count (CoverageExceeded).
class ShiftedSolution {
 public:
  ShiftedSolution(ProfileModel model, double shift, int n);
  [[nodiscard]] double operator()(double x) const {
    return model_.value(x + shift_);
  }
  [[nodiscard]] double shift() const { return shift_; }
  [[nodiscard]] int zero_count() const { return n_; }

 private:
  ProfileModel model_;
  double shift_;
  int n_;
};

ShiftedSolution shifted_solution(const ProfileModel& model, int n);

/// Translation tau with candidate(x) = y*(x - tau), located at the
/// candidate's largest zero and verified by sampling; NoZeroFound if the
/// scan window has no sign change, NotASolution if the representation check
/// fails.
double largest_zero_shift(const ProfileModel& model,
                          const std::function<double(double)>& candidate,
                          double scan_lo = -40.0, double scan_hi = 40.0);

/// f(r) = y*(log(r / r0)) with r0 the largest zero of f.
struct RadialProfile {
  double r0 = 1.0;
  ProfileModel model;
};

RadialProfile make_radial(const ProfileModel& model, double r0);

/// Throws NonpositiveRadius for r <= 0.
double evaluate_f(const RadialProfile& radial, double r);

}  // namespace monopole
