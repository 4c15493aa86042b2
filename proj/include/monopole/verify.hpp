#pragma once

#include <string>
#include <vector>

#include "monopole/pipeline.hpp"

namespace monopole {

/// One line of the verification suite: measured value against its admissible
/// interval [lo, hi].
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool pass = false;
};

/// Random members of the iteration space for the contraction probe: clipped
/// smooth trig fields with u(0) = 0. Deterministic for a given seed.
GridFunction random_space_member(double horizon, std::size_t n,
                                 unsigned seed);

/// The invariant suite behind `verify`: operator contraction and self-map
/// bounds, fixed-point residual, Picard-vs-ODE cross-validation, core
/// defect, the e^{-2s} integral identity, both asymptotic-order fits, and
/// the phase-curve links. Deterministic for a given seed.
std::vector<CheckResult> run_verification(const Solution& sol,
                                          unsigned seed = 20250809,
                                          int contraction_pairs = 50);

/// Max |y'' - y' + y - y^3| over `points` samples of the model core,
/// estimating y'' by a sixth-order central difference on the dense output.
double core_defect(const ProfileModel& model, int points = 1000);

}  // namespace monopole
