#include "monopole/phase.hpp"

#include <cmath>

namespace monopole {

namespace {

// P = -z (1 + z eta) turns P P' - P = z(z-1)(z-2) into
//   eta' = (z - 3 - 4 eta - 2 z eta^2) / (1 + z eta),   z = e^w,
// with eta(log z0) = 0 and the fixed point eta -> -3/4 as z -> 0.
std::array<double, 2> eta_rhs(const State& s) {
  const double z = std::exp(s.x);
  const double e = s.y;
  return {(z - 3.0 - 4.0 * e - 2.0 * z * e * e) / (1.0 + z * e), 0.0};
}

}  // namespace

PhaseCurve::PhaseCurve(Trajectory eta_traj, double z0)
    : eta_(std::move(eta_traj)), z0_(z0) {}

double PhaseCurve::p_value(double z) const {
  if (!(z > 0.0)) throw DomainMismatch("P(z) requires z > 0");
  const double w = std::min(std::log(z), 0.0);
  const double eta = eta_.value(w);
  return -z * (1.0 + z * eta);
}

double PhaseCurve::dp_dz(double z) const {
  if (!(z > 0.0)) throw DomainMismatch("P(z) requires z > 0");
  const double w = std::min(std::log(z), 0.0);
  const double eta = eta_.value(w);
  const double deta_dw = eta_.derivative(w);
  return -1.0 - 2.0 * z * eta - z * deta_dw;
}

double PhaseCurve::p_at_one() const { return -(1.0 + eta_.value(0.0)); }

std::vector<std::pair<double, double>> PhaseCurve::samples() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(eta_.steps().size() + 1);
  for (const StepRecord& s : eta_.steps()) {
    const double z = std::exp(s.x0);
    out.emplace_back(z, -z * (1.0 + z * s.u0[0]));
  }
  const double z1 = std::exp(eta_.x_max());
  out.emplace_back(z1, -z1 * (1.0 + z1 * eta_.steps().back().u1[0]));
  return out;
}

PhaseCurve solve_P(double z0, const IntegratorConfig& cfg) {
  if (!(z0 > 0.0 && z0 <= 1e-3))
    throw std::invalid_argument("z0 must lie in (0, 1e-3]");
  const double w0 = std::log(z0);
  try {
    Trajectory eta = integrate(eta_rhs, State{w0, 0.0, 0.0}, 0.0, cfg,
                               Structure::Generic);
    // On the expected branch P < 0 throughout, i.e. 1 + z eta > 0.
    for (const StepRecord& s : eta.steps()) {
      if (1.0 + std::exp(s.x1) * s.u1[0] <= 0.0)
        throw SingularP("P reached zero before z = 1");
    }
    return PhaseCurve(std::move(eta), z0);
  } catch (const StepUnderflow&) {
    throw SingularP("integration stalled: P approaching zero in the interior");
  } catch (const NonFiniteState&) {
    throw SingularP("vector field singular: P reached zero in the interior");
  }
}

double check_P_relation(const RightBranch& right, const PhaseCurve& curve,
                        double x_hi, int samples) {
  if (!right.covers(0.0, x_hi))
    throw DomainMismatch("right branch does not cover [0, x_hi]");
  const double z_min = right.z_value(x_hi);
  if (!(z_min > curve.z0()))
    throw DomainMismatch("curve does not reach 1 - y*(x_hi)");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = x_hi * static_cast<double>(i) / (samples - 1);
    const State s = right.evaluate(x);
    const double z = std::min(1.0 - s.y, 1.0);
    worst = std::max(worst, std::abs(s.dy + curve.p_value(z)));
  }
  return worst;
}

}  // namespace monopole
