#include "monopole/profile.hpp"

#include <cmath>
#include <limits>

namespace monopole {

namespace {

constexpr double kOmega = 0.86602540378443864676;  // sqrt(3)/2
constexpr double kTwoOverSqrt3 = 1.1547005383792515290;
constexpr int kZeroCap = 100000;

State left_tail(const ConnectionConstants& c, double x) {
  const double e = std::exp(0.5 * x);
  const double arg = kOmega * x + c.phase_phi;
  const double y = c.amplitude_A * e * std::sin(arg);
  const double dy =
      c.amplitude_A * e * (0.5 * std::sin(arg) + kOmega * std::cos(arg));
  return {x, y, dy};
}

State right_tail(const ConnectionConstants& c, double x) {
  const double e = c.coeff_B * std::exp(-x);
  return {x, 1.0 - e, e};
}

// Zeros of u* on the grid, bisected on the interpolated branch; returned as
// descending x = -t together with x0 = 0.
std::vector<Zero> locate_core_zeros(const LeftBranch& left) {
  std::vector<Zero> zeros;
  zeros.push_back({0.0, false});
  const GridFunction& g = left.grid();
  const double h = g.dt();
  for (std::size_t i = 0; i + 1 < g.n(); ++i) {
    if (!(g.values[i] * g.values[i + 1] < 0.0)) continue;
    double a = static_cast<double>(i) * h;
    double b = a + h;
    double ua = left.u_value(a);
    while (b - a > 1e-12) {
      const double m = 0.5 * (a + b);
      const double um = left.u_value(m);
      if (ua * um <= 0.0) {
        b = m;
      } else {
        a = m;
        ua = um;
      }
    }
    zeros.push_back({-0.5 * (a + b), false});
  }
  return zeros;
}

double asymptotic_zero(const ConnectionConstants& c, int k) {
  return -kTwoOverSqrt3 * (static_cast<double>(k) * M_PI + c.phase_phi);
}

}  // namespace

ProfileModel::ProfileModel(ConnectionConstants constants,
                           std::shared_ptr<const LeftBranch> left,
                           std::shared_ptr<const RightBranch> right,
                           double x_left, double x_right,
                           std::vector<Zero> zeros)
    : constants_(constants),
      left_(std::move(left)),
      right_(std::move(right)),
      x_left_(x_left),
      x_right_(x_right),
      zeros_(std::move(zeros)) {}

State ProfileModel::evaluate(double x) const {
  if (x < x_left_) return left_tail(constants_, x);
  if (x <= 0.0) return {x, left_->value(x), left_->derivative(x)};
  if (x <= x_right_) return right_->evaluate(x);
  return right_tail(constants_, x);
}

ProfileModel build_profile(const ConnectionConstants& constants,
                           std::shared_ptr<const LeftBranch> left,
                           std::shared_ptr<const RightBranch> right,
                           const ProfileOptions& opts) {
  if (!left || !right) throw std::invalid_argument("null branch");
  const double slope_gap =
      std::abs(left->a_star() - right->slope_at_zero());
  if (!(slope_gap <= opts.branch_tol))
    throw InconsistentInputs("branches disagree on y'(0) beyond tolerance");

  // Deepen a switch point until core and tail agree there.
  double x_left = opts.x_left;
  while (true) {
    if (!left->covers(x_left, 0.0))
      throw InconsistentInputs("no admissible left switch point");
    const double gap =
        std::abs(left->value(x_left) - left_tail(constants, x_left).y);
    if (gap <= opts.switch_tol) break;
    x_left -= 1.0;
  }
  double x_right = std::min(opts.x_right, right->x_max());
  while (true) {
    const double gap =
        std::abs(right->value(x_right) - right_tail(constants, x_right).y);
    if (gap <= opts.switch_tol) break;
    x_right += 1.0;
    if (x_right > right->x_max())
      throw InconsistentInputs("no admissible right switch point");
  }

  return ProfileModel(constants, left, std::move(right), x_left, x_right,
                      locate_core_zeros(*left));
}

std::vector<Zero> find_zeros(const ProfileModel& model, int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (count > kZeroCap)
    throw CoverageExceeded("zero index beyond the supported range");
  const std::vector<Zero>& known = model.zeros();  // known[0] is x0 = 0
  std::vector<Zero> out;
  out.reserve(count);
  for (int k = 1; k <= count; ++k) {
    if (static_cast<std::size_t>(k) < known.size())
      out.push_back(known[k]);
    else
      out.push_back({asymptotic_zero(model.constants(), k), true});
  }
  return out;
}

ShiftedSolution::ShiftedSolution(ProfileModel model, double shift, int n)
    : model_(std::move(model)), shift_(shift), n_(n) {}

ShiftedSolution shifted_solution(const ProfileModel& model, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (static_cast<std::size_t>(n) >= model.zeros().size())
    throw CoverageExceeded("shift index beyond the bisected zero list");
  return ShiftedSolution(model, model.zeros()[n].x, n);
}

double largest_zero_shift(const ProfileModel& model,
                          const std::function<double(double)>& candidate,
                          double scan_lo, double scan_hi) {
  constexpr double kScanStep = 0.25;
  double hi = scan_hi;
  double f_hi = candidate(hi);
  double tau = std::numeric_limits<double>::quiet_NaN();
  for (double x = scan_hi - kScanStep; x >= scan_lo - 1e-12; x -= kScanStep) {
    const double f = candidate(x);
    if (f == 0.0) {
      tau = x;
      break;
    }
    if (f * f_hi < 0.0) {
      double a = x, b = hi, fa = f;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const double fm = candidate(m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      tau = 0.5 * (a + b);
      break;
    }
    hi = x;
    f_hi = f;
  }
  if (!std::isfinite(tau))
    throw NoZeroFound("candidate has no zero in the scan window");

  // Confirm the representation candidate(x) = y*(x - tau) by sampling.
  for (int i = 0; i < 100; ++i) {
    const double x = tau - 12.0 + 20.0 * static_cast<double>(i) / 99.0;
    const double want = model.value(x - tau);
    if (std::abs(candidate(x) - want) > 1e-6)
      throw NotASolution("candidate is not a translate of y*");
  }
  return tau;
}

RadialProfile make_radial(const ProfileModel& model, double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0))
    throw NonpositiveRadius("r0 must be positive");
  return {r0, model};
}

double evaluate_f(const RadialProfile& radial, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw NonpositiveRadius("f(r) requires r > 0");
  return radial.model.value(std::log(r / radial.r0));
}

}  // namespace monopole
