#include "monopole/picard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monopole {

namespace {

constexpr double kOmega = 0.86602540378443864676;  // sqrt(3)/2
constexpr double kTwoOverSqrt3 = 1.1547005383792515290;
constexpr double kContraction = 0.86602540378443864676;  // sqrt(3)/2

// Cumulative integral of g at every grid node, locally exact for cubics.
// Cell [t_i, t_{i+1}] uses the closed four-point rule on the nearest nodes.
std::vector<double> cumulative_integral(const std::vector<double>& g,
                                        double h) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  const double c = h / 24.0;
  out[1] = c * (9.0 * g[0] + 19.0 * g[1] - 5.0 * g[2] + g[3]);
  for (std::size_t i = 1; i + 2 < n; ++i)
    out[i + 1] =
        out[i] + c * (-g[i - 1] + 13.0 * g[i] + 13.0 * g[i + 1] - g[i + 2]);
  out[n - 1] = out[n - 2] + c * (g[n - 4] - 5.0 * g[n - 3] + 19.0 * g[n - 2] +
                                 9.0 * g[n - 1]);
  return out;
}

}  // namespace

void GridFunction::validate() const {
  if (n() < 5) throw DomainViolation("grid needs at least 5 points");
  if (!(horizon > 0.0)) throw DomainViolation("horizon must be positive");
  if (values[0] != 0.0) throw DomainViolation("u(0) must vanish");
  const double cap = 0.5 * (1.0 + 1e-12);
  for (double v : values) {
    if (!std::isfinite(v) || std::abs(v) > cap)
      throw DomainViolation("|u| exceeds 1/2: outside the iteration space");
  }
}

GridFunction apply_T(const GridFunction& u, double a_star) {
  u.validate();
  const std::size_t n = u.n();
  const double h = u.dt();

  std::vector<double> gc(n), gs(n);
  std::vector<double> sin_wt(n), cos_wt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * h;
    const double u3 = u.values[i] * u.values[i] * u.values[i];
    const double w = std::exp(-t) * u3;
    sin_wt[i] = std::sin(kOmega * t);
    cos_wt[i] = std::cos(kOmega * t);
    gc[i] = w * cos_wt[i];
    gs[i] = w * sin_wt[i];
  }
  const std::vector<double> ic = cumulative_integral(gc, h);
  const std::vector<double> is = cumulative_integral(gs, h);

  GridFunction out{u.horizon, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = kTwoOverSqrt3 * (-a_star * sin_wt[i] + sin_wt[i] * ic[i] -
                                     cos_wt[i] * is[i]);
  }
  out.values[0] = 0.0;
  return out;
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
  if (a.n() != b.n() || a.horizon != b.horizon)
    throw DomainViolation("grids are not compatible");
  double d = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

std::pair<GridFunction, FixedPointReport> solve_fixed_point(
    double a_star, double horizon, std::size_t n, double tol,
    int max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  GridFunction u{horizon, std::vector<double>(n, 0.0)};
  const double target = tol * (1.0 - kContraction);

  FixedPointReport report;
  double d_prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= max_iterations; ++k) {
    GridFunction v = apply_T(u, a_star);
    const double d = sup_distance(v, u);
    if (std::isfinite(d_prev) && d_prev > 1e-14)
      report.contraction_estimate =
          std::max(report.contraction_estimate, d / d_prev);
    d_prev = d;
    u = std::move(v);
    report.iterations = k;
    if (d <= target) {
      report.final_residual = sup_distance(apply_T(u, a_star), u);
      return {std::move(u), report};
    }
  }
  throw NoConvergence("Picard iteration cap hit; grid and tol inconsistent");
}

LeftBranch::LeftBranch(GridFunction u_star, double a_star)
    : u_(std::move(u_star)), a_star_(a_star) {
  u_.validate();
}

bool LeftBranch::covers(double lo, double hi) const {
  const double slack = 1e-9 * (1.0 + u_.horizon);
  return lo >= x_min() - slack && hi <= slack;
}

double LeftBranch::u_value(double t) const {
  const std::size_t n = u_.n();
  const double h = u_.dt();
  const double slack = 1e-9 * (1.0 + u_.horizon);
  if (t < -slack || t > u_.horizon + slack)
    throw std::out_of_range("t outside the Picard horizon");
  t = std::clamp(t, 0.0, u_.horizon);
  // Cubic through the four nodes around t.
  auto j = static_cast<std::ptrdiff_t>(t / h);
  j = std::clamp<std::ptrdiff_t>(j, 1, static_cast<std::ptrdiff_t>(n) - 3);
  const double s = t / h - static_cast<double>(j);  // in [-1, 2] near [0, 1]
  const double ym = u_.values[j - 1], y0 = u_.values[j], y1 = u_.values[j + 1],
               y2 = u_.values[j + 2];
  const double wm = -s * (s - 1.0) * (s - 2.0) / 6.0;
  const double w0 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  const double w1 = -(s + 1.0) * s * (s - 2.0) / 2.0;
  const double w2 = (s + 1.0) * s * (s - 1.0) / 6.0;
  return wm * ym + w0 * y0 + w1 * y1 + w2 * y2;
}

double LeftBranch::u_derivative(double t) const {
  const std::size_t n = u_.n();
  const double h = u_.dt();
  const double slack = 1e-9 * (1.0 + u_.horizon);
  if (t < -slack || t > u_.horizon + slack)
    throw std::out_of_range("t outside the Picard horizon");
  t = std::clamp(t, 0.0, u_.horizon);
  auto j = static_cast<std::ptrdiff_t>(t / h);
  j = std::clamp<std::ptrdiff_t>(j, 1, static_cast<std::ptrdiff_t>(n) - 3);
  const double s = t / h - static_cast<double>(j);
  const double ym = u_.values[j - 1], y0 = u_.values[j], y1 = u_.values[j + 1],
               y2 = u_.values[j + 2];
  const double dm = -(3.0 * s * s - 6.0 * s + 2.0) / 6.0;
  const double d0 = (3.0 * s * s - 4.0 * s - 1.0) / 2.0;
  const double d1 = -(3.0 * s * s - 2.0 * s - 2.0) / 2.0;
  const double d2 = (3.0 * s * s - 1.0) / 6.0;
  return (dm * ym + d0 * y0 + d1 * y1 + d2 * y2) / h;
}

double LeftBranch::value(double x) const {
  return std::exp(0.5 * x) * u_value(-x);
}

double LeftBranch::derivative(double x) const {
  const double t = -x;
  return std::exp(0.5 * x) * (0.5 * u_value(t) - u_derivative(t));
}

LeftBranch extend_left(GridFunction u_star, double a_star) {
  return LeftBranch(std::move(u_star), a_star);
}

}  // namespace monopole
