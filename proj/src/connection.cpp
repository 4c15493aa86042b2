#include "monopole/connection.hpp"

#include <cmath>
#include <vector>

#include "monopole/quadrature.hpp"

namespace monopole {

namespace {

constexpr double kOmega = 0.86602540378443864676;  // sqrt(3)/2
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double weighted_cube_integral(const LeftBranch& left, double trunc,
                              bool cosine, int cells_per_unit) {
  if (!(trunc > 0.0)) throw std::invalid_argument("trunc must be positive");
  if (cells_per_unit < 1)
    throw std::invalid_argument("cells_per_unit must be positive");
  if (!left.covers(-trunc, 0.0))
    throw InsufficientDomain("left branch does not reach the truncation depth");
  const auto f = [&](double s) {
    const double y = left.value(s);
    const double k = cosine ? std::cos(kOmega * s) : std::sin(kOmega * s);
    return std::exp(-0.5 * s) * k * y * y * y;
  };
  return composite_simpson(f, -trunc, 0.0,
                           static_cast<int>(trunc * cells_per_unit));
}

}  // namespace

double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int n_cells) {
  if (n_cells < 2) n_cells = 2;
  if (n_cells % 2) ++n_cells;
  const double h = (b - a) / n_cells;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n_cells; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n_cells; i += 2) even += f(a + i * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

double compute_b_star(const LeftBranch& left, double trunc,
                      int cells_per_unit) {
  return weighted_cube_integral(left, trunc, true, cells_per_unit);
}

double compute_c_star(const LeftBranch& left, double trunc,
                      int cells_per_unit) {
  return weighted_cube_integral(left, trunc, false, cells_per_unit);
}

double compute_d_star(const RightBranch& right, double trunc,
                      int cells_per_unit) {
  if (!(trunc > 0.0)) throw std::invalid_argument("trunc must be positive");
  if (cells_per_unit < 1)
    throw std::invalid_argument("cells_per_unit must be positive");
  if (!right.covers(0.0, trunc))
    throw InsufficientDomain("right branch does not reach the truncation depth");
  const auto f = [&](double s) {
    const double z = right.z_value(s);
    return std::exp(s) * (z * z - z * z * z / 3.0);
  };
  return composite_simpson(f, 0.0, trunc,
                           static_cast<int>(trunc * cells_per_unit));
}

ConnectionConstants assemble(double a_star, double b_star, double c_star,
                             double d_star, double trunc_bc, double trunc_d) {
  if (!(a_star - b_star > 0.0))
    throw PhaseQuadrant("a* - b* <= 0: outside the principal phase branch");
  ConnectionConstants c;
  c.a_star = a_star;
  c.b_star = b_star;
  c.c_star = c_star;
  c.d_star = d_star;
  c.amplitude_A = (2.0 / std::sqrt(3.0)) * std::hypot(a_star - b_star, c_star);
  c.phase_phi = std::atan2(c_star, a_star - b_star);
  c.coeff_B = (2.0 + a_star) / 3.0 + d_star;
  c.trunc_bc = trunc_bc;
  c.trunc_d = trunc_d;
  return c;
}

OrderReport verify_left_asymptotic(const LeftBranch& left, double amplitude_a,
                                   double phase_phi) {
  constexpr double kLo = -20.0, kHi = -8.0, kStep = 1e-3;
  if (!left.covers(kLo, kHi))
    throw InsufficientDomain("left branch does not cover [-20, -8]");
  const auto residual = [&](double x) {
    return std::abs(left.value(x) - amplitude_a * std::exp(0.5 * x) *
                                        std::sin(kOmega * x + phase_phi));
  };
  // |R| at its local maxima: the envelope of the oscillatory remainder.
  std::vector<double> xs, ls;
  double prev2 = residual(kLo), prev = residual(kLo + kStep);
  for (double x = kLo + 2 * kStep; x <= kHi; x += kStep) {
    const double r = residual(x);
    if (prev > prev2 && prev > r && prev > 0.0) {
      xs.push_back(x - kStep);
      ls.push_back(std::log(prev));
    }
    prev2 = prev;
    prev = r;
  }
  if (xs.size() < 3)
    throw InsufficientDomain("too few envelope extrema for a slope fit");
  return {fit_slope(xs, ls), static_cast<int>(xs.size()), kLo, kHi};
}

OrderReport verify_right_asymptotic(const RightBranch& right, double coeff_b) {
  constexpr double kLo = 6.0, kHi = 14.0, kStep = 0.01;
  if (!right.covers(0.0, kHi) || right.x_max() < 20.0 - 1e-9)
    throw InsufficientDomain("right branch does not cover [5, 20]");
  std::vector<double> xs, ls;
  for (double x = kLo; x <= kHi + 1e-12; x += kStep) {
    const double q = std::abs(right.z_value(x) - coeff_b * std::exp(-x));
    if (q > 0.0) {
      xs.push_back(x);
      ls.push_back(std::log(q));
    }
  }
  if (xs.size() < 3)
    throw InsufficientDomain("residual vanished over the fit window");
  return {fit_slope(xs, ls), static_cast<int>(xs.size()), kLo, kHi};
}

double integral_identity_check(const RightBranch& right, double a_star,
                               double trunc) {
  if (!right.covers(0.0, trunc))
    throw InsufficientDomain("right branch does not reach the truncation depth");
  const auto f = [&](double s) {
    const double z = right.z_value(s);
    return std::exp(-2.0 * s) * (-3.0 * z * z + z * z * z);
  };
  const double value =
      composite_simpson(f, 0.0, trunc, static_cast<int>(trunc * 1000.0));
  return std::abs(value - (a_star - 1.0));
}

}  // namespace monopole
