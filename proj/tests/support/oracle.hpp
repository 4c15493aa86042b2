#pragma once

// Test-only oracle: classical fixed-step RK4 on the planar system, kept
// independent of the library's integrator path.

#include <cmath>
#include <functional>
#include <utility>

namespace oracle {

struct Pt {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

using Field = std::function<std::pair<double, double>(double, double, double)>;

inline std::pair<double, double> cubic(double, double y, double dy) {
  return {dy, dy - y + y * y * y};
}

inline std::pair<double, double> linear(double, double y, double dy) {
  return {dy, dy - y};
}

inline Pt rk4_step(const Field& f, const Pt& s, double h) {
  const auto [k1y, k1d] = f(s.x, s.y, s.dy);
  const auto [k2y, k2d] =
      f(s.x + 0.5 * h, s.y + 0.5 * h * k1y, s.dy + 0.5 * h * k1d);
  const auto [k3y, k3d] =
      f(s.x + 0.5 * h, s.y + 0.5 * h * k2y, s.dy + 0.5 * h * k2d);
  const auto [k4y, k4d] = f(s.x + h, s.y + h * k3y, s.dy + h * k3d);
  return {s.x + h, s.y + h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y),
          s.dy + h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d)};
}

/// Advance to x_end with |h| = step (sign taken from the direction); the
/// last step is shortened to land exactly.
inline Pt advance(const Field& f, Pt s, double x_end, double step) {
  const double dir = x_end > s.x ? 1.0 : -1.0;
  while (dir * (x_end - s.x) > 1e-15) {
    const double h = dir * std::min(step, dir * (x_end - s.x));
    s = rk4_step(f, s, h);
  }
  return s;
}

/// Walk toward x_end until pred flips sign; then refine by stepping from the
/// bracket start with step/64. Returns the refined abscissa (NaN: no flip).
inline double first_sign_change(const Field& f, Pt s, double x_end,
                                double step,
                                const std::function<double(const Pt&)>& pred) {
  const double dir = x_end > s.x ? 1.0 : -1.0;
  const double h_coarse = dir * std::abs(step);
  double p_prev = pred(s);
  Pt prev = s;
  while (dir * (x_end - s.x) > 0.0) {
    s = rk4_step(f, s, h_coarse);
    const double p = pred(s);
    if (p_prev * p <= 0.0 && p_prev != 0.0) {
      Pt fine = prev;
      double pf = p_prev;
      const double h = h_coarse / 64.0;
      while (dir * (s.x - fine.x) > 0.0) {
        const Pt next = rk4_step(f, fine, h);
        const double pn = pred(next);
        if (pf * pn <= 0.0) return 0.5 * (fine.x + next.x);
        fine = next;
        pf = pn;
      }
      return s.x;
    }
    p_prev = p;
    prev = s;
  }
  return std::nan("");
}

}  // namespace oracle
