#include "monopole/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monopole {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33,
                 kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// b - b_hat, applied to k1..k7.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

constexpr double kEventTolX = 1e-13;

using Vec2 = std::array<double, 2>;

bool finite2(const Vec2& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]);
}

double rms_scaled(const Vec2& v, const Vec2& sc) {
  const double a = v[0] / sc[0];
  const double b = v[1] / sc[1];
  return std::sqrt(0.5 * (a * a + b * b));
}

struct Quintic {
  // Polynomial in theta = (x - x0) / h for the y component, built from
  // values, first and second derivatives at both endpoints.
  double y0, d0, a0, c3, c4, c5, h;

  explicit Quintic(const StepRecord& s)
      : y0(s.u0[0]), h(s.x1 - s.x0) {
    d0 = s.u0[1] * h;
    a0 = s.f0[1] * h * h;
    const double d1 = s.u1[1] * h;
    const double a1 = s.f1[1] * h * h;
    const double q1 = s.u1[0] - y0 - d0 - 0.5 * a0;
    const double q2 = d1 - d0 - a0;
    const double q3 = a1 - a0;
    c5 = 6.0 * q1 - 3.0 * q2 + 0.5 * q3;
    c4 = -15.0 * q1 + 7.0 * q2 - q3;
    c3 = 10.0 * q1 - 4.0 * q2 + 0.5 * q3;
  }

  double value(double th) const {
    return y0 + th * (d0 + th * (0.5 * a0 + th * (c3 + th * (c4 + th * c5))));
  }
  double deriv(double th) const {
    return (d0 + th * (a0 + th * (3 * c3 + th * (4 * c4 + th * 5 * c5)))) / h;
  }
  double deriv2(double th) const {
    return (a0 + th * (6 * c3 + th * (12 * c4 + th * 20 * c5))) / (h * h);
  }
};

struct Cubic {
  // Hermite cubic in theta for one component.
  double yl, g, c2, c3, h;

  Cubic(const StepRecord& s, int i) : yl(s.u0[i]), h(s.x1 - s.x0) {
    g = s.f0[i] * h;
    const double gr = s.f1[i] * h;
    const double dy = s.u1[i] - yl;
    c2 = 3.0 * dy - 2.0 * g - gr;
    c3 = -2.0 * dy + g + gr;
  }

  double value(double th) const { return yl + th * (g + th * (c2 + th * c3)); }
  double deriv(double th) const { return (g + th * (2 * c2 + th * 3 * c3)) / h; }
};

}  // namespace

bool is_finite(const State& s) {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.dy);
}

std::array<double, 2> rhs_forward(const State& s) {
  return {s.dy, s.dy - s.y + s.y * s.y * s.y};
}

std::array<double, 2> rhs_z(const State& s) {
  const double z = s.y;
  return {s.dy, s.dy + 2.0 * z - 3.0 * z * z + z * z * z};
}

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (!(max_step > 0.0))
    throw std::invalid_argument("max_step must be positive");
  if (max_steps < 1)
    throw std::invalid_argument("max_steps must be at least 1");
  if (!(blow_up > 0.0))
    throw std::invalid_argument("blow_up must be positive");
}

Trajectory::Trajectory(std::vector<StepRecord> steps, Structure structure,
                       Status status, State last)
    : steps_(std::move(steps)),
      structure_(structure),
      status_(status),
      last_(last) {
  if (steps_.empty()) throw std::logic_error("empty trajectory");
}

bool Trajectory::covers(double lo, double hi) const {
  const double slack = 1e-9 * (1.0 + x_max() - x_min());
  return x_min() <= lo + slack && x_max() >= hi - slack;
}

const StepRecord& Trajectory::locate(double x) const {
  const double slack = 1e-9 * (1.0 + x_max() - x_min());
  if (x < x_min() - slack || x > x_max() + slack)
    throw std::out_of_range("abscissa outside trajectory domain");
  auto it = std::upper_bound(
      steps_.begin(), steps_.end(), x,
      [](double v, const StepRecord& s) { return v < s.x0; });
  if (it != steps_.begin()) --it;
  return *it;
}

State Trajectory::evaluate(double x) const {
  const StepRecord& s = locate(x);
  const double th = (x - s.x0) / (s.x1 - s.x0);
  if (structure_ == Structure::SecondOrder) {
    const Quintic q(s);
    return {x, q.value(th), q.deriv(th)};
  }
  return {x, Cubic(s, 0).value(th), Cubic(s, 1).value(th)};
}

double Trajectory::value(double x) const { return evaluate(x).y; }

double Trajectory::derivative(double x) const {
  const StepRecord& s = locate(x);
  const double th = (x - s.x0) / (s.x1 - s.x0);
  if (structure_ == Structure::SecondOrder) return Quintic(s).deriv(th);
  return Cubic(s, 0).deriv(th);
}

double Trajectory::second_derivative(double x) const {
  const StepRecord& s = locate(x);
  const double th = (x - s.x0) / (s.x1 - s.x0);
  if (structure_ == Structure::SecondOrder) return Quintic(s).deriv2(th);
  return Cubic(s, 1).deriv(th);
}

Trajectory integrate(const Rhs& rhs, const State& init, double x_end,
                     const IntegratorConfig& cfg, Structure structure) {
  cfg.validate();
  if (!is_finite(init)) throw NonFiniteState("non-finite initial state");
  if (x_end == init.x)
    throw std::invalid_argument("x_end must differ from init.x");

  const double dir = x_end > init.x ? 1.0 : -1.0;
  const double span = std::abs(x_end - init.x);
  const double eps = std::numeric_limits<double>::epsilon();

  double x = init.x;
  Vec2 u{init.y, init.dy};
  auto eval = [&rhs](double xx, const Vec2& v) {
    return rhs(State{xx, v[0], v[1]});
  };
  Vec2 k1 = eval(x, u);
  if (!finite2(k1)) throw NonFiniteState("non-finite vector field at init");

  // Initial step-size guess (Hairer-style, one trial Euler step).
  double h;
  {
    const Vec2 sc{cfg.abs_tol + cfg.rel_tol * std::abs(u[0]),
                  cfg.abs_tol + cfg.rel_tol * std::abs(u[1])};
    const double d0 = rms_scaled(u, sc);
    const double d1 = rms_scaled(k1, sc);
    double h0 = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min({h0, span, cfg.max_step});
    const Vec2 u1{u[0] + dir * h0 * k1[0], u[1] + dir * h0 * k1[1]};
    const Vec2 k2 = eval(x + dir * h0, u1);
    double d2 = 0.0;
    if (finite2(k2))
      d2 = rms_scaled({k2[0] - k1[0], k2[1] - k1[1]}, sc) / h0;
    const double dm = std::max(d1, d2);
    const double h1 =
        dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    h = std::min({100.0 * h0, h1, span, cfg.max_step});
  }

  std::vector<StepRecord> steps;
  steps.reserve(256);
  Trajectory::Status status = Trajectory::Status::Completed;
  long attempts = 0;
  bool done = false;

  while (!done) {
    if (++attempts > cfg.max_steps)
      throw StepCountExceeded("step budget exhausted before reaching x_end");
    h = std::min(h, cfg.max_step);
    bool landing = false;
    if (h >= std::abs(x_end - x) * (1.0 - 1e-12)) {
      h = std::abs(x_end - x);
      landing = true;
    }
    if (h <= 4.0 * eps * std::max(std::abs(x), 1.0))
      throw StepUnderflow("required step below machine resolution");

    const double hs = dir * h;
    const Vec2 k2 = eval(x + kC2 * hs, {u[0] + hs * kA21 * k1[0],
                                        u[1] + hs * kA21 * k1[1]});
    const Vec2 k3 = eval(x + kC3 * hs,
                         {u[0] + hs * (kA31 * k1[0] + kA32 * k2[0]),
                          u[1] + hs * (kA31 * k1[1] + kA32 * k2[1])});
    const Vec2 k4 =
        eval(x + kC4 * hs,
             {u[0] + hs * (kA41 * k1[0] + kA42 * k2[0] + kA43 * k3[0]),
              u[1] + hs * (kA41 * k1[1] + kA42 * k2[1] + kA43 * k3[1])});
    const Vec2 k5 = eval(x + kC5 * hs,
                         {u[0] + hs * (kA51 * k1[0] + kA52 * k2[0] +
                                       kA53 * k3[0] + kA54 * k4[0]),
                          u[1] + hs * (kA51 * k1[1] + kA52 * k2[1] +
                                       kA53 * k3[1] + kA54 * k4[1])});
    const Vec2 k6 =
        eval(x + hs, {u[0] + hs * (kA61 * k1[0] + kA62 * k2[0] + kA63 * k3[0] +
                                   kA64 * k4[0] + kA65 * k5[0]),
                      u[1] + hs * (kA61 * k1[1] + kA62 * k2[1] + kA63 * k3[1] +
                                   kA64 * k4[1] + kA65 * k5[1])});
    const Vec2 unew{
        u[0] + hs * (kB1 * k1[0] + kB3 * k3[0] + kB4 * k4[0] + kB5 * k5[0] +
                     kB6 * k6[0]),
        u[1] + hs * (kB1 * k1[1] + kB3 * k3[1] + kB4 * k4[1] + kB5 * k5[1] +
                     kB6 * k6[1])};
    const double xnew = landing ? x_end : x + hs;
    Vec2 k7{0, 0};
    double err = std::numeric_limits<double>::infinity();
    if (finite2(k2) && finite2(k3) && finite2(k4) && finite2(k5) &&
        finite2(k6) && finite2(unew)) {
      k7 = eval(xnew, unew);
      if (finite2(k7)) {
        const Vec2 e{hs * (kE1 * k1[0] + kE3 * k3[0] + kE4 * k4[0] +
                           kE5 * k5[0] + kE6 * k6[0] + kE7 * k7[0]),
                     hs * (kE1 * k1[1] + kE3 * k3[1] + kE4 * k4[1] +
                           kE5 * k5[1] + kE6 * k6[1] + kE7 * k7[1])};
        const Vec2 sc{cfg.abs_tol + cfg.rel_tol * std::max(std::abs(u[0]),
                                                           std::abs(unew[0])),
                      cfg.abs_tol + cfg.rel_tol * std::max(std::abs(u[1]),
                                                           std::abs(unew[1]))};
        err = rms_scaled(e, sc);
      }
    }

    if (err <= 1.0) {
      StepRecord rec;
      if (dir > 0)
        rec = {x, xnew, u, unew, k1, k7};
      else
        rec = {xnew, x, unew, u, k7, k1};
      steps.push_back(rec);
      x = xnew;
      u = unew;
      k1 = k7;
      if (std::abs(u[0]) > cfg.blow_up) {
        status = Trajectory::Status::Blowup;
        done = true;
      } else if (landing) {
        done = true;
      }
      const double fac =
          std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-30),
                                                     -0.2)));
      h *= fac;
    } else {
      h *= std::isfinite(err)
               ? std::max(0.2, 0.9 * std::pow(err, -0.2))
               : 0.25;
    }
  }

  if (dir < 0) std::reverse(steps.begin(), steps.end());
  return Trajectory(std::move(steps), structure, status,
                    State{x, u[0], u[1]});
}

double find_event(const Trajectory& traj,
                  const std::function<double(const State&)>& predicate) {
  for (const StepRecord& s : traj.steps()) {
    double a = s.x0, b = s.x1;
    double pa = predicate(traj.evaluate(a));
    const double pb = predicate(traj.evaluate(b));
    if (pb == 0.0 && pa != 0.0) return b;
    if (!(pa * pb < 0.0)) continue;
    while (b - a > kEventTolX) {
      const double m = 0.5 * (a + b);
      const double pm = predicate(traj.evaluate(m));
      if (pa * pm <= 0.0) {
        b = m;
      } else {
        a = m;
        pa = pm;
      }
    }
    return 0.5 * (a + b);
  }
  throw NoSignChange("predicate does not change sign along the trajectory");
}

}  // namespace monopole
