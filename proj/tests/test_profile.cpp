#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "monopole/pipeline.hpp"
#include "monopole/verify.hpp"

using namespace monopole;

namespace {

const Solution& sol() {
  static const Solution s = solve();
  return s;
}

constexpr double kSpacing = 3.6275987284684357;  // 2 pi / sqrt(3)

}  // namespace

TEST_CASE("boundary data at x = 0") {
  CHECK(sol().model.value(0.0) == 0.0);
  CHECK(std::abs(sol().model.evaluate(0.0).dy - sol().a_star) <= 1e-8);
}

TEST_CASE("tail evaluation is the closed formula") {
  const ConnectionConstants& c = sol().model.constants();
  const double y30 = sol().model.value(30.0);
  CHECK(std::abs(y30 - (1.0 - c.coeff_B * std::exp(-30.0))) <= 1e-12);

  const State far_left = sol().model.evaluate(-50.0);
  const double want = c.amplitude_A * std::exp(-25.0) *
                      std::sin(0.86602540378443864676 * -50.0 + c.phase_phi);
  CHECK(far_left.y == want);
  CHECK(std::abs(far_left.y) < 1.4e-11 * c.amplitude_A);
}

TEST_CASE("branch stitching at the origin") {
  const double jump =
      std::abs(sol().left->value(0.0) - sol().right->evaluate(0.0).y);
  CHECK(jump <= 1e-8);
  const double djump = std::abs(sol().left->derivative(0.0) -
                                sol().right->evaluate(0.0).dy);
  CHECK(djump <= 1e-8);
}

TEST_CASE("switch-point continuity") {
  const ProfileModel& m = sol().model;
  const ConnectionConstants& c = m.constants();
  const double left_gap =
      std::abs(m.left().value(m.x_left()) -
               c.amplitude_A * std::exp(0.5 * m.x_left()) *
                   std::sin(0.86602540378443864676 * m.x_left() + c.phase_phi));
  CHECK(left_gap <= 1e-8);
  const double right_gap =
      std::abs(m.right().value(m.x_right()) -
               (1.0 - c.coeff_B * std::exp(-m.x_right())));
  CHECK(right_gap <= 1e-8);
}

TEST_CASE("slope at the origin: y* ~ a* x") {
  CHECK(std::abs(sol().model.value(1e-4) / 1e-4 - sol().a_star) <= 1e-3);
}

TEST_CASE("range bounds along the profile") {
  for (double x = 0.05; x <= 25.0; x += 0.07) {
    const double y = sol().model.value(x);
    CHECK(y > 0.0);
    CHECK(y < 1.0);
  }
  for (double x = -30.0; x <= 0.0; x += 0.07)
    CHECK(std::abs(sol().model.value(x)) <= 0.5 + 1e-12);
}

TEST_CASE("defect across the core") {
  CHECK(core_defect(sol().model) <= 1e-8);
}

TEST_CASE("zero structure") {
  const std::vector<Zero>& zeros = sol().model.zeros();
  REQUIRE(zeros.size() >= 8);
  CHECK(zeros[0].x == 0.0);
  for (std::size_t i = 1; i < zeros.size(); ++i)
    CHECK(zeros[i].x < zeros[i - 1].x);

  SUBCASE("asymptotic spacing 2 pi / sqrt(3)") {
    for (int n = 5; n <= 7; ++n) {
      const double gap = zeros[n].x - zeros[n + 1].x;
      CHECK(std::abs(gap - kSpacing) <= 1e-3);
    }
  }

  SUBCASE("first zero matches the tail prediction") {
    const double predicted =
        -(2.0 / std::sqrt(3.0)) * (M_PI + sol().constants.phase_phi);
    CHECK(std::abs(zeros[1].x - predicted) <= 1e-3);
  }

  SUBCASE("find_zeros flags tail-formula locations") {
    const std::vector<Zero> zs = find_zeros(sol().model, 12);
    CHECK(zs.size() == 12);
    CHECK_FALSE(zs[0].asymptotic);  // x1, bisected
    CHECK(zs[11].asymptotic);       // beyond the Picard horizon
    for (std::size_t i = 1; i < zs.size(); ++i) CHECK(zs[i].x < zs[i - 1].x);
    // flagged locations continue the bisected sequence smoothly
    const double gap = zs[10].x - zs[11].x;
    CHECK(std::abs(gap - kSpacing) <= 1e-3);
  }

  SUBCASE("zero cap") {
    CHECK_THROWS_AS(find_zeros(sol().model, 1000000), CoverageExceeded);
    CHECK_THROWS_AS(find_zeros(sol().model, 0), std::invalid_argument);
  }
}

TEST_CASE("translates carry exactly n zeros on (0, inf)") {
  for (int n = 0; n <= 5; ++n) {
    const ShiftedSolution yn = shifted_solution(sol().model, n);
    int count = 0;
    double prev = yn(1e-9);
    for (double x = 0.01; x <= 40.0; x += 0.01) {
      const double v = yn(x);
      if (prev * v < 0.0) ++count;
      prev = v;
    }
    CHECK(count == n);
    CHECK(yn(45.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(shifted_solution(sol().model, 0).shift() == 0.0);
  CHECK_THROWS_AS(shifted_solution(sol().model, 50), CoverageExceeded);
}

TEST_CASE("largest-zero shift recovers translations") {
  const ProfileModel& m = sol().model;
  CHECK(std::abs(largest_zero_shift(m, [&](double x) { return m.value(x); })) <=
        1e-9);
  const double tau = largest_zero_shift(
      m, [&](double x) { return m.value(x - 2.5); });
  CHECK(tau == doctest::Approx(2.5).epsilon(1e-9));

  const ShiftedSolution y3 = shifted_solution(m, 3);
  const double tau3 =
      largest_zero_shift(m, [&](double x) { return y3(x); });
  CHECK(tau3 == doctest::Approx(-m.zeros()[3].x).epsilon(1e-9));

  SUBCASE("no zero in the window") {
    CHECK_THROWS_AS(
        largest_zero_shift(m, [](double x) { return 1.0 + x * x; }),
        NoZeroFound);
  }
  SUBCASE("zero present but not a translate of y*") {
    CHECK_THROWS_AS(
        largest_zero_shift(m, [](double x) { return std::tanh(x - 3.0); }),
        NotASolution);
  }
}

TEST_CASE("radial profile f(r) = y*(log(r/r0))") {
  const RadialProfile radial = make_radial(sol().model, 2.0);
  CHECK(evaluate_f(radial, 2.0) == 0.0);

  SUBCASE("large r: r (1 - f) / r0 approaches B") {
    const double r = 2.0 * std::exp(10.0);
    const double val = r * (1.0 - evaluate_f(radial, r)) / radial.r0;
    CHECK(std::abs(val - sol().constants.coeff_B) <=
          0.01 * sol().constants.coeff_B);
  }

  SUBCASE("small r: sign oscillation under a sqrt(r) envelope") {
    int sign_changes = 0;
    double prev = evaluate_f(radial, 2.0 * std::exp(-22.0));
    for (double x = -22.0; x <= -15.0; x += 0.05) {
      const double f = evaluate_f(radial, 2.0 * std::exp(x));
      if (prev * f < 0.0) ++sign_changes;
      prev = f;
      CHECK(std::abs(f) <=
            1.01 * sol().constants.amplitude_A * std::exp(0.5 * x));
    }
    CHECK(sign_changes >= 2);
  }

  SUBCASE("near r0: f ~ a* log(r/r0)") {
    for (double dx : {-1e-4, 1e-4}) {
      const double r = 2.0 * std::exp(dx);
      CHECK(std::abs(evaluate_f(radial, r) / dx - sol().a_star) <= 1e-3);
    }
  }

  SUBCASE("scale covariance is exact") {
    const RadialProfile doubled = make_radial(sol().model, 4.0);
    for (double r : {0.001, 0.7, 5.0, 111.0})
      CHECK(evaluate_f(doubled, r) == evaluate_f(radial, r / 2.0));
  }

  SUBCASE("nonpositive radii are refused") {
    CHECK_THROWS_AS(evaluate_f(radial, 0.0), NonpositiveRadius);
    CHECK_THROWS_AS(evaluate_f(radial, -1.0), NonpositiveRadius);
    CHECK_THROWS_AS(make_radial(sol().model, 0.0), NonpositiveRadius);
  }
}

TEST_CASE("inconsistent branches are rejected") {
  // A Picard branch built from a wrong slope disagrees with the manifold
  // orbit at the origin.
  auto [u_bad, rep] = solve_fixed_point(0.2, 20.0, 20001, 1e-10);
  auto bad_left =
      std::make_shared<const LeftBranch>(extend_left(std::move(u_bad), 0.2));
  ProfileOptions opts;
  opts.x_left = -15.0;
  CHECK_THROWS_AS(
      build_profile(sol().constants, bad_left,
                    std::shared_ptr<const RightBranch>(sol().right), opts),
      InconsistentInputs);
}

TEST_CASE("full verification suite passes") {
  const std::vector<CheckResult> checks = run_verification(sol());
  CHECK(checks.size() >= 9);
  for (const CheckResult& c : checks) {
    INFO(c.name, " measured=", c.measured, " bounds=[", c.lo, ",", c.hi, "]");
    CHECK(c.pass);
  }
}

TEST_CASE("injected wrong a* trips the identity check") {
  SolveOptions opts;
  opts.a_star_override = sol().a_star + 1e-3;
  const Solution bad = solve(opts);
  const std::vector<CheckResult> checks = run_verification(bad);
  bool identity_failed = false;
  for (const CheckResult& c : checks)
    if (c.name == "integral_identity" && !c.pass) identity_failed = true;
  CHECK(identity_failed);
}
