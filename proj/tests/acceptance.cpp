// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/pipeline.hpp"
#include "monopole/verify.hpp"
#include "support/subprocess.hpp"

using namespace monopole;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s %d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  if (!pass) ++failures;
}

bool within(double value, double center, double tol) {
  return std::isfinite(value) && std::abs(value - center) <= tol;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int main() {
  // 1. critical slope lands in [0.16871221576, 0.16871221594] at tol 1e-11
  //    in under ten seconds.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const CriticalSlope cs =
        find_critical_slope(0.01, 0.25, 1e-11, 40.0, IntegratorConfig{});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_bracket =
        cs.value > 0.16871221576 && cs.value < 0.16871221594;
    const bool tight = cs.bracket_hi - cs.bracket_lo <= 1e-11;
    report(1, in_bracket && tight && secs < 10.0,
           "critical slope a* = " + fmt(cs.value) + " in " + fmt(secs) + " s");
  }

  const Solution sol = solve();

  // 2. connection integrals against the printed reference values.
  {
    const bool b_ok = within(sol.constants.b_star, -0.0005497, 5e-7);
    const bool c_ok = within(sol.constants.c_star, 0.001939, 2e-6);
    const bool d_ok = within(sol.constants.d_star, 4.1728, 5e-3);
    report(2, b_ok && c_ok && d_ok,
           "b* = " + fmt(sol.constants.b_star) +
               ", c* = " + fmt(sol.constants.c_star) +
               ", d* = " + fmt(sol.constants.d_star));
  }

  // 3. connection formulas A, phi, B.
  {
    const bool a_ok = within(sol.constants.amplitude_A, 0.196, 1e-3);
    const bool p_ok = within(sol.constants.phase_phi, 0.0115, 5e-4);
    const bool pp_ok = within(sol.constants.phase_phi / M_PI, 0.00375, 2e-4);
    const bool b_ok = within(sol.constants.coeff_B, 4.90, 1e-2);
    report(3, a_ok && p_ok && pp_ok && b_ok,
           "A = " + fmt(sol.constants.amplitude_A) +
               ", phi = " + fmt(sol.constants.phase_phi) +
               ", phi/pi = " + fmt(sol.constants.phase_phi / M_PI) +
               ", B = " + fmt(sol.constants.coeff_B));
  }

  // 4. phase function endpoint and the cross-link to a*.
  {
    const double p1 = sol.phase.p_at_one();
    const bool v_ok = within(p1, -0.1687, 5e-4);
    const bool link_ok = std::abs(p1 + sol.a_star) <= 1e-4;
    report(4, v_ok && link_ok,
           "P(1) = " + fmt(p1) + ", |P(1) + a*| = " + fmt(std::abs(p1 + sol.a_star)));
  }

  // 5. integral identity at S = 15.
  {
    const double resid = integral_identity_check(*sol.right, sol.a_star, 15.0);
    report(5, resid <= 1e-6, "identity residual = " + fmt(resid));
  }

  const std::vector<CheckResult> checks = run_verification(sol);
  const auto find_check = [&](const std::string& name) -> const CheckResult& {
    for (const CheckResult& c : checks)
      if (c.name == name) return c;
    static CheckResult missing;
    missing.name = "missing";
    return missing;
  };

  // 6. contraction suite over 50 random pairs + fixed-point residual.
  {
    const CheckResult& ratio = find_check("contraction_ratio");
    const bool ratio_ok = ratio.pass && ratio.measured <= 0.8661;
    const bool resid_ok = sol.picard.final_residual <= 1e-10;
    report(6, ratio_ok && resid_ok,
           "contraction ratio = " + fmt(ratio.measured) +
               ", fixed-point residual = " + fmt(sol.picard.final_residual));
  }

  // 7. Picard branch vs backward integration on [-10, 0].
  {
    const CheckResult& c = find_check("cross_validation_sup");
    report(7, c.pass, "sup gap = " + fmt(c.measured));
  }

  // 8. asymptotic orders on both tails.
  {
    const CheckResult& l = find_check("left_tail_order");
    const CheckResult& r = find_check("right_tail_order");
    report(8, l.pass && r.pass,
           "left slope = " + fmt(l.measured) +
               " (want 3/2), right slope = " + fmt(r.measured) +
               " (want -2)");
  }

  // 9. zero structure: x0 = 0, asymptotic spacing, translate zero counts.
  {
    const std::vector<Zero>& zeros = sol.model.zeros();
    bool ok = zeros.size() >= 8 && zeros[0].x == 0.0;
    const double spacing = 2.0 * M_PI / std::sqrt(3.0);
    double worst_gap = 0.0;
    for (int n = 5; n <= 7 && ok; ++n) {
      const double gap = zeros[n].x - zeros[n + 1].x;
      worst_gap = std::max(worst_gap, std::abs(gap - spacing));
    }
    ok = ok && worst_gap <= 1e-3;
    std::string counts;
    for (int n = 0; n <= 5 && ok; ++n) {
      const ShiftedSolution yn = shifted_solution(sol.model, n);
      int count = 0;
      double prev = yn(1e-9);
      for (double x = 0.01; x <= 40.0; x += 0.01) {
        const double v = yn(x);
        if (prev * v < 0.0) ++count;
        prev = v;
      }
      counts += fmt(count) + " ";
      ok = ok && count == n;
    }
    report(9, ok,
           "x0 = 0, spacing gap = " + fmt(worst_gap) +
               ", translate zero counts = " + counts);
  }

  // 10. emitted figure datasets carry the qualitative features.
  {
    const std::string cli = MONOPOLE_CLI_PATH;
    const auto dir = std::filesystem::temp_directory_path();
    const auto profile_path = (dir / "acceptance_profile.csv").string();
    const auto pz_path = (dir / "acceptance_pz.csv").string();
    const auto rp = subprocess::run(cli + " profile --format csv --out " +
                                    profile_path);
    const auto rz = subprocess::run(cli + " pz --samples 300 --format csv --out " +
                                    pz_path);
    bool ok = rp.exit_code == 0 && rz.exit_code == 0;
    std::string detail;
    if (ok) {
      const auto prof = parse_csv(subprocess::slurp(profile_path));
      int sign_changes = 0;
      bool monotone_rise = true;
      double prev_neg = 0.0, prev_pos = -1.0;
      for (const auto& row : prof) {
        const double x = row[0], y = row[1];
        if (x < 0.0) {
          if (prev_neg * y < 0.0) ++sign_changes;
          prev_neg = y;
        } else if (x <= 10.0) {
          if (y < prev_pos) monotone_rise = false;
          prev_pos = y;
        }
      }
      const double y_end = prof.back()[1];
      const auto pz = parse_csv(subprocess::slurp(pz_path));
      const bool pz_rows = pz.size() == 300;
      const bool pz_start = std::abs(pz.front()[1] + pz.front()[0]) <=
                            10.0 * pz.front()[0] * pz.front()[0];
      const bool pz_end = within(pz.back()[1], -0.1687, 5e-4);
      ok = sign_changes >= 5 && monotone_rise && y_end > 0.99 &&
           pz_rows && pz_start && pz_end;
      detail = "profile sign changes = " + fmt(sign_changes) +
               ", monotone rise = " + std::string(monotone_rise ? "yes" : "no") +
               ", P rows/start/end ok = " +
               (pz_rows && pz_start && pz_end ? "yes" : "no");
    } else {
      detail = "CLI exit codes " + fmt(rp.exit_code) + ", " + fmt(rz.exit_code);
    }
    std::filesystem::remove(profile_path);
    std::filesystem::remove(pz_path);
    report(10, ok, "figure datasets: " + detail);
  }

  if (failures == 0)
    std::printf("acceptance: all criteria pass\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
