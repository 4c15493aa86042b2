#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monopole/pipeline.hpp"
#include "monopole/verify.hpp"

namespace {

using nlohmann::json;

// Shortest decimal form that parses back to the same double.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw monopole::Error("cannot open output file: " + out_path);
  f << text;
}

std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) s += ',';
    s += columns[i];
  }
  s += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += fmt(row[i]);
    }
    s += '\n';
  }
  return s;
}

std::string table_output(const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows,
                         const std::string& format, json extra = {}) {
  if (format == "csv") return to_csv(columns, rows);
  json j;
  j["columns"] = columns;
  j["rows"] = rows;
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j.dump(2) + "\n";
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos)
    throw monopole::Error("range must look like LO:HI");
  return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
}

struct CommonFlags {
  double tol = 1e-11;
  double window = 40.0;
  double horizon = 30.0;
  double trunc_bc = 30.0;
  double trunc_d = 15.0;
  double z0 = 1e-40;
  std::optional<double> a_star;
  std::string format = "json";
  std::string out;
};

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out, "output path (default: stdout)");
}

void add_solver_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol", f.tol, "bisection tolerance for a*")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--window", f.window, "shooting window")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--horizon", f.horizon, "Picard horizon T")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trunc-bc", f.trunc_bc, "truncation depth for b*, c*")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trunc-d", f.trunc_d, "truncation depth for d*")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--z0", f.z0, "start of the phase curve")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--a-star", f.a_star,
                  "override the working a* (sensitivity probes)");
}

monopole::SolveOptions make_options(const CommonFlags& f) {
  monopole::SolveOptions opts;
  opts.slope_tol = f.tol;
  opts.window = f.window;
  opts.horizon = f.horizon;
  opts.grid_n = static_cast<std::size_t>(f.horizon * 1000.0) + 1;
  opts.trunc_bc = std::min(f.trunc_bc, f.horizon);
  opts.trunc_d = f.trunc_d;
  opts.z0 = f.z0;
  opts.a_star_override = f.a_star;
  opts.x_left = std::max(-20.0, -f.horizon + 1.0);
  return opts;
}

int cmd_critical_slope(const CommonFlags& f,
                       const std::vector<double>& bracket) {
  monopole::IntegratorConfig cfg;
  double lo = 0.01, hi = 0.25;
  if (!bracket.empty()) {
    lo = bracket[0];
    hi = bracket[1];
  }
  const monopole::CriticalSlope cs =
      monopole::find_critical_slope(lo, hi, f.tol, f.window, cfg);
  if (f.format == "csv") {
    write_output(to_csv({"a_star", "bracket_lo", "bracket_hi", "iterations"},
                        {{cs.value, cs.bracket_lo, cs.bracket_hi,
                          static_cast<double>(cs.iterations)}}),
                 f.out);
  } else {
    json j;
    j["a_star"] = cs.value;
    j["bracket_lo"] = cs.bracket_lo;
    j["bracket_hi"] = cs.bracket_hi;
    j["iterations"] = cs.iterations;
    j["tol"] = f.tol;
    j["window"] = f.window;
    write_output(j.dump(2) + "\n", f.out);
  }
  return 0;
}

int cmd_constants(const CommonFlags& f) {
  const monopole::Solution sol = monopole::solve(make_options(f));
  const monopole::ConnectionConstants& c = sol.constants;
  const std::vector<std::string> cols{"a_star",      "b_star",   "c_star",
                                      "d_star",      "amplitude_A",
                                      "phase_phi",   "coeff_B",  "trunc_bc",
                                      "trunc_d"};
  const std::vector<std::vector<double>> row{
      {c.a_star, c.b_star, c.c_star, c.d_star, c.amplitude_A, c.phase_phi,
       c.coeff_B, c.trunc_bc, c.trunc_d}};
  if (f.format == "csv") {
    write_output(to_csv(cols, row), f.out);
  } else {
    json j;
    for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = row[0][i];
    write_output(j.dump(2) + "\n", f.out);
  }
  return 0;
}

int cmd_profile(const CommonFlags& f, const std::string& range, double step) {
  auto [lo, hi] = parse_range(range);
  if (!(step > 0.0) || !(hi > lo))
    throw monopole::Error("profile needs hi > lo and step > 0");
  const monopole::Solution sol = monopole::solve(make_options(f));
  std::vector<std::vector<double>> rows;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  rows.reserve(count + 1);
  for (long i = 0; i <= count; ++i) {
    double x = lo + step * static_cast<double>(i);
    if (std::abs(x) < 1e-6 * step) x = 0.0;  // grids through the origin
    const monopole::State s = sol.model.evaluate(x);
    rows.push_back({x, s.y, s.dy});
  }
  write_output(table_output({"x", "y", "dy"}, rows, f.format), f.out);
  return 0;
}

int cmd_pz(const CommonFlags& f, double z0, int samples) {
  if (samples < 2) throw monopole::Error("pz needs at least 2 samples");
  const monopole::PhaseCurve curve = monopole::solve_P(z0);
  std::vector<std::vector<double>> rows;
  rows.reserve(samples);
  const double lw = std::log(z0);
  for (int i = 0; i < samples; ++i) {
    // log-spaced from z0 up to exactly 1
    const double t = static_cast<double>(i) / (samples - 1);
    const double z = i + 1 == samples ? 1.0 : std::exp(lw * (1.0 - t));
    rows.push_back({z, curve.p_value(z)});
  }
  write_output(table_output({"z", "P"}, rows, f.format), f.out);
  return 0;
}

int cmd_radial(const CommonFlags& f, double r0, const std::string& range,
               int samples) {
  if (!(r0 > 0.0)) throw monopole::NonpositiveRadius("r0 must be positive");
  if (samples < 2) throw monopole::Error("radial needs at least 2 samples");
  double lo = 1e-3 * r0, hi = 1e3 * r0;
  if (!range.empty()) std::tie(lo, hi) = parse_range(range);
  if (!(lo > 0.0 && hi > lo))
    throw monopole::NonpositiveRadius("radial range must satisfy 0 < lo < hi");

  const monopole::Solution sol = monopole::solve(make_options(f));
  const monopole::RadialProfile radial = monopole::make_radial(sol.model, r0);
  std::vector<std::vector<double>> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const double r = lo * std::pow(hi / lo, t);
    rows.push_back({r, monopole::evaluate_f(radial, r)});
  }
  // Asymptotic regimes: sqrt(r)-oscillation near 0, a* log(r/r0) near r0,
  // 1 - B r0 / r at infinity.
  json extra;
  extra["r0"] = r0;
  extra["asymptotics"] = {
      {"small_r",
       {{"amplitude_A", sol.constants.amplitude_A},
        {"phase_phi", sol.constants.phase_phi}}},
      {"near_r0", {{"a_star", sol.constants.a_star}}},
      {"large_r", {{"coeff_B", sol.constants.coeff_B}}}};
  write_output(table_output({"r", "f"}, rows, f.format, extra), f.out);
  return 0;
}

int cmd_verify(const CommonFlags& f, bool as_json, bool format_given) {
  const monopole::Solution sol = monopole::solve(make_options(f));
  const std::vector<monopole::CheckResult> checks =
      monopole::run_verification(sol);
  bool all_pass = true;
  // One text line per check by default; --json (or an explicit
  // --format json) switches to one object per check.
  if (as_json || (format_given && f.format == "json")) {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name},
                     {"measured", c.measured},
                     {"lo", c.lo},
                     {"hi", c.hi},
                     {"pass", c.pass}});
      all_pass = all_pass && c.pass;
    }
    write_output(arr.dump(2) + "\n", f.out);
  } else {
    std::string text;
    for (const auto& c : checks) {
      text += c.pass ? "PASS " : "FAIL ";
      text += c.name + " measured=" + fmt(c.measured) + " bounds=[" +
              fmt(c.lo) + ", " + fmt(c.hi) + "]\n";
      all_pass = all_pass && c.pass;
    }
    write_output(text, f.out);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Global solution of y'' - y' + y = y^3 (y(-inf)=0, y(0)=0, y(inf)=1) "
      "and the radial profile r^2 f'' + f = f^3"};
  app.require_subcommand(1);

  CommonFlags f;
  std::vector<double> bracket;
  std::string range = "-25:10";
  std::string radial_range;
  double step = 0.01;
  double r0 = 1.0;
  int pz_samples = 400;
  int radial_samples = 601;
  bool verify_json = false;

  CLI::App* slope =
      app.add_subcommand("critical-slope", "bisect for a* = y*'(0)");
  add_solver_flags(slope, f);
  add_output_flags(slope, f);
  slope->add_option("--bracket", bracket, "starting bracket LO HI")
      ->expected(2);

  CLI::App* constants =
      app.add_subcommand("constants", "connection constants and formulas");
  add_solver_flags(constants, f);
  add_output_flags(constants, f);

  CLI::App* profile =
      app.add_subcommand("profile", "table of (x, y*, y*') over a range");
  add_solver_flags(profile, f);
  add_output_flags(profile, f);
  profile->add_option("--range", range, "x range LO:HI (default -25:10)");
  profile->add_option("--step", step, "x spacing")->check(CLI::PositiveNumber);

  CLI::App* pz = app.add_subcommand("pz", "table of (z, P(z)) on [z0, 1]");
  add_output_flags(pz, f);
  pz->add_option("--z0", f.z0, "start of the phase curve")
      ->check(CLI::PositiveNumber);
  pz->add_option("--samples", pz_samples, "row count");

  CLI::App* radial =
      app.add_subcommand("radial", "table of (r, f(r)) on a log-spaced grid");
  add_solver_flags(radial, f);
  add_output_flags(radial, f);
  radial->add_option("--r0", r0, "largest zero radius")
      ->check(CLI::PositiveNumber);
  radial->add_option("--range", radial_range, "r range LO:HI");
  radial->add_option("--samples", radial_samples, "row count");

  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant suite, one line each");
  add_solver_flags(verify, f);
  add_output_flags(verify, f);
  verify->add_flag("--json", verify_json, "emit one JSON object per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (slope->parsed()) return cmd_critical_slope(f, bracket);
    if (constants->parsed()) return cmd_constants(f);
    if (profile->parsed()) return cmd_profile(f, range, step);
    if (pz->parsed()) return cmd_pz(f, f.z0, pz_samples);
    if (radial->parsed()) return cmd_radial(f, r0, radial_range, radial_samples);
    if (verify->parsed())
      return cmd_verify(f, verify_json, verify->count("--format") > 0);
  } catch (const monopole::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
