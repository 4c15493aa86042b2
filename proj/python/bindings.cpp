#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monopole/pipeline.hpp"
#include "monopole/verify.hpp"

namespace py = pybind11;
using namespace monopole;

namespace {

py::dict constants_dict(const ConnectionConstants& c) {
  py::dict d;
  d["a_star"] = c.a_star;
  d["b_star"] = c.b_star;
  d["c_star"] = c.c_star;
  d["d_star"] = c.d_star;
  d["amplitude_A"] = c.amplitude_A;
  d["phase_phi"] = c.phase_phi;
  d["coeff_B"] = c.coeff_B;
  d["trunc_bc"] = c.trunc_bc;
  d["trunc_d"] = c.trunc_d;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Global solution y* of y'' - y' + y = y^3 (y(-inf)=0, y(0)=0, "
      "y(inf)=1) and the radial profile f(r) = y*(log(r/r0)) solving "
      "r^2 f'' + f = f^3.";

  py::register_exception<Error>(m, "SolverError");

  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &IntegratorConfig::rel_tol)
      .def_readwrite("abs_tol", &IntegratorConfig::abs_tol)
      .def_readwrite("max_step", &IntegratorConfig::max_step)
      .def_readwrite("max_steps", &IntegratorConfig::max_steps)
      .def_readwrite("blow_up", &IntegratorConfig::blow_up);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("bracket_lo", &SolveOptions::bracket_lo)
      .def_readwrite("bracket_hi", &SolveOptions::bracket_hi)
      .def_readwrite("slope_tol", &SolveOptions::slope_tol)
      .def_readwrite("window", &SolveOptions::window)
      .def_readwrite("ode", &SolveOptions::ode)
      .def_readwrite("manifold_x", &SolveOptions::manifold_x)
      .def_readwrite("manifold_rel_tol", &SolveOptions::manifold_rel_tol)
      .def_readwrite("horizon", &SolveOptions::horizon)
      .def_readwrite("grid_n", &SolveOptions::grid_n)
      .def_readwrite("picard_tol", &SolveOptions::picard_tol)
      .def_readwrite("trunc_bc", &SolveOptions::trunc_bc)
      .def_readwrite("trunc_d", &SolveOptions::trunc_d)
      .def_readwrite("z0", &SolveOptions::z0)
      .def_readwrite("x_left", &SolveOptions::x_left)
      .def_readwrite("x_right", &SolveOptions::x_right)
      .def_readwrite("a_star_override", &SolveOptions::a_star_override);

  py::class_<CriticalSlope>(m, "CriticalSlope")
      .def_readonly("value", &CriticalSlope::value)
      .def_readonly("bracket_lo", &CriticalSlope::bracket_lo)
      .def_readonly("bracket_hi", &CriticalSlope::bracket_hi)
      .def_readonly("iterations", &CriticalSlope::iterations);

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("a_star",
                             [](const Solution& s) { return s.a_star; })
      .def_property_readonly(
          "critical", [](const Solution& s) { return s.critical; })
      .def_property_readonly(
          "constants",
          [](const Solution& s) { return constants_dict(s.constants); })
      .def("y", [](const Solution& s, double x) { return s.model.value(x); },
           py::arg("x"), "y*(x)")
      .def(
          "dy",
          [](const Solution& s, double x) { return s.model.evaluate(x).dy; },
          py::arg("x"), "y*'(x)")
      .def(
          "f",
          [](const Solution& s, double r, double r0) {
            return evaluate_f(make_radial(s.model, r0), r);
          },
          py::arg("r"), py::arg("r0") = 1.0,
          "monopole profile f(r) = y*(log(r/r0))")
      .def(
          "p",
          [](const Solution& s, double z) { return s.phase.p_value(z); },
          py::arg("z"), "phase curve P(z) on [z0, 1]")
      .def_property_readonly(
          "p1", [](const Solution& s) { return s.phase.p_at_one(); })
      .def(
          "zeros",
          [](const Solution& s, int n) {
            py::list out;
            for (const Zero& z : find_zeros(s.model, n))
              out.append(py::make_tuple(z.x, z.asymptotic));
            return out;
          },
          py::arg("n"), "descending zeros x1..xn as (x, asymptotic) pairs")
      .def(
          "shifted",
          [](const Solution& s, int n) { return shifted_solution(s.model, n); },
          py::arg("n"), "the solution with exactly n zeros in (0, inf)")
      .def(
          "largest_zero_shift",
          [](const Solution& s, const std::function<double(double)>& fn) {
            return largest_zero_shift(s.model, fn);
          },
          py::arg("candidate"),
          "tau such that candidate(x) = y*(x - tau)")
      .def("verify", [](const Solution& s) {
        py::list out;
        for (const CheckResult& c : run_verification(s)) {
          py::dict d;
          d["name"] = c.name;
          d["measured"] = c.measured;
          d["lo"] = c.lo;
          d["hi"] = c.hi;
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      });

  py::class_<ShiftedSolution>(m, "ShiftedSolution")
      .def("__call__", &ShiftedSolution::operator(), py::arg("x"))
      .def_property_readonly("shift", &ShiftedSolution::shift)
      .def_property_readonly("zero_count", &ShiftedSolution::zero_count);

  m.def("solve", &solve, py::arg("options") = SolveOptions{},
        py::call_guard<py::gil_scoped_release>(),
        "Run the full pipeline and return the global solution");
  m.def(
      "critical_slope",
      [](double lo, double hi, double tol, double window) {
        return find_critical_slope(lo, hi, tol, window, IntegratorConfig{});
      },
      py::arg("lo") = 0.01, py::arg("hi") = 0.25, py::arg("tol") = 1e-11,
      py::arg("window") = 40.0, py::call_guard<py::gil_scoped_release>(),
      "Bisect the shooting classification for a* = y*'(0)");
}
