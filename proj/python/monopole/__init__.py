"""Global solution of y'' - y' + y = y^3 and the monopole profile f(r).

The heavy lifting lives in the C++ extension; `solve()` runs the whole
pipeline (shooting bisection, stable-manifold orbit, Picard fixed point,
connection constants, phase curve) and returns a `Solution`.
"""

from ._core import (
    CriticalSlope,
    IntegratorConfig,
    ShiftedSolution,
    Solution,
    SolveOptions,
    SolverError,
    critical_slope,
    solve,
)

__all__ = [
    "CriticalSlope",
    "IntegratorConfig",
    "ShiftedSolution",
    "Solution",
    "SolveOptions",
    "SolverError",
    "critical_slope",
    "solve",
]
