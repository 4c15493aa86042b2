#pragma once

#include <functional>

namespace monopole {

/// Composite Simpson with n_cells subintervals (rounded up to even).
double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int n_cells);

}  // namespace monopole
