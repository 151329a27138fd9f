#pragma once

#include <functional>

namespace cat {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance
/// abs_tol. Throws QuadratureError when the subdivision depth is exhausted
/// before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

}  // namespace cat
