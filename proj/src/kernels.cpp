#include "cat/kernels.hpp"

#include <cmath>

namespace cat {

AnalyticReference constant_kernel_reference() {
    AnalyticReference ref;
    ref.density = [](double t, double x) {
        const double s = t + 2.0;
        return 4.0 / (s * s) * std::exp(-2.0 * x / s);
    };
    ref.moment = [](double t, int order) {
        return order == 0 ? 2.0 / (t + 2.0) : 1.0;
    };
    return ref;
}

std::function<double(double)> exponential_initial_density() {
    return [](double x) { return std::exp(-x); };
}

}  // namespace cat
