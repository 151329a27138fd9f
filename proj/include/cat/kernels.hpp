#pragma once

#include <functional>
#include <string>
#include <utility>

namespace cat {

/// Symmetric coagulation rate beta(x, y) >= 0.
///
/// Built-in families: constant(c), sum(a) = a*(x+y), product(a) = a*x*y.
/// All are symmetric by construction; custom kernels must be supplied
/// symmetric by the caller. Immutable and reentrant.
class KernelSpec {
public:
    enum class Family { constant, sum, product, custom };

    static KernelSpec constant(double rate) {
        return KernelSpec(Family::constant, rate, "constant");
    }
    static KernelSpec sum(double coefficient) {
        return KernelSpec(Family::sum, coefficient, "sum");
    }
    static KernelSpec product(double coefficient) {
        return KernelSpec(Family::product, coefficient, "product");
    }
    static KernelSpec custom(std::string name, std::function<double(double, double)> fn) {
        KernelSpec k(Family::custom, 0.0, std::move(name));
        k.fn_ = std::move(fn);
        return k;
    }

    double operator()(double x, double y) const {
        switch (family_) {
            case Family::constant: return parameter_;
            case Family::sum: return parameter_ * (x + y);
            case Family::product: return parameter_ * (x * y);  // grouped: exact symmetry
            case Family::custom: return fn_(x, y);
        }
        return 0.0;
    }

    Family family() const { return family_; }
    double parameter() const { return parameter_; }
    const std::string& name() const { return name_; }

private:
    KernelSpec(Family family, double parameter, std::string name)
        : family_(family), parameter_(parameter), name_(std::move(name)) {}

    Family family_;
    double parameter_;
    std::string name_;
    std::function<double(double, double)> fn_;
};

/// Closed-form solution used by the verification harness: density n(t, x)
/// and its moments of order 0 (total number) and 1 (total mass).
struct AnalyticReference {
    std::function<double(double t, double x)> density;
    std::function<double(double t, int order)> moment;
};

/// Classical closed form for the constant kernel beta = 1 with initial
/// density exp(-x):
///   n(t, x) = 4/(t+2)^2 * exp(-2x/(t+2)),
///   M0(t)   = 2/(t+2),   M1(t) = 1.
AnalyticReference constant_kernel_reference();

/// Initial density x -> exp(-x); unit total number and unit total mass
/// on ]0, inf[.
std::function<double(double)> exponential_initial_density();

}  // namespace cat
