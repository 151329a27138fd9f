#include "cat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "cat/errors.hpp"

namespace cat {
namespace {

struct Panel {
    double a, b, fa, fm, fb, estimate;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
               double tol_floor) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.estimate;
    // factor 15 from the Richardson estimate of the composite rule
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureError(p.a, p.b, tol);
    }
    const double half_tol = std::max(0.5 * tol, tol_floor);
    return recurse(f, Panel{p.a, m, p.fa, flm, p.fm, left}, half_tol, depth - 1, tol_floor) +
           recurse(f, Panel{m, p.b, p.fm, frm, p.fb, right}, half_tol, depth - 1, tol_floor);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const Panel whole{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)};
    // keep subdivided tolerances above round-off on the running estimate
    const double tol_floor = 1e-3 * abs_tol;
    return recurse(f, whole, abs_tol, max_depth, tol_floor);
}

}  // namespace cat
