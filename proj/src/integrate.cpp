#include "cat/integrate.hpp"

namespace cat {

double suggest_dt(std::span<const double> counts, const Grid& grid, const KernelSpec& kernel,
                  double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) {
        throw std::invalid_argument("suggest_dt: safety factor must lie in (0, 1]");
    }
    if (counts.size() != grid.size()) {
        throw std::invalid_argument("suggest_dt: state dimension does not match grid");
    }
    const auto pivots = grid.pivots();
    double worst = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double rate = 0.0;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            rate += kernel(pivots[i], pivots[j]) * counts[j];
        }
        if (rate > worst) worst = rate;
    }
    return worst > 0.0 ? safety / worst : safety;
}

}  // namespace cat
