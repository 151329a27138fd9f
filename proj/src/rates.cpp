#include "cat/rates.hpp"

#include <stdexcept>

namespace cat {

CoagulationOperator::CoagulationOperator(const Grid& grid, const AggregationTable& table,
                                         const KernelSpec& kernel, simd::Backend backend)
    : cells_(grid.size()),
      backend_(simd::available(backend) ? backend : simd::Backend::scalar),
      ops_(&simd::ops(backend_)),
      pivots_(grid.pivots().begin(), grid.pivots().end()),
      group_offsets_(table.group_offsets().begin(), table.group_offsets().end()),
      entry_j_(table.entry_j().begin(), table.entry_j().end()),
      entry_k_(table.entry_k().begin(), table.entry_k().end()) {
    if (table.cells() != cells_) {
        throw std::invalid_argument("operator: table built for a different grid size");
    }

    pivot_left_.resize(cells_);
    pivot_right_.resize(cells_);
    for (std::size_t i = 0; i < cells_; ++i) {
        pivot_left_[i] = i > 0 ? pivots_[i - 1] : 2.0 * grid.left_edge() - pivots_[0];
        pivot_right_[i] =
            i + 1 < cells_ ? pivots_[i + 1] : 2.0 * grid.right_edge() - pivots_[cells_ - 1];
    }

    beta_.resize(cells_ * cells_);
    for (std::size_t i = 0; i < cells_; ++i) {
        for (std::size_t j = 0; j < cells_; ++j) {
            beta_[i * cells_ + j] = kernel(pivots_[i], pivots_[j]);
        }
    }

    coeff_.resize(entry_j_.size());
    coeff_vol_.resize(entry_j_.size());
    for (std::size_t e = 0; e < entry_j_.size(); ++e) {
        const auto j = static_cast<std::size_t>(entry_j_[e]);
        const auto k = static_cast<std::size_t>(entry_k_[e]);
        const double weight = j == k ? 0.5 : 1.0;
        coeff_[e] = weight * kernel(pivots_[k], pivots_[j]);
        coeff_vol_[e] = coeff_[e] * (pivots_[j] + pivots_[k]);
    }
}

RateBundle CoagulationOperator::rates(std::span<const double> counts) const {
    if (counts.size() != cells_) {
        throw std::invalid_argument("rates: state dimension does not match grid");
    }
    RateBundle rb;
    rb.birth.resize(cells_);
    rb.flux.resize(cells_);
    rb.death.resize(cells_);
    rb.vbar.resize(cells_);
    for (std::size_t i = 0; i < cells_; ++i) {
        const std::size_t begin = group_offsets_[i];
        const auto sums = ops_->pair_reduce(coeff_.data() + begin, coeff_vol_.data() + begin,
                                            entry_j_.data() + begin, entry_k_.data() + begin,
                                            group_offsets_[i + 1] - begin, counts.data());
        rb.birth[i] = sums.weighted;
        rb.flux[i] = sums.volume_weighted;
        rb.death[i] = counts[i] * ops_->dot(beta_.data() + i * cells_, counts.data(), cells_);
        rb.vbar[i] = rb.birth[i] > 0.0 ? rb.flux[i] / rb.birth[i] : pivots_[i];
    }
    return rb;
}

void CoagulationOperator::rhs(std::span<const double> counts, std::span<double> out) const {
    if (out.size() != cells_) {
        throw std::invalid_argument("rhs: output dimension does not match grid");
    }
    const RateBundle rb = rates(counts);
    for (std::size_t i = 0; i < cells_; ++i) {
        out[i] = -rb.death[i];
    }
    // donor split of each birth between the pivot and the neighbor
    // bracketing vbar; fractions past the boundary pivots are dropped
    for (std::size_t i = 0; i < cells_; ++i) {
        const double birth = rb.birth[i];
        if (birth == 0.0) continue;
        const double v = rb.vbar[i];
        const double pivot = pivots_[i];
        if (v > pivot) {
            const double span = pivot_right_[i] - pivot;
            out[i] += birth * (pivot_right_[i] - v) / span;
            if (i + 1 < cells_) out[i + 1] += birth * (v - pivot) / span;
        } else if (v < pivot) {
            const double span = pivot - pivot_left_[i];
            out[i] += birth * (v - pivot_left_[i]) / span;
            if (i > 0) out[i - 1] += birth * (pivot - v) / span;
        } else {
            out[i] += birth;  // both H(0) = 1/2 halves stay on the pivot
        }
    }
}

std::vector<double> CoagulationOperator::rhs(std::span<const double> counts) const {
    std::vector<double> out(cells_);
    rhs(counts, out);
    return out;
}

double CoagulationOperator::max_death_coefficient(std::span<const double> counts) const {
    if (counts.size() != cells_) {
        throw std::invalid_argument("death coefficient: state dimension does not match grid");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < cells_; ++i) {
        const double rate = ops_->dot(beta_.data() + i * cells_, counts.data(), cells_);
        if (rate > worst) worst = rate;
    }
    return worst;
}

std::vector<double> redistribute(const RateBundle& rates, const Grid& grid) {
    const std::size_t cells = grid.size();
    if (rates.birth.size() != cells || rates.vbar.size() != cells) {
        throw std::invalid_argument("redistribute: rate dimensions do not match grid");
    }
    const auto pivots = grid.pivots();
    std::vector<double> assigned(cells, 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
        const double birth = rates.birth[i];
        const double v = rates.vbar[i];
        const double pivot = pivots[i];
        if (v > pivot) {
            const double right =
                i + 1 < cells ? pivots[i + 1] : 2.0 * grid.right_edge() - pivots[cells - 1];
            assigned[i] += birth * (right - v) / (right - pivot);
            if (i + 1 < cells) assigned[i + 1] += birth * (v - pivot) / (right - pivot);
        } else if (v < pivot) {
            const double left = i > 0 ? pivots[i - 1] : 2.0 * grid.left_edge() - pivots[0];
            assigned[i] += birth * (v - left) / (pivot - left);
            if (i > 0) assigned[i - 1] += birth * (pivot - v) / (pivot - left);
        } else {
            assigned[i] += birth;
        }
    }
    return assigned;
}

RateBundle compute_rates(std::span<const double> counts, const Grid& grid,
                         const AggregationTable& table, const KernelSpec& kernel) {
    return CoagulationOperator(grid, table, kernel).rates(counts);
}

std::vector<double> rhs(std::span<const double> counts, const Grid& grid,
                        const AggregationTable& table, const KernelSpec& kernel) {
    return CoagulationOperator(grid, table, kernel).rhs(counts);
}

namespace {

double heaviside(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return 0.0;
    return 0.5;
}

}  // namespace

std::vector<double> rhs_bruteforce(std::span<const double> counts, const Grid& grid,
                                   const KernelSpec& kernel) {
    const std::size_t cells = grid.size();
    if (counts.size() != cells) {
        throw std::invalid_argument("rhs_bruteforce: state dimension does not match grid");
    }
    const auto boundaries = grid.boundaries();
    const auto grid_pivots = grid.pivots();

    // pivots extended by mirrored virtual neighbors at both ends, so
    // lambda(i, x) below can reference x_{i-1} and x_{i+1} for every cell
    std::vector<double> x(cells + 2);
    for (std::size_t i = 0; i < cells; ++i) x[i + 1] = grid_pivots[i];
    x[0] = 2.0 * boundaries.front() - x[1];
    x[cells + 1] = 2.0 * boundaries.back() - x[cells];

    std::vector<double> birth(cells, 0.0);
    std::vector<double> flux(cells, 0.0);
    for (std::size_t j = 0; j < cells; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            const double sum = grid_pivots[j] + grid_pivots[k];
            if (sum < boundaries.front() || sum >= boundaries.back()) continue;
            std::size_t target = 0;
            while (!(sum < boundaries[target + 1])) ++target;
            const double weight = j == k ? 0.5 : 1.0;
            const double rate = weight * kernel(grid_pivots[k], grid_pivots[j]) *
                                counts[j] * counts[k];
            birth[target] += rate;
            flux[target] += rate * sum;
        }
    }

    std::vector<double> vbar(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        vbar[i] = birth[i] > 0.0 ? flux[i] / birth[i] : grid_pivots[i];
    }

    // receiver form: cell i collects from births in cells i-1, i, i+1,
    // skipping the donors that do not exist
    const auto lambda_minus = [&x](std::size_t i, double v) {
        return (v - x[i - 1]) / (x[i] - x[i - 1]);  // i is 1-based into x
    };
    const auto lambda_plus = [&x](std::size_t i, double v) {
        return (v - x[i + 1]) / (x[i] - x[i + 1]);
    };

    std::vector<double> out(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        const std::size_t i = c + 1;  // 1-based into x
        double gathered = birth[c] * (lambda_plus(i, vbar[c]) * heaviside(vbar[c] - x[i]) +
                                      lambda_minus(i, vbar[c]) * heaviside(x[i] - vbar[c]));
        if (c > 0) {
            gathered +=
                birth[c - 1] * lambda_minus(i, vbar[c - 1]) * heaviside(vbar[c - 1] - x[i - 1]);
        }
        if (c + 1 < cells) {
            gathered +=
                birth[c + 1] * lambda_plus(i, vbar[c + 1]) * heaviside(x[i + 1] - vbar[c + 1]);
        }
        double death = 0.0;
        for (std::size_t j = 0; j < cells; ++j) {
            death += kernel(grid_pivots[c], grid_pivots[j]) * counts[j];
        }
        out[c] = gathered - counts[c] * death;
    }
    return out;
}

}  // namespace cat
