#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here stays off the library's hot paths so oracle comparisons remain
// meaningful.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "cat/grid.hpp"
#include "cat/kernels.hpp"

namespace testsupport {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random strictly increasing boundary list with bounded width ratio.
inline cat::Grid random_quasi_uniform_grid(std::mt19937_64& rng, std::size_t min_cells,
                                           std::size_t max_cells, bool zero_left = true) {
    std::uniform_int_distribution<std::size_t> cells_dist(min_cells, max_cells);
    std::uniform_real_distribution<double> base_width(0.05, 0.5);
    std::uniform_real_distribution<double> stretch(1.0, 3.0);
    std::uniform_real_distribution<double> left_dist(0.0, 1.0);
    const std::size_t cells = cells_dist(rng);
    const double w0 = base_width(rng);
    std::vector<double> boundaries;
    boundaries.push_back(zero_left ? 0.0 : left_dist(rng));
    for (std::size_t i = 0; i < cells; ++i) {
        boundaries.push_back(boundaries.back() + w0 * stretch(rng));
    }
    return cat::Grid::from_boundaries(std::move(boundaries));
}

/// Small-span variant whose rate magnitudes stay O(1), so absolute oracle
/// tolerances like 1e-13 remain meaningful.
inline cat::Grid random_unit_grid(std::mt19937_64& rng, std::size_t min_cells,
                                  std::size_t max_cells, bool zero_left = true) {
    std::uniform_int_distribution<std::size_t> cells_dist(min_cells, max_cells);
    std::uniform_real_distribution<double> base_width(0.02, 0.1);
    std::uniform_real_distribution<double> stretch(1.0, 2.2);
    std::uniform_real_distribution<double> left_dist(0.0, 0.2);
    const std::size_t cells = cells_dist(rng);
    const double w0 = base_width(rng);
    std::vector<double> boundaries;
    boundaries.push_back(zero_left ? 0.0 : left_dist(rng));
    for (std::size_t i = 0; i < cells; ++i) {
        boundaries.push_back(boundaries.back() + w0 * stretch(rng));
    }
    return cat::Grid::from_boundaries(std::move(boundaries));
}

inline std::vector<double> random_counts(std::mt19937_64& rng, std::size_t n, double lo = 0.0,
                                         double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> counts(n);
    for (auto& c : counts) c = dist(rng);
    return counts;
}

/// Kernel with values of order one on the unit-scale test grids.
inline cat::KernelSpec random_kernel(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> param(0.1, 1.5);
    switch (rng() % 3) {
        case 0: return cat::KernelSpec::constant(param(rng));
        case 1: return cat::KernelSpec::sum(param(rng));
        default: return cat::KernelSpec::product(param(rng));
    }
}

/// State whose pair sums all land strictly inside interior cells, so the
/// reassignment conserves number and mass exactly.
inline std::vector<double> interior_birth_counts(const cat::Grid& grid, std::mt19937_64& rng) {
    const auto boundaries = grid.boundaries();
    const auto pivots = grid.pivots();
    const double cap = 0.49 * boundaries[grid.size() - 1];  // sums stay below b[I-1]
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    std::vector<double> counts(grid.size(), 0.0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (pivots[i] <= cap) counts[i] = dist(rng);
    }
    return counts;
}

/// Fixed-step composite Simpson rule; independent of the library quadrature.
inline double simpson_oracle(const std::function<double(double)>& f, double a, double b,
                             std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = f(a) + f(b);
    for (std::size_t p = 1; p < panels; ++p) {
        sum += 2.0 * (1.0 + static_cast<double>(p % 2)) * f(a + h * static_cast<double>(p));
    }
    return sum * h / 3.0;
}

}  // namespace testsupport
