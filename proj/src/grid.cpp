#include "cat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cat {

Grid::Grid(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2) {
        throw std::invalid_argument("grid needs at least one cell (two boundaries)");
    }
    if (boundaries_.front() < 0.0) {
        throw std::invalid_argument("grid boundaries must be nonnegative");
    }
    const std::size_t cells = boundaries_.size() - 1;
    pivots_.resize(cells);
    widths_.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        if (!(boundaries_[i] < boundaries_[i + 1])) {
            throw std::invalid_argument("grid boundaries must be strictly increasing");
        }
        pivots_[i] = 0.5 * (boundaries_[i] + boundaries_[i + 1]);
        widths_[i] = boundaries_[i + 1] - boundaries_[i];
    }
    const auto [min_it, max_it] = std::minmax_element(widths_.begin(), widths_.end());
    quasi_uniformity_ = *max_it / *min_it;
}

Grid Grid::uniform(double R, std::size_t cells) {
    if (!(R > 0.0)) throw std::invalid_argument("uniform grid: R must be positive");
    if (cells < 1) throw std::invalid_argument("uniform grid: need at least one cell");
    std::vector<double> b(cells + 1);
    for (std::size_t m = 0; m <= cells; ++m) {
        b[m] = R * static_cast<double>(m) / static_cast<double>(cells);
    }
    b.front() = 0.0;
    b.back() = R;
    return Grid(std::move(b));
}

Grid Grid::geometric(double R, std::size_t cells, double ratio) {
    if (!(R > 0.0)) throw std::invalid_argument("geometric grid: R must be positive");
    if (cells < 2) throw std::invalid_argument("geometric grid: need at least two cells");
    if (!(ratio > 1.0)) throw std::invalid_argument("geometric grid: ratio must exceed 1");
    std::vector<double> b(cells + 1);
    for (std::size_t m = 0; m <= cells; ++m) {
        b[m] = R * std::pow(ratio, static_cast<double>(m) - static_cast<double>(cells));
    }
    b.back() = R;
    return Grid(std::move(b));
}

Grid Grid::from_boundaries(std::vector<double> boundaries) {
    return Grid(std::move(boundaries));
}

std::optional<std::size_t> Grid::target_cell(double volume) const {
    if (volume < boundaries_.front() || volume >= boundaries_.back()) {
        return std::nullopt;
    }
    // first boundary strictly greater than v; cell index is one less
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), volume);
    return static_cast<std::size_t>(it - boundaries_.begin()) - 1;
}

GeometricParams refine_geometric(const GeometricParams& params) {
    if (!(params.R > 0.0) || params.cells < 2 || !(params.ratio > 1.0)) {
        throw std::invalid_argument("refine_geometric: invalid geometric parameters");
    }
    return GeometricParams{params.R, 2 * params.cells, std::sqrt(params.ratio)};
}

}  // namespace cat
