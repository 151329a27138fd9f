#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cat {

/// Partition of the volume interval ]x_{1/2}, x_{I+1/2}] into I cells.
///
/// Cell i (0-based) is the interval between boundaries()[i] and
/// boundaries()[i+1]; its pivot is the arithmetic midpoint. Immutable after
/// construction, safe to share across threads.
class Grid {
public:
    /// Uniform partition of ]0, R] into `cells` cells of width R/cells.
    static Grid uniform(double R, std::size_t cells);

    /// Geometric partition with boundary ratio r > 1 and right endpoint R:
    /// boundaries are R * r^(m - cells) for m = 0..cells, so the left
    /// endpoint is R * r^-cells > 0.
    static Grid geometric(double R, std::size_t cells, double ratio);

    /// Arbitrary partition from an explicit strictly increasing boundary list.
    static Grid from_boundaries(std::vector<double> boundaries);

    std::size_t size() const { return pivots_.size(); }

    std::span<const double> boundaries() const { return boundaries_; }
    std::span<const double> pivots() const { return pivots_; }
    std::span<const double> widths() const { return widths_; }

    double left_edge() const { return boundaries_.front(); }
    double right_edge() const { return boundaries_.back(); }

    /// max cell width / min cell width; 1 for uniform grids.
    double quasi_uniformity() const { return quasi_uniformity_; }

    /// Cell receiving a newborn particle of volume v, with the half-open
    /// convention x_{i-1/2} <= v < x_{i+1/2}. Empty when v lies left of the
    /// first boundary or at/past the last one.
    std::optional<std::size_t> target_cell(double volume) const;

private:
    explicit Grid(std::vector<double> boundaries);

    std::vector<double> boundaries_;
    std::vector<double> pivots_;
    std::vector<double> widths_;
    double quasi_uniformity_;
};

/// Parameters (R, I, r) identifying one member of a geometric grid family.
struct GeometricParams {
    double R;
    std::size_t cells;
    double ratio;

    Grid build() const { return Grid::geometric(R, cells, ratio); }
};

/// One refinement step I -> 2I, r -> sqrt(r). Covers the identical interval
/// [R * r^-I, R] with twice the cells (h is halved in the log variable).
GeometricParams refine_geometric(const GeometricParams& params);

}  // namespace cat
