#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cat/grid.hpp"
#include "cat/kernels.hpp"
#include "cat/simd.hpp"

namespace cat {

/// Per-cell integrals of a density over the grid: N_i = integral of n over
/// cell i, each to absolute tolerance quad_tol.
std::vector<double> project_density(const std::function<double(double)>& density,
                                    const Grid& grid, double quad_tol = 1e-12);

/// Discrete norm sum_i |v_i|.
double l1_norm(std::span<const double> values);

/// Pivot-weighted moment sum_i x_i^order * N_i for order in {0, 1, 2}.
double numerical_moment(std::span<const double> counts, const Grid& grid, int order);

struct GridFamily {
    enum class Kind { uniform, geometric };
    Kind kind = Kind::uniform;
    double R = 1.0;
    std::size_t base_cells = 2;
    double base_ratio = 0.0;  // required for geometric families
};

struct ConvergenceLevel {
    std::string grid_type;
    std::size_t cells;
    double r_or_dx;  // cell width for uniform levels, boundary ratio for geometric
    double error;    // l1 distance to the projected reference at t_end
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels;
    std::vector<double> eoc;  // one fewer entry than levels
};

struct StudyConfig {
    GridFamily family;
    std::size_t levels = 4;
    double t_end = 0.5;
    double dt = 1e-3;
    double quad_tol = 1e-12;
    simd::Backend backend = simd::detect();
    bool parallel_levels = true;
};

/// eoc_m = ln(e_m / e_{m+1}) / ln(I_{m+1} / I_m) for consecutive levels.
std::vector<double> pairwise_eoc(std::span<const double> errors,
                                 std::span<const std::size_t> cell_counts);

/// Refine the family, integrate the projected reference to t_end on each
/// level, and report errors against the projected reference plus pairwise
/// orders. Uniform levels double the cell count; geometric levels follow
/// refine_geometric, keeping the covered interval fixed.
ConvergenceReport run_convergence_study(const StudyConfig& config, const KernelSpec& kernel,
                                        const AnalyticReference& reference);

}  // namespace cat
