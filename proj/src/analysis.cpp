#include "cat/analysis.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "cat/aggregation.hpp"
#include "cat/integrate.hpp"
#include "cat/quadrature.hpp"
#include "cat/rates.hpp"

namespace cat {

std::vector<double> project_density(const std::function<double(double)>& density,
                                    const Grid& grid, double quad_tol) {
    const auto boundaries = grid.boundaries();
    std::vector<double> counts(grid.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        counts[i] = integrate_adaptive(density, boundaries[i], boundaries[i + 1], quad_tol);
    }
    return counts;
}

double l1_norm(std::span<const double> values) {
    double sum = 0.0;
    for (const double v : values) sum += std::abs(v);
    return sum;
}

double numerical_moment(std::span<const double> counts, const Grid& grid, int order) {
    if (order < 0 || order > 2) {
        throw std::invalid_argument("numerical_moment: order must be 0, 1 or 2");
    }
    if (counts.size() != grid.size()) {
        throw std::invalid_argument("numerical_moment: state dimension does not match grid");
    }
    const auto pivots = grid.pivots();
    double sum = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double weight = 1.0;
        for (int p = 0; p < order; ++p) weight *= pivots[i];
        sum += weight * counts[i];
    }
    return sum;
}

std::vector<double> pairwise_eoc(std::span<const double> errors,
                                 std::span<const std::size_t> cell_counts) {
    if (errors.size() != cell_counts.size()) {
        throw std::invalid_argument("pairwise_eoc: mismatched level data");
    }
    std::vector<double> eoc;
    for (std::size_t m = 0; m + 1 < errors.size(); ++m) {
        if (!(errors[m] > 0.0) || !(errors[m + 1] > 0.0)) {
            throw std::runtime_error("pairwise_eoc: level errors must be positive");
        }
        eoc.push_back(std::log(errors[m] / errors[m + 1]) /
                      std::log(static_cast<double>(cell_counts[m + 1]) /
                               static_cast<double>(cell_counts[m])));
    }
    return eoc;
}

namespace {

ConvergenceLevel run_level(const Grid& grid, const std::string& grid_type, double r_or_dx,
                           const StudyConfig& config, const KernelSpec& kernel,
                           const AnalyticReference& reference) {
    const AggregationTable table(grid);
    const CoagulationOperator op(grid, table, kernel, config.backend);

    const auto initial = project_density(
        [&reference](double x) { return reference.density(0.0, x); }, grid, config.quad_tol);

    IntegrationConfig icfg;
    icfg.t_end = config.t_end;
    icfg.dt = config.dt;
    icfg.record_every = std::numeric_limits<std::size_t>::max();  // keep endpoints only
    const Trajectory trajectory = integrate(
        std::span<const double>(initial), icfg,
        [&op](std::span<const double> counts, std::span<double> out) { op.rhs(counts, out); });

    const auto exact = project_density(
        [&reference, &config](double x) { return reference.density(config.t_end, x); }, grid,
        config.quad_tol);

    const auto& final_counts = trajectory.back().counts;
    std::vector<double> diff(final_counts.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = exact[i] - final_counts[i];

    return ConvergenceLevel{grid_type, grid.size(), r_or_dx, l1_norm(diff)};
}

}  // namespace

ConvergenceReport run_convergence_study(const StudyConfig& config, const KernelSpec& kernel,
                                        const AnalyticReference& reference) {
    if (config.levels < 3) {
        throw std::invalid_argument("convergence study: need at least three levels");
    }

    struct LevelSpec {
        Grid grid;
        std::string type;
        double r_or_dx;
    };
    std::vector<LevelSpec> specs;
    if (config.family.kind == GridFamily::Kind::uniform) {
        std::size_t cells = config.family.base_cells;
        for (std::size_t level = 0; level < config.levels; ++level, cells *= 2) {
            specs.push_back(
                {Grid::uniform(config.family.R, cells), "uniform", config.family.R / cells});
        }
    } else {
        GeometricParams params{config.family.R, config.family.base_cells,
                               config.family.base_ratio};
        for (std::size_t level = 0; level < config.levels; ++level) {
            specs.push_back({params.build(), "geometric", params.ratio});
            params = refine_geometric(params);
        }
    }

    ConvergenceReport report;
    report.levels.resize(specs.size());
    if (config.parallel_levels) {
        std::vector<std::future<ConvergenceLevel>> futures;
        futures.reserve(specs.size());
        for (const auto& spec : specs) {
            futures.push_back(std::async(std::launch::async, [&] {
                return run_level(spec.grid, spec.type, spec.r_or_dx, config, kernel, reference);
            }));
        }
        for (std::size_t l = 0; l < futures.size(); ++l) report.levels[l] = futures[l].get();
    } else {
        for (std::size_t l = 0; l < specs.size(); ++l) {
            report.levels[l] =
                run_level(specs[l].grid, specs[l].type, specs[l].r_or_dx, config, kernel,
                          reference);
        }
    }

    std::vector<double> errors;
    std::vector<std::size_t> cells;
    for (const auto& level : report.levels) {
        errors.push_back(level.error);
        cells.push_back(level.cells);
    }
    report.eoc = pairwise_eoc(errors, cells);
    return report;
}

}  // namespace cat
