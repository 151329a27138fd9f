#pragma once

#include <span>
#include <vector>

#include "cat/aggregation.hpp"
#include "cat/grid.hpp"
#include "cat/kernels.hpp"
#include "cat/simd.hpp"

namespace cat {

/// Discrete rates of the cell average technique for one state:
///   birth[i]  B^_i : gain from pairs aggregating into cell i
///   flux[i]   V^_i : volume flux carried by those pairs
///   death[i]  D^_i : loss of cell i particles to further aggregation
///   vbar[i]        : average newborn volume V^_i / B^_i (pivot when B^_i = 0)
struct RateBundle {
    std::vector<double> birth;
    std::vector<double> flux;
    std::vector<double> death;
    std::vector<double> vbar;
};

/// Rate evaluator bound to one (grid, table, kernel) triple.
///
/// Kernel values at pivot pairs are precomputed once; the per-state work is
/// a grouped pair reduction for birth/flux and one dot product per cell for
/// death, dispatched to the selected SIMD backend. Evaluation is pure and
/// reentrant; concurrent calls on a shared operator are safe.
class CoagulationOperator {
public:
    CoagulationOperator(const Grid& grid, const AggregationTable& table, const KernelSpec& kernel,
                        simd::Backend backend = simd::detect());

    std::size_t cells() const { return cells_; }
    simd::Backend backend() const { return backend_; }

    RateBundle rates(std::span<const double> counts) const;

    /// dN^_i/dt = B^CA_i - D^_i, written into `out`.
    void rhs(std::span<const double> counts, std::span<double> out) const;
    std::vector<double> rhs(std::span<const double> counts) const;

    /// max_i sum_j beta(x_i, x_j) N_j, the fastest death-rate coefficient.
    double max_death_coefficient(std::span<const double> counts) const;

private:
    std::size_t cells_;
    simd::Backend backend_;
    const simd::Ops* ops_;
    std::vector<double> pivots_;
    std::vector<double> pivot_left_;   // pivots_[i-1]; mirrored virtual pivot at i = 0
    std::vector<double> pivot_right_;  // pivots_[i+1]; mirrored virtual pivot at i = I-1
    std::vector<double> beta_;         // dense beta(x_i, x_j), row-major I x I
    std::vector<std::size_t> group_offsets_;
    std::vector<std::int32_t> entry_j_;
    std::vector<std::int32_t> entry_k_;
    std::vector<double> coeff_;      // (1 - delta_jk / 2) * beta(x_k, x_j)
    std::vector<double> coeff_vol_;  // coeff * (x_j + x_k)
};

/// Conserving reassignment of each cell's birth between its pivot and the
/// neighbor pivot bracketing vbar. Fractions aimed past the first or last
/// cell are dropped.
std::vector<double> redistribute(const RateBundle& rates, const Grid& grid);

// Convenience wrappers over a transient operator; prefer CoagulationOperator
// when evaluating repeatedly on a fixed grid and kernel.
RateBundle compute_rates(std::span<const double> counts, const Grid& grid,
                         const AggregationTable& table, const KernelSpec& kernel);
std::vector<double> rhs(std::span<const double> counts, const Grid& grid,
                        const AggregationTable& table, const KernelSpec& kernel);

/// Independent oracle for rhs: direct double loop over all pairs, locating
/// target cells by boundary scan and applying the Heaviside/lambda
/// reassignment literally, without table, grouping, or precomputation.
std::vector<double> rhs_bruteforce(std::span<const double> counts, const Grid& grid,
                                   const KernelSpec& kernel);

}  // namespace cat
