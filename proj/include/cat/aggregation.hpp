#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cat/grid.hpp"

namespace cat {

/// Precomputed map from pivot pairs (j, k), j >= k, to the cell receiving a
/// newborn of volume x_j + x_k. Pairs whose sum falls at or beyond the right
/// edge are out of domain. In-domain entries are grouped contiguously by
/// target cell so birth accumulation reduces over one slice per cell.
/// Immutable after construction.
class AggregationTable {
public:
    explicit AggregationTable(const Grid& grid);

    std::size_t cells() const { return cells_; }

    /// Total number of ordered pairs j >= k, in-domain or not: I(I+1)/2.
    std::size_t pair_count() const;

    std::size_t in_domain_count() const { return entry_j_.size(); }
    std::size_t out_of_domain_count() const { return pair_count() - in_domain_count(); }

    /// Target cell of the pair (j, k); empty when the sum leaves the domain.
    /// Order of j and k does not matter.
    std::optional<std::size_t> target_of(std::size_t j, std::size_t k) const;

    // Grouped storage: entries for target cell i occupy
    // [group_offsets()[i], group_offsets()[i+1]) in entry_j()/entry_k().
    std::span<const std::int32_t> entry_j() const { return entry_j_; }
    std::span<const std::int32_t> entry_k() const { return entry_k_; }
    std::span<const std::size_t> group_offsets() const { return group_offsets_; }

private:
    std::size_t pair_index(std::size_t j, std::size_t k) const {
        return j * (j + 1) / 2 + k;  // requires j >= k
    }

    std::size_t cells_;
    std::vector<std::int32_t> pair_target_;  // per pair index, -1 = out of domain
    std::vector<std::int32_t> entry_j_;
    std::vector<std::int32_t> entry_k_;
    std::vector<std::size_t> group_offsets_;
};

inline AggregationTable build_aggregation_table(const Grid& grid) {
    return AggregationTable(grid);
}

}  // namespace cat
