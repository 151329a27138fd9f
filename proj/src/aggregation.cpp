#include "cat/aggregation.hpp"

#include <limits>
#include <stdexcept>

namespace cat {

AggregationTable::AggregationTable(const Grid& grid) : cells_(grid.size()) {
    if (cells_ > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw std::invalid_argument("aggregation table: cell count exceeds index range");
    }
    const auto pivots = grid.pivots();
    pair_target_.assign(pair_count(), -1);

    std::vector<std::size_t> group_sizes(cells_, 0);
    for (std::size_t j = 0; j < cells_; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            if (const auto target = grid.target_cell(pivots[j] + pivots[k])) {
                pair_target_[pair_index(j, k)] = static_cast<std::int32_t>(*target);
                ++group_sizes[*target];
            }
        }
    }

    group_offsets_.resize(cells_ + 1);
    group_offsets_[0] = 0;
    for (std::size_t i = 0; i < cells_; ++i) {
        group_offsets_[i + 1] = group_offsets_[i] + group_sizes[i];
    }

    entry_j_.resize(group_offsets_.back());
    entry_k_.resize(group_offsets_.back());
    std::vector<std::size_t> cursor(group_offsets_.begin(), group_offsets_.end() - 1);
    for (std::size_t j = 0; j < cells_; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            const std::int32_t target = pair_target_[pair_index(j, k)];
            if (target < 0) continue;
            const std::size_t slot = cursor[static_cast<std::size_t>(target)]++;
            entry_j_[slot] = static_cast<std::int32_t>(j);
            entry_k_[slot] = static_cast<std::int32_t>(k);
        }
    }
}

std::size_t AggregationTable::pair_count() const {
    return cells_ * (cells_ + 1) / 2;
}

std::optional<std::size_t> AggregationTable::target_of(std::size_t j, std::size_t k) const {
    if (j < k) std::swap(j, k);
    if (j >= cells_) throw std::out_of_range("aggregation table: pivot index out of range");
    const std::int32_t target = pair_target_[pair_index(j, k)];
    if (target < 0) return std::nullopt;
    return static_cast<std::size_t>(target);
}

}  // namespace cat
