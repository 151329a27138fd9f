#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cat/analysis.hpp"
#include "cat/grid.hpp"

namespace cat::io {

/// Shortest-exact decimal rendering of a double ('.' separator, no locale).
std::string format_double(double value);

struct TimeSeriesRow {
    double t;
    double m0;
    double m1;
    double m2;
    double min_count;
};

// Every builder takes the fully resolved run spec as a serialized JSON
// object; CSV carries it as a '#' header comment, JSON embeds it as "spec".

std::string convergence_csv(const ConvergenceReport& report, const std::string& spec_json);
std::string convergence_json(const ConvergenceReport& report, const std::string& spec_json);

std::string timeseries_csv(std::span<const TimeSeriesRow> rows, const std::string& spec_json);
std::string timeseries_json(std::span<const TimeSeriesRow> rows, const std::string& spec_json);

std::string final_state_csv(std::span<const double> counts, const Grid& grid,
                            const std::string& spec_json);
std::string final_state_json(std::span<const double> counts, const Grid& grid,
                             const std::string& spec_json);

}  // namespace cat::io
