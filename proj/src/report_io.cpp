#include "cat/report_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace cat::io {

std::string format_double(double value) {
    char buffer[40];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::general, 17);
    if (result.ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buffer, result.ptr);
}

namespace {

nlohmann::json parse_spec(const std::string& spec_json) {
    return spec_json.empty() ? nlohmann::json::object() : nlohmann::json::parse(spec_json);
}

std::string header_comment(const std::string& spec_json) {
    return spec_json.empty() ? std::string() : "# " + spec_json + "\n";
}

}  // namespace

std::string convergence_csv(const ConvergenceReport& report, const std::string& spec_json) {
    std::string out = header_comment(spec_json);
    out += "level,grid_type,I,r_or_dx,error,eoc\n";
    for (std::size_t l = 0; l < report.levels.size(); ++l) {
        const auto& level = report.levels[l];
        out += std::to_string(l) + ',' + level.grid_type + ',' + std::to_string(level.cells) +
               ',' + format_double(level.r_or_dx) + ',' + format_double(level.error) + ',';
        if (l > 0) out += format_double(report.eoc[l - 1]);  // order of the step into this level
        out += '\n';
    }
    return out;
}

std::string convergence_json(const ConvergenceReport& report, const std::string& spec_json) {
    nlohmann::json doc;
    doc["spec"] = parse_spec(spec_json);
    auto& levels = doc["levels"] = nlohmann::json::array();
    for (std::size_t l = 0; l < report.levels.size(); ++l) {
        const auto& level = report.levels[l];
        nlohmann::json entry{{"level", l},
                             {"grid_type", level.grid_type},
                             {"I", level.cells},
                             {"r_or_dx", level.r_or_dx},
                             {"error", level.error}};
        if (l > 0) {
            entry["eoc"] = report.eoc[l - 1];
        } else {
            entry["eoc"] = nullptr;
        }
        levels.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string timeseries_csv(std::span<const TimeSeriesRow> rows, const std::string& spec_json) {
    std::string out = header_comment(spec_json);
    out += "t,M0,M1,M2,min_count\n";
    for (const auto& row : rows) {
        out += format_double(row.t) + ',' + format_double(row.m0) + ',' + format_double(row.m1) +
               ',' + format_double(row.m2) + ',' + format_double(row.min_count) + '\n';
    }
    return out;
}

std::string timeseries_json(std::span<const TimeSeriesRow> rows, const std::string& spec_json) {
    nlohmann::json doc;
    doc["spec"] = parse_spec(spec_json);
    auto& series = doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        series.push_back({{"t", row.t},
                          {"M0", row.m0},
                          {"M1", row.m1},
                          {"M2", row.m2},
                          {"min_count", row.min_count}});
    }
    return doc.dump(2) + "\n";
}

std::string final_state_csv(std::span<const double> counts, const Grid& grid,
                            const std::string& spec_json) {
    std::string out = header_comment(spec_json);
    out += "i,x_i,dx_i,N_i,n_i\n";
    const auto pivots = grid.pivots();
    const auto widths = grid.widths();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out += std::to_string(i + 1) + ',' + format_double(pivots[i]) + ',' +
               format_double(widths[i]) + ',' + format_double(counts[i]) + ',' +
               format_double(counts[i] / widths[i]) + '\n';
    }
    return out;
}

std::string final_state_json(std::span<const double> counts, const Grid& grid,
                             const std::string& spec_json) {
    nlohmann::json doc;
    doc["spec"] = parse_spec(spec_json);
    auto& rows = doc["rows"] = nlohmann::json::array();
    const auto pivots = grid.pivots();
    const auto widths = grid.widths();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        rows.push_back({{"i", i + 1},
                        {"x_i", pivots[i]},
                        {"dx_i", widths[i]},
                        {"N_i", counts[i]},
                        {"n_i", counts[i] / widths[i]}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace cat::io
