#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cat/analysis.hpp"
#include "cat/grid.hpp"
#include "cat/report_io.hpp"
#include "support.hpp"

using cat::ConvergenceReport;

TEST_CASE("doubles render exactly and locale-free") {
    CHECK(cat::io::format_double(0.5) == "0.5");
    CHECK(cat::io::format_double(0.0) == "0");
    CHECK(cat::io::format_double(-2.0) == "-2");
    CHECK(cat::io::format_double(1e-4).find(',') == std::string::npos);

    auto rng = testsupport::make_rng(81);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int trial = 0; trial < 1000; ++trial) {
        const double value = dist(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
        const std::string text = cat::io::format_double(value);
        CHECK(std::strtod(text.c_str(), nullptr) == value);  // 17 digits round-trip
    }
}

TEST_CASE("convergence report serializes with the fixed column set") {
    ConvergenceReport report;
    report.levels = {{"uniform", 32, 0.3125, 0.04},
                     {"uniform", 64, 0.15625, 0.01},
                     {"uniform", 128, 0.078125, 0.0025}};
    report.eoc = {2.0, 2.0};

    const std::string csv = cat::io::convergence_csv(report, R"({"command":"converge"})");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# {\"command\":\"converge\"}");
    std::getline(lines, line);
    CHECK(line == "level,grid_type,I,r_or_dx,error,eoc");
    std::getline(lines, line);
    CHECK(line == "0,uniform,32,0.3125,0.040000000000000001,");
    std::getline(lines, line);
    CHECK(line == "1,uniform,64,0.15625,0.01,2");

    const auto doc = nlohmann::json::parse(
        cat::io::convergence_json(report, R"({"command":"converge"})"));
    CHECK(doc["spec"]["command"] == "converge");
    REQUIRE(doc["levels"].size() == 3);
    CHECK(doc["levels"][0]["eoc"].is_null());
    CHECK(doc["levels"][2]["eoc"] == 2.0);
    CHECK(doc["levels"][1]["I"] == 64);
}

TEST_CASE("time series and final state carry consistent rows") {
    const std::vector<cat::io::TimeSeriesRow> rows{{0.0, 1.0, 1.0, 2.0, 0.125},
                                                   {0.5, 0.75, 1.0, 2.5, 0.0625}};
    const std::string csv = cat::io::timeseries_csv(rows, "");
    CHECK(csv.find("t,M0,M1,M2,min_count\n") == 0);  // no header comment when spec empty
    CHECK(csv.find("0.5,0.75,1,2.5,0.0625\n") != std::string::npos);

    const cat::Grid grid = cat::Grid::uniform(4.0, 4);
    const std::vector<double> counts{1.0, 0.5, 0.25, 0.0};
    const std::string state = cat::io::final_state_csv(counts, grid, "");
    std::istringstream lines(state);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "i,x_i,dx_i,N_i,n_i");
    std::getline(lines, line);
    CHECK(line == "1,0.5,1,1,1");

    const auto doc = nlohmann::json::parse(cat::io::final_state_json(counts, grid, ""));
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][1]["n_i"] == 0.5);
}
