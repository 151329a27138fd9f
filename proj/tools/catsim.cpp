// catsim: cell average technique solver for the truncated coagulation
// equation. Subcommands: simulate (time series + final state) and converge
// (grid refinement study with experimental orders).

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cat/aggregation.hpp"
#include "cat/analysis.hpp"
#include "cat/errors.hpp"
#include "cat/grid.hpp"
#include "cat/integrate.hpp"
#include "cat/kernels.hpp"
#include "cat/rates.hpp"
#include "cat/report_io.hpp"
#include "cat/simd.hpp"

namespace {

constexpr double kAutoDtSafety = 0.1;
constexpr double kNegativityTolerance = 1e-12;
constexpr double kQuadTol = 1e-12;

struct RunSpec {
    std::string command;
    std::string kernel = "constant";
    double kernel_param = 1.0;
    std::string grid = "uniform";
    double R = 10.0;
    std::size_t cells = 64;
    double ratio = 0.0;
    std::string ic = "exponential";
    double t_end = 1.0;
    std::string dt_text = "auto";
    std::size_t levels = 4;
    std::string out;
    std::string format = "csv";
    std::size_t cadence = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App* cmd, RunSpec& spec) {
    cmd->add_option("--kernel", spec.kernel, "coagulation kernel family")
        ->check(CLI::IsMember({"constant", "sum", "product"}))
        ->capture_default_str();
    cmd->add_option("--kernel-param", spec.kernel_param, "kernel coefficient")
        ->capture_default_str();
    cmd->add_option("--grid", spec.grid, "grid family")
        ->check(CLI::IsMember({"uniform", "geometric"}))
        ->capture_default_str();
    cmd->add_option("--R", spec.R, "right end of the volume domain")->capture_default_str();
    cmd->add_option("--cells", spec.cells, "number of cells")->capture_default_str();
    cmd->add_option("--ratio", spec.ratio, "boundary ratio (geometric grids)");
    cmd->add_option("--ic", spec.ic, "initial condition")
        ->check(CLI::IsMember({"exponential"}))
        ->capture_default_str();
    cmd->add_option("--t-end", spec.t_end, "final time")->capture_default_str();
    cmd->add_option("--dt", spec.dt_text, "time step, or 'auto'")->capture_default_str();
    cmd->add_option("--out", spec.out, "output path (default <command>.<format>)");
    cmd->add_option("--format", spec.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--cadence", spec.cadence, "record every N steps")->capture_default_str();
}

double parse_fixed_dt(const std::string& text) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end || !(value > 0.0)) {
        throw UsageError("--dt expects a positive number or 'auto', got '" + text + "'");
    }
    return value;
}

void validate(const RunSpec& spec) {
    if (!(spec.R > 0.0)) throw UsageError("--R must be positive");
    if (spec.kernel_param < 0.0) throw UsageError("--kernel-param must be nonnegative");
    if (!(spec.t_end >= 0.0)) throw UsageError("--t-end must be nonnegative");
    if (spec.cadence < 1) throw UsageError("--cadence must be at least 1");
    if (spec.grid == "uniform") {
        if (spec.cells < 1) throw UsageError("--cells must be at least 1");
    } else {
        if (spec.cells < 2) throw UsageError("--cells must be at least 2 for geometric grids");
        if (!(spec.ratio > 1.0)) throw UsageError("--ratio must exceed 1 for geometric grids");
    }
    if (spec.dt_text != "auto") parse_fixed_dt(spec.dt_text);
    if (spec.command == "converge") {
        if (spec.levels < 3) throw UsageError("--levels must be at least 3");
        if (spec.kernel != "constant" || spec.kernel_param != 1.0) {
            throw UsageError(
                "converge verifies against the constant-kernel closed form; "
                "use --kernel constant --kernel-param 1");
        }
    }
}

cat::Grid build_grid(const RunSpec& spec) {
    return spec.grid == "uniform" ? cat::Grid::uniform(spec.R, spec.cells)
                                  : cat::Grid::geometric(spec.R, spec.cells, spec.ratio);
}

cat::KernelSpec build_kernel(const RunSpec& spec) {
    if (spec.kernel == "constant") return cat::KernelSpec::constant(spec.kernel_param);
    if (spec.kernel == "sum") return cat::KernelSpec::sum(spec.kernel_param);
    return cat::KernelSpec::product(spec.kernel_param);
}

std::string output_path(const RunSpec& spec) {
    if (!spec.out.empty()) return spec.out;
    return spec.command + "." + spec.format;
}

std::string final_state_path(const std::string& series_path) {
    std::filesystem::path path(series_path);
    const auto extension = path.extension();
    path.replace_extension();
    path += "_final";
    path += extension;
    return path.string();
}

nlohmann::json resolved_spec(const RunSpec& spec, double dt, cat::simd::Backend backend) {
    nlohmann::json doc{{"command", spec.command},
                       {"kernel", spec.kernel},
                       {"kernel_param", spec.kernel_param},
                       {"grid", spec.grid},
                       {"R", spec.R},
                       {"cells", spec.cells},
                       {"ic", spec.ic},
                       {"t_end", spec.t_end},
                       {"dt", dt},
                       {"dt_mode", spec.dt_text == "auto" ? "auto" : "fixed"},
                       {"cadence", spec.cadence},
                       {"format", spec.format},
                       {"negativity_tolerance", kNegativityTolerance},
                       {"quad_tol", kQuadTol},
                       {"backend", cat::simd::backend_name(backend)}};
    if (spec.grid == "geometric") doc["ratio"] = spec.ratio;
    if (spec.dt_text == "auto") doc["dt_safety"] = kAutoDtSafety;
    if (spec.command == "converge") doc["levels"] = spec.levels;
    return doc;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("failed writing output file " + path);
}

int cmd_simulate(const RunSpec& spec) {
    const cat::Grid grid = build_grid(spec);
    const cat::KernelSpec kernel = build_kernel(spec);
    const auto initial = cat::project_density(cat::exponential_initial_density(), grid, kQuadTol);
    const double dt = spec.dt_text == "auto"
                          ? cat::suggest_dt(initial, grid, kernel, kAutoDtSafety)
                          : parse_fixed_dt(spec.dt_text);

    const cat::AggregationTable table(grid);
    const cat::CoagulationOperator op(grid, table, kernel);

    cat::IntegrationConfig cfg;
    cfg.t_end = spec.t_end;
    cfg.dt = dt;
    cfg.negativity_tolerance = kNegativityTolerance;
    cfg.record_every = spec.cadence;
    const cat::Trajectory trajectory =
        cat::integrate(std::span<const double>(initial), cfg,
                       [&op](std::span<const double> counts, std::span<double> out) {
                           op.rhs(counts, out);
                       });

    std::vector<cat::io::TimeSeriesRow> rows;
    rows.reserve(trajectory.size());
    for (const auto& point : trajectory) {
        double min_count = point.counts.empty() ? 0.0 : point.counts.front();
        for (const double c : point.counts) min_count = std::min(min_count, c);
        rows.push_back({point.time, cat::numerical_moment(point.counts, grid, 0),
                        cat::numerical_moment(point.counts, grid, 1),
                        cat::numerical_moment(point.counts, grid, 2), min_count});
    }

    const std::string spec_json = resolved_spec(spec, dt, op.backend()).dump();
    const std::string series_path = output_path(spec);
    const std::string state_path = final_state_path(series_path);
    const auto& final_counts = trajectory.back().counts;
    if (spec.format == "csv") {
        write_file(series_path, cat::io::timeseries_csv(rows, spec_json));
        write_file(state_path, cat::io::final_state_csv(final_counts, grid, spec_json));
    } else {
        write_file(series_path, cat::io::timeseries_json(rows, spec_json));
        write_file(state_path, cat::io::final_state_json(final_counts, grid, spec_json));
    }
    std::cout << "wrote " << series_path << " and " << state_path << "\n";
    return 0;
}

int cmd_converge(const RunSpec& spec) {
    const cat::KernelSpec kernel = build_kernel(spec);
    const cat::AnalyticReference reference = cat::constant_kernel_reference();

    cat::StudyConfig config;
    config.levels = spec.levels;
    config.t_end = spec.t_end;
    config.quad_tol = kQuadTol;
    if (spec.grid == "uniform") {
        config.family = {cat::GridFamily::Kind::uniform, spec.R, spec.cells, 0.0};
    } else {
        config.family = {cat::GridFamily::Kind::geometric, spec.R, spec.cells, spec.ratio};
    }

    double dt = 0.0;
    if (spec.dt_text == "auto") {
        // suggested on the base level at t = 0, held fixed across levels
        const cat::Grid base = build_grid(spec);
        const auto initial =
            cat::project_density(cat::exponential_initial_density(), base, kQuadTol);
        dt = cat::suggest_dt(initial, base, kernel, kAutoDtSafety);
    } else {
        dt = parse_fixed_dt(spec.dt_text);
    }
    config.dt = dt;

    const cat::ConvergenceReport report = cat::run_convergence_study(config, kernel, reference);

    const std::string spec_json = resolved_spec(spec, dt, config.backend).dump();
    const std::string path = output_path(spec);
    write_file(path, spec.format == "csv" ? cat::io::convergence_csv(report, spec_json)
                                          : cat::io::convergence_json(report, spec_json));

    std::cout << "eoc\n";
    for (const double value : report.eoc) std::cout << cat::io::format_double(value) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cell average technique solver for the truncated coagulation equation"};
    app.require_subcommand(1);

    RunSpec spec;
    CLI::App* simulate = app.add_subcommand("simulate", "integrate and write the time series");
    add_common_options(simulate, spec);
    CLI::App* converge = app.add_subcommand("converge", "grid refinement study with EOC");
    add_common_options(converge, spec);
    converge->add_option("--levels", spec.levels, "number of refinement levels")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    spec.command = simulate->parsed() ? "simulate" : "converge";
    try {
        validate(spec);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return spec.command == "simulate" ? cmd_simulate(spec) : cmd_converge(spec);
    } catch (const cat::NegativityError& e) {
        std::cerr << "integration failed: " << e.what() << "\n";
        return 1;
    } catch (const cat::IntegrationError& e) {
        std::cerr << "integration failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
