#include "cli.hpp"

#include "riskmetrics/cohort.hpp"
#include "riskmetrics/errors.hpp"
#include "riskmetrics/grid_io.hpp"
#include "riskmetrics/measures.hpp"
#include "riskmetrics/plot.hpp"
#include "riskmetrics/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>

namespace riskmetrics::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string format = "json";
    std::optional<std::string> out;
};

struct ComputeOptions {
    double f = 0.0;
    double p0 = 0.0;
    double rr = 0.0;
};

struct SolveOptions {
    double f = 0.0;
    std::optional<double> target_par;
    std::optional<double> p0;
    std::optional<double> target_c;
    double tolerance = SolverConfig{}.abs_tolerance;
    int max_iterations = SolverConfig{}.max_iterations;
};

struct SimulateOptions {
    double f = 0.0;
    double p0 = 0.0;
    double rr = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

struct SweepOptions {
    GridSpec spec;
    double probe_rr = 1.5;
};

Json measures_json(const DerivedMeasures &m) {
    Json j;
    j["p1"] = m.p1;
    j["f_cases"] = m.f_cases;
    j["f_controls"] = m.f_controls;
    j["par"] = m.par;
    j["c_index"] = m.c_index;
    return j;
}

Json envelope(const std::string &command, Json inputs, Json results, const std::vector<std::string> &warnings) {
    Json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["results"] = std::move(results);
    env["warnings"] = warnings;
    return env;
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << contents;
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

void add_grid_options(CLI::App &cmd, SweepOptions &opts) {
    cmd.add_option("--prevalences", opts.spec.prevalences, "Risk factor prevalences, one panel each")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_option("--p0-min", opts.spec.p0_min, "Smallest incidence among unexposed")->capture_default_str();
    cmd.add_option("--p0-max", opts.spec.p0_max, "Largest incidence among unexposed")->capture_default_str();
    cmd.add_option("--rr-min", opts.spec.rr_min, "Smallest relative risk")->capture_default_str();
    cmd.add_option("--rr-max", opts.spec.rr_max, "Largest relative risk")->capture_default_str();
    cmd.add_option("--resolution", opts.spec.resolution, "Grid nodes per axis")->capture_default_str();
    cmd.add_option("--levels", opts.spec.contour_levels, "Contour levels of the c-index")->delimiter(',');
    cmd.add_option("--probe-rr", opts.probe_rr, "Report the largest c-index along the row nearest this rr")
        ->capture_default_str();
}

Json grid_inputs(const SweepOptions &opts) {
    Json j;
    j["prevalences"] = opts.spec.prevalences;
    j["p0-min"] = opts.spec.p0_min;
    j["p0-max"] = opts.spec.p0_max;
    j["rr-min"] = opts.spec.rr_min;
    j["rr-max"] = opts.spec.rr_max;
    j["resolution"] = opts.spec.resolution;
    j["levels"] = opts.spec.contour_levels;
    j["probe-rr"] = opts.probe_rr;
    return j;
}

Json panel_summary(const MeasureGrid &grid, double probe_rr) {
    Json j;
    j["prevalence"] = grid.prevalence;
    const auto range = grid.c_range();
    j["c_min"] = std::isnan(range.min) ? Json(nullptr) : Json(range.min);
    j["c_max"] = std::isnan(range.max) ? Json(nullptr) : Json(range.max);
    j["masked_cells"] = std::count(grid.mask.begin(), grid.mask.end(), true);

    std::size_t row = 0;
    for (std::size_t i = 1; i < grid.rows(); ++i) {
        if (std::abs(grid.rr_axis[i] - probe_rr) < std::abs(grid.rr_axis[row] - probe_rr)) {
            row = i;
        }
    }
    Json probe;
    probe["rr"] = grid.rr_axis[row];
    probe["par"] = grid.par_axis[row];
    std::optional<std::size_t> best;
    for (std::size_t col = 0; col < grid.cols(); ++col) {
        if (!grid.masked(row, col) && (!best || grid.c(row, col) > grid.c(row, *best))) {
            best = col;
        }
    }
    probe["c_max"] = best ? Json(grid.c(row, *best)) : Json(nullptr);
    probe["p0_at_max"] = best ? Json(grid.p0_axis[*best]) : Json(nullptr);
    j["row_max"] = std::move(probe);
    return j;
}

Json run_compute(const ComputeOptions &opts, std::vector<std::string> &) {
    const PopulationParams params{opts.f, opts.p0, opts.rr};
    return measures_json(derive_measures(params));
}

Json run_solve(const SolveOptions &opts, std::vector<std::string> &warnings) {
    const bool by_par = opts.target_par.has_value();
    const bool by_c = opts.target_c.has_value();
    if (by_par == by_c) {
        throw InvalidParams("give exactly one of --target-par or --target-c");
    }
    Json results;
    if (by_par) {
        const double rr = rr_from_par(opts.f, *opts.target_par);
        results["method"] = "par_inversion";
        results["rr"] = rr;
        Json check;
        check["par"] = par(opts.f, rr);
        if (opts.p0) {
            if (rr * *opts.p0 > 1.0) {
                warnings.push_back("solution rr * p0 exceeds 1; the scenario is not realizable at this p0");
            } else {
                check["c_index"] = c_index(opts.f, *opts.p0, rr);
            }
        }
        results["verification"] = std::move(check);
        return results;
    }

    if (!opts.p0) {
        throw InvalidParams("--target-c requires --p0");
    }
    SolverConfig cfg;
    cfg.abs_tolerance = opts.tolerance;
    cfg.max_iterations = opts.max_iterations;
    const SolveResult solved = solve_rr_for_target_c(opts.f, *opts.p0, *opts.target_c, cfg);
    results["method"] = "bisection";
    results["rr"] = solved.rr;
    results["iterations"] = solved.iterations;
    results["residual"] = solved.residual;
    Json check;
    const DerivedMeasures m = derive_measures(PopulationParams{opts.f, *opts.p0, solved.rr});
    check["c_index"] = m.c_index;
    check["par"] = m.par;
    results["verification"] = std::move(check);
    return results;
}

Json run_simulate(const SimulateOptions &opts, std::vector<std::string> &) {
    const SimulationSpec spec{PopulationParams{opts.f, opts.p0, opts.rr}, opts.n, opts.seed};
    const CohortCounts counts = simulate_cohort(spec);

    Json results;
    Json c;
    c["exposed_case"] = counts.exposed_case;
    c["exposed_control"] = counts.exposed_control;
    c["unexposed_case"] = counts.unexposed_case;
    c["unexposed_control"] = counts.unexposed_control;
    results["counts"] = std::move(c);

    DerivedMeasures empirical;
    PlugInEstimates est;
    double pairwise = 0.0;
    try {
        pairwise = empirical_c(counts);
        est = plug_in_estimates(counts);
        empirical = empirical_measures(counts);
    } catch (const DegenerateScenario &e) {
        throw DegenerateScenario(std::string(e.what()) + "; increase --n or choose less extreme parameters");
    }
    const DerivedMeasures closed = derive_measures(spec.params);

    Json emp = measures_json(empirical);
    emp["f"] = est.f;
    emp["p0"] = est.p0;
    emp["rr"] = est.rr;
    emp["c_index_pairwise"] = pairwise;
    results["empirical"] = std::move(emp);
    results["closed_form"] = measures_json(closed);
    Json diff;
    diff["c_index"] = pairwise - closed.c_index;
    diff["par"] = empirical.par - closed.par;
    diff["f_cases"] = empirical.f_cases - closed.f_cases;
    diff["f_controls"] = empirical.f_controls - closed.f_controls;
    results["difference"] = std::move(diff);
    return results;
}

Json run_sweep(const SweepOptions &opts, const GlobalOptions &global, std::vector<std::string> &) {
    opts.spec.validate();
    const auto grids = evaluate_all(opts.spec);
    Json results;
    auto files = Json::array();
    if (global.out) {
        if (global.format == "csv") {
            write_file(*global.out, grids_to_csv(grids));
        } else {
            write_file(*global.out, grids_to_json(opts.spec, grids).dump(2) + "\n");
        }
        files.push_back(*global.out);
    }
    results["files"] = std::move(files);
    auto panels = Json::array();
    for (const auto &grid : grids) {
        panels.push_back(panel_summary(grid, opts.probe_rr));
    }
    results["panels"] = std::move(panels);
    return results;
}

Json run_plot(const SweepOptions &opts, const GlobalOptions &global, std::vector<std::string> &) {
    if (!global.out) {
        throw InvalidParams("plot requires --out PATH for the SVG file");
    }
    opts.spec.validate();
    const auto grids = evaluate_all(opts.spec);
    const std::string svg = render_svg(grids, opts.spec);
    write_file(*global.out, svg);

    Json results;
    results["files"] = Json::array({*global.out});
    auto panels = Json::array();
    for (const auto &grid : grids) {
        Json panel = panel_summary(grid, opts.probe_rr);
        auto contours = Json::array();
        for (double level : opts.spec.contour_levels) {
            Json entry;
            entry["level"] = level;
            entry["polylines"] = extract_contours(grid, level).polylines.size();
            contours.push_back(std::move(entry));
        }
        panel["contours"] = std::move(contours);
        panels.push_back(std::move(panel));
    }
    results["panels"] = std::move(panels);
    return results;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Risk factor measures: incidence, relative risk, PAR and the c-index", "riskmetrics"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format for tabular files")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", global.out, "Output file path");

    ComputeOptions compute;
    auto *compute_cmd = app.add_subcommand("compute", "All measures for one scenario")->fallthrough();
    compute_cmd->add_option("--f", compute.f, "Risk factor prevalence")->required();
    compute_cmd->add_option("--p0", compute.p0, "Incidence among unexposed")->required();
    compute_cmd->add_option("--rr", compute.rr, "Relative risk")->required();

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "Relative risk for a target PAR or c-index")->fallthrough();
    solve_cmd->add_option("--f", solve.f, "Risk factor prevalence")->required();
    auto *target_par = solve_cmd->add_option("--target-par", solve.target_par, "Target PAR");
    solve_cmd->add_option("--p0", solve.p0, "Incidence among unexposed");
    auto *target_c = solve_cmd->add_option("--target-c", solve.target_c, "Target c-index");
    target_par->excludes(target_c);
    solve_cmd->add_option("--tolerance", solve.tolerance, "Absolute tolerance on the c-index")
        ->capture_default_str();
    solve_cmd->add_option("--max-iterations", solve.max_iterations, "Bisection iteration limit")
        ->capture_default_str();

    SimulateOptions simulate;
    auto *simulate_cmd = app.add_subcommand("simulate", "Seeded cohort simulation")->fallthrough();
    simulate_cmd->add_option("--f", simulate.f, "Risk factor prevalence")->required();
    simulate_cmd->add_option("--p0", simulate.p0, "Incidence among unexposed")->required();
    simulate_cmd->add_option("--rr", simulate.rr, "Relative risk")->required();
    simulate_cmd->add_option("--n", simulate.n, "Number of subjects")->required();
    simulate_cmd->add_option("--seed", simulate.seed, "Generator seed")->required();

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate the c-index grid per prevalence")->fallthrough();
    add_grid_options(*sweep_cmd, sweep);

    SweepOptions plot;
    auto *plot_cmd = app.add_subcommand("plot", "Render c-index contour panels as SVG")->fallthrough();
    add_grid_options(*plot_cmd, plot);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    std::vector<std::string> warnings;
    try {
        const CLI::App *chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        if (global.format == "csv" && chosen != sweep_cmd) {
            throw InvalidParams("--format csv only applies to sweep");
        }

        Json inputs;
        Json results;
        if (chosen == compute_cmd) {
            inputs["f"] = compute.f;
            inputs["p0"] = compute.p0;
            inputs["rr"] = compute.rr;
            results = run_compute(compute, warnings);
        } else if (chosen == solve_cmd) {
            inputs["f"] = solve.f;
            if (solve.p0) inputs["p0"] = *solve.p0;
            if (solve.target_par) inputs["target-par"] = *solve.target_par;
            if (solve.target_c) inputs["target-c"] = *solve.target_c;
            inputs["tolerance"] = solve.tolerance;
            inputs["max-iterations"] = solve.max_iterations;
            results = run_solve(solve, warnings);
        } else if (chosen == simulate_cmd) {
            inputs["f"] = simulate.f;
            inputs["p0"] = simulate.p0;
            inputs["rr"] = simulate.rr;
            inputs["n"] = simulate.n;
            inputs["seed"] = simulate.seed;
            results = run_simulate(simulate, warnings);
        } else if (chosen == sweep_cmd) {
            inputs = grid_inputs(sweep);
            results = run_sweep(sweep, global, warnings);
        } else {
            inputs = grid_inputs(plot);
            results = run_plot(plot, global, warnings);
        }
        inputs["format"] = global.format;
        if (global.out) {
            inputs["out"] = *global.out;
        }
        out << envelope(name, std::move(inputs), std::move(results), warnings).dump(2) << "\n";
        return kOk;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace riskmetrics::cli
