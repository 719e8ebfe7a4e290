#pragma once

// Command-line surface. Every subcommand resolves a preset the same way:
// baseline values, then --config overrides, then repeated --set overrides.
// Exit codes: 0 success, 1 validation/usage error, 2 I/O error.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ubicap/calibration.hpp"
#include "ubicap/dynamics.hpp"
#include "ubicap/sweeps.hpp"
#include "ubicap/table.hpp"
#include "ubicap/version.hpp"

namespace ubicap::cli {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string format = "csv";
    std::string out_path;
};

inline void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "parameter file (key = value lines)");
    cmd->add_option("--set", opts.overrides,
                    "override one parameter, e.g. --set sigma=0.55 (repeatable)");
    cmd->add_option("--format", opts.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "write output to this file instead of stdout");
}

inline CalibrationPreset resolve_preset(const CommonOpts& opts) {
    // untouched baseline keeps its citation provenance
    if (opts.config_path.empty() && opts.overrides.empty()) return preset_us_2025();

    ConfigMap values;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw io_error("cannot open parameter file: " + opts.config_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        values = parse_config_text(buffer.str(), opts.config_path);
    }
    for (const auto& assignment : opts.overrides) {
        ConfigMap one = parse_config_text(assignment, "--set");
        for (auto& [key, entry] : one) {
            entry.provenance = "--set";
            values[key] = std::move(entry);  // last --set wins
        }
    }
    return preset_from_config(values);
}

inline void deliver(const ResultTable& table, const CommonOpts& opts, std::ostream& out) {
    const TableFormat format = opts.format == "json" ? TableFormat::json : TableFormat::csv;
    if (opts.out_path.empty())
        write_table(table, format, out);
    else
        write_table_file(table, format, opts.out_path);
}

namespace detail {

inline ResultTable threshold_table(const CalibrationPreset& preset, double year) {
    // With conduct = 0 this reduces exactly to the competitive threshold.
    const ThresholdReport report =
        gamma_star_oligo(preset.econ, preset.fiscal, preset.market, year);
    ResultTable table;
    table.metadata = ubicap::detail::preset_metadata(preset);
    table.metadata.emplace_back("command", "threshold");
    table.columns = {"year",          "gamma_star",       "gamma_star_unclamped", "z_factor",
                     "rent_denominator", "profit_offset", "always_solvent"};
    table.rows.push_back({report.year, report.gamma_star, report.gamma_star_unclamped,
                          report.z_factor, report.rent_denominator, report.profit_offset,
                          report.always_solvent ? 1.0 : 0.0});
    return table;
}

inline ResultTable solvency_table(const CalibrationPreset& preset, double capability,
                                  double year) {
    const bool solvent = is_solvent(preset.econ, preset.fiscal, capability, year);
    const ThresholdReport report = gamma_star(preset.econ, preset.fiscal, year);
    ResultTable table;
    table.metadata = ubicap::detail::preset_metadata(preset);
    table.metadata.emplace_back("command", "solvency");
    table.columns = {"year", "gamma", "gamma_star", "solvent"};
    table.rows.push_back({year, capability, report.gamma_star, solvent ? 1.0 : 0.0});
    return table;
}

inline ResultTable elasticities_table(const CalibrationPreset& preset, double year) {
    const ThresholdElasticities e = elasticities(preset.econ, preset.fiscal, year);
    const ThresholdReport report = gamma_star(preset.econ, preset.fiscal, year);
    ResultTable table;
    table.metadata = ubicap::detail::preset_metadata(preset);
    table.metadata.emplace_back("command", "elasticities");
    table.columns = {"year",      "gamma_star_unclamped", "dgamma_dtheta", "dgamma_dc",
                     "dgamma_ds", "dgamma_dsigma",        "at_clamp"};
    table.rows.push_back({year, report.gamma_star_unclamped, e.wrt_public_share, e.wrt_cost_share,
                          e.wrt_saving_rate, e.wrt_substitution, e.at_clamp ? 1.0 : 0.0});
    return table;
}

inline ResultTable simulate_table(const CalibrationPreset& preset,
                                  const CapabilityScenario& scenario, double initial_capital,
                                  int years) {
    const SimulationPath path =
        simulate_path(preset.econ, preset.fiscal, scenario, initial_capital, years);
    ResultTable table;
    table.metadata = ubicap::detail::preset_metadata(preset);
    table.metadata.emplace_back("command", "simulate");
    table.metadata.emplace_back("scenario_doubling_years", format_double(scenario.doubling_years));
    table.metadata.emplace_back("initial_capital", format_double(initial_capital));
    table.metadata.emplace_back("truncated", path.truncated ? "true" : "false");
    table.columns = {"year",   "productivity", "gamma",         "capital",
                     "output", "q",            "capital_share", "public_rent_ratio",
                     "gamma_star", "solvent"};
    for (const auto& rec : path.records)
        table.rows.push_back({rec.year, rec.productivity, rec.capability, rec.capital, rec.output,
                              rec.capital_output_ratio, rec.capital_share, rec.public_rent_ratio,
                              rec.threshold, rec.solvent ? 1.0 : 0.0});
    return table;
}

inline ResultTable crossing_table(const CalibrationPreset& preset, double horizon) {
    ResultTable table;
    table.metadata = ubicap::detail::preset_metadata(preset);
    table.metadata.emplace_back("command", "crossing");
    table.metadata.emplace_back("horizon", format_double(horizon));
    table.columns = {"doubling_years", "crossing_year", "crossing_year_first_integer",
                     "threshold_at_crossing", "found"};
    for (const auto& scenario : preset.scenarios) {
        const CrossingResult r = crossing_year(scenario, preset.econ, preset.fiscal, horizon);
        table.rows.push_back({scenario.doubling_years, r.crossing_year_continuous,
                              r.crossing_year_first_integer, r.threshold_at_crossing,
                              r.found ? 1.0 : 0.0});
    }
    return table;
}

} // namespace detail

// Runs the CLI against explicit streams; the binary is a thin wrapper. Keeping
// this callable in-process is what the determinism tests exercise.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AI capability thresholds for a rent-financed universal basic income"};
    app.require_subcommand(1);

    CommonOpts threshold_opts, solvency_opts, elasticity_opts, timeline_opts, competition_opts,
        ownership_opts, simulate_opts, crossing_opts, preset_opts;

    auto* threshold_cmd =
        app.add_subcommand("threshold", "capability threshold report for one year");
    add_common(threshold_cmd, threshold_opts);
    double threshold_year = 2025.0;
    threshold_cmd->add_option("--year", threshold_year, "evaluation year (default 2025)");

    auto* solvency_cmd =
        app.add_subcommand("solvency", "is a given capability level solvent in a given year");
    add_common(solvency_cmd, solvency_opts);
    double solvency_year = 2025.0;
    double solvency_gamma = 1.0;
    solvency_cmd->add_option("--year", solvency_year, "evaluation year (default 2025)");
    solvency_cmd->add_option("--gamma", solvency_gamma, "capability level")->required();

    auto* elasticity_cmd =
        app.add_subcommand("elasticities", "threshold sensitivities to the policy levers");
    add_common(elasticity_cmd, elasticity_opts);
    double elasticity_year = 2025.0;
    elasticity_cmd->add_option("--year", elasticity_year, "evaluation year (default 2025)");

    auto* timeline_cmd =
        app.add_subcommand("timeline", "threshold vs capability scenarios, year by year");
    add_common(timeline_cmd, timeline_opts);
    double timeline_from = 2025.0;
    double timeline_to = 2060.0;
    timeline_cmd->add_option("--from", timeline_from, "first year (default 2025)");
    timeline_cmd->add_option("--to", timeline_to, "last year (default 2060)");

    auto* competition_cmd =
        app.add_subcommand("sweep-competition", "oligopoly threshold vs number of firms");
    add_common(competition_cmd, competition_opts);
    std::vector<int> competition_firms;
    std::vector<double> competition_years;
    competition_cmd->add_option("--firms", competition_firms, "firm counts (default 1..30,50,100,1000)")
        ->delimiter(',');
    competition_cmd
        ->add_option("--years", competition_years, "evaluation years (default 2028,2038,2052)")
        ->delimiter(',');

    auto* ownership_cmd =
        app.add_subcommand("sweep-ownership", "threshold vs public share and operating cost");
    add_common(ownership_cmd, ownership_opts);
    double ownership_year = 2025.0;
    std::vector<double> ownership_costs;
    std::vector<double> ownership_thetas;
    ownership_cmd->add_option("--year", ownership_year, "evaluation year (default 2025)");
    ownership_cmd->add_option("--costs", ownership_costs, "operating-cost values (default 0.5,0.75)")
        ->delimiter(',');
    ownership_cmd
        ->add_option("--theta-grid", ownership_thetas,
                     "public-share grid (default 0.005..1 step 0.005)")
        ->delimiter(',');

    auto* simulate_cmd = app.add_subcommand("simulate", "transition path of capital and output");
    add_common(simulate_cmd, simulate_opts);
    int simulate_years = 35;
    double simulate_k0 = 0.0;
    double simulate_doubling = 0.0;
    simulate_cmd->add_option("--years", simulate_years, "horizon in years (default 35)");
    simulate_cmd->add_option("--k0", simulate_k0,
                             "initial capital (default: balanced-path level)");
    simulate_cmd->add_option("--doubling-years", simulate_doubling,
                             "capability doubling time (default: first preset scenario)");

    auto* crossing_cmd =
        app.add_subcommand("crossing", "year each capability scenario reaches the threshold");
    add_common(crossing_cmd, crossing_opts);
    double crossing_horizon = 2100.0;
    crossing_cmd->add_option("--horizon", crossing_horizon, "last year considered (default 2100)");

    auto* preset_cmd =
        app.add_subcommand("preset", "dump the effective parameter set with provenance");
    add_common(preset_cmd, preset_opts);

    threshold_cmd->callback([&] {
        deliver(detail::threshold_table(resolve_preset(threshold_opts), threshold_year),
                threshold_opts, out);
    });
    solvency_cmd->callback([&] {
        deliver(detail::solvency_table(resolve_preset(solvency_opts), solvency_gamma,
                                       solvency_year),
                solvency_opts, out);
    });
    elasticity_cmd->callback([&] {
        deliver(detail::elasticities_table(resolve_preset(elasticity_opts), elasticity_year),
                elasticity_opts, out);
    });
    timeline_cmd->callback([&] {
        deliver(run_timeline(resolve_preset(timeline_opts), timeline_from, timeline_to),
                timeline_opts, out);
    });
    competition_cmd->callback([&] {
        const CalibrationPreset preset = resolve_preset(competition_opts);
        const std::vector<int> firms =
            competition_firms.empty() ? default_firm_counts() : competition_firms;
        const std::vector<double> years =
            competition_years.empty() ? default_evaluation_years() : competition_years;
        deliver(run_competition_sweep(preset, firms, years), competition_opts, out);
    });
    ownership_cmd->callback([&] {
        const CalibrationPreset preset = resolve_preset(ownership_opts);
        const std::vector<double> thetas =
            ownership_thetas.empty() ? default_theta_grid() : ownership_thetas;
        const std::vector<double> costs = ownership_costs.empty()
                                              ? std::vector<double>{cost_share_low(), cost_share_high()}
                                              : ownership_costs;
        deliver(run_ownership_sweep(preset, thetas, costs, ownership_year), ownership_opts, out);
    });
    simulate_cmd->callback([&] {
        const CalibrationPreset preset = resolve_preset(simulate_opts);
        const CapabilityScenario& first = preset.scenarios.front();
        const CapabilityScenario scenario =
            simulate_doubling > 0.0
                ? CapabilityScenario(first.initial_capability, simulate_doubling, first.start_year)
                : first;
        const double k0 = simulate_k0 > 0.0
                              ? simulate_k0
                              : balanced_initial_capital(preset.econ, scenario.start_year,
                                                         scenario.initial_capability);
        deliver(detail::simulate_table(preset, scenario, k0, simulate_years), simulate_opts, out);
    });
    crossing_cmd->callback([&] {
        deliver(detail::crossing_table(resolve_preset(crossing_opts), crossing_horizon),
                crossing_opts, out);
    });
    preset_cmd->callback([&] {
        const std::string text = to_config_string(resolve_preset(preset_opts));
        if (preset_opts.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(preset_opts.out_path);
            if (!file) throw io_error("cannot open output file: " + preset_opts.out_path);
            file << text;
            file.flush();
            if (!file) throw io_error("failed writing output file: " + preset_opts.out_path);
        }
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ubicap");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ubicap::cli
