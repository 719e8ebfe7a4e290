#pragma once

// Sweep engine behind the headline figures: capability-vs-threshold timeline,
// competition (firm count) sweep, and the ownership/cost trade-off grid.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ubicap/calibration.hpp"
#include "ubicap/dynamics.hpp"
#include "ubicap/table.hpp"
#include "ubicap/thresholds.hpp"
#include "ubicap/version.hpp"

namespace ubicap {

struct SweepSpec {
    enum class Kind { timeline, competition, ownership };

    Kind kind;
    double year_from = 0.0;               // timeline
    double year_to = 0.0;                 // timeline
    std::vector<int> firm_counts;         // competition
    std::vector<double> evaluation_years; // competition
    std::vector<double> theta_grid;       // ownership
    std::vector<double> cost_values;      // ownership
    double year = 0.0;                    // ownership

    static SweepSpec timeline(double from, double to) {
        if (!(from <= to))
            throw domain_error("year range is empty: " + format_double(from) + " > " +
                               format_double(to));
        SweepSpec spec;
        spec.kind = Kind::timeline;
        spec.year_from = from;
        spec.year_to = to;
        return spec;
    }

    static SweepSpec competition(std::vector<int> firms, std::vector<double> years) {
        std::vector<std::string> bad;
        if (firms.empty()) bad.push_back("firm counts must be non-empty");
        if (years.empty()) bad.push_back("evaluation years must be non-empty");
        for (std::size_t i = 0; i < firms.size(); ++i) {
            if (firms[i] < 1)
                bad.push_back("firm count must be >= 1, got " + std::to_string(firms[i]));
            if (i && firms[i] <= firms[i - 1])
                bad.push_back("firm counts must be strictly increasing");
        }
        for (std::size_t i = 1; i < years.size(); ++i)
            if (years[i] <= years[i - 1]) bad.push_back("evaluation years must be strictly increasing");
        if (!bad.empty()) throw validation_error(std::move(bad));
        SweepSpec spec;
        spec.kind = Kind::competition;
        spec.firm_counts = std::move(firms);
        spec.evaluation_years = std::move(years);
        return spec;
    }

    static SweepSpec ownership(std::vector<double> thetas, std::vector<double> costs,
                               double year) {
        std::vector<std::string> bad;
        if (thetas.empty()) bad.push_back("theta grid must be non-empty");
        if (costs.empty()) bad.push_back("cost values must be non-empty");
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            if (!(thetas[i] > 0.0 && thetas[i] <= 1.0))
                bad.push_back("theta grid values must lie in (0, 1], got " +
                              format_double(thetas[i]));
            if (i && thetas[i] <= thetas[i - 1]) bad.push_back("theta grid must be strictly increasing");
        }
        for (std::size_t i = 0; i < costs.size(); ++i) {
            if (!(costs[i] >= 0.0 && costs[i] < 1.0))
                bad.push_back("cost values must lie in [0, 1), got " + format_double(costs[i]));
            if (i && costs[i] <= costs[i - 1]) bad.push_back("cost values must be strictly increasing");
        }
        if (!bad.empty()) throw validation_error(std::move(bad));
        SweepSpec spec;
        spec.kind = Kind::ownership;
        spec.theta_grid = std::move(thetas);
        spec.cost_values = std::move(costs);
        spec.year = year;
        return spec;
    }
};

// Dense enough for the steep low-m part of the competition curve, plus a few
// large counts to pin the competitive asymptote.
inline std::vector<int> default_firm_counts() {
    std::vector<int> counts;
    for (int m = 1; m <= 30; ++m) counts.push_back(m);
    counts.push_back(50);
    counts.push_back(100);
    counts.push_back(1000);
    return counts;
}

inline std::vector<double> default_evaluation_years() { return {2028.0, 2038.0, 2052.0}; }

// Theta from 0.005 to 1 in 0.005 steps (built as i/200 so grid points are the
// correctly rounded doubles of the printed values).
inline std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    grid.reserve(200);
    for (int i = 1; i <= 200; ++i) grid.push_back(static_cast<double>(i) / 200.0);
    return grid;
}

namespace detail {

inline std::vector<std::pair<std::string, std::string>> preset_metadata(
    const CalibrationPreset& preset) {
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("tool", "ubicap " UBICAP_VERSION);
    for (const auto& key : config_keys()) meta.emplace_back(key, config_value(preset, key));
    return meta;
}

inline std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (const double v : values) {
        if (!out.empty()) out += ", ";
        out += format_double(v);
    }
    return out;
}

} // namespace detail

// Year-by-year threshold against every capability scenario, with each
// scenario's crossing year summarized in the metadata block.
inline ResultTable run_timeline(const CalibrationPreset& preset, double year_from,
                                double year_to) {
    const SweepSpec spec = SweepSpec::timeline(year_from, year_to);
    for (const auto& scenario : preset.scenarios)
        if (scenario.start_year < year_from || scenario.start_year > year_to)
            throw domain_error("timeline range [" + format_double(year_from) + ", " +
                               format_double(year_to) + "] must cover scenario start year " +
                               format_double(scenario.start_year));

    ResultTable table;
    table.metadata = detail::preset_metadata(preset);
    table.metadata.emplace_back("sweep", "timeline");
    table.metadata.emplace_back("year_from", format_double(spec.year_from));
    table.metadata.emplace_back("year_to", format_double(spec.year_to));
    for (const auto& scenario : preset.scenarios) {
        const std::string tag = format_double(scenario.doubling_years);
        std::string continuous = "none";
        std::string first_integer = "none";
        if (year_to > scenario.start_year) {
            const CrossingResult crossing =
                crossing_year(scenario, preset.econ, preset.fiscal, year_to);
            if (crossing.found) {
                continuous = format_double(crossing.crossing_year_continuous);
                first_integer = format_double(crossing.crossing_year_first_integer);
            }
        } else if (scenario.initial_capability >=
                   gamma_star(preset.econ, preset.fiscal, scenario.start_year)
                       .gamma_star_unclamped) {
            // degenerate single-point range: crossed iff already at or above
            // the threshold on the anchor year
            continuous = format_double(scenario.start_year);
            first_integer = format_double(std::ceil(scenario.start_year));
        }
        table.metadata.emplace_back("crossing_year_doubling_" + tag, continuous);
        table.metadata.emplace_back("crossing_first_year_doubling_" + tag, first_integer);
    }

    table.columns.push_back("year");
    table.columns.push_back("gamma_star");
    for (const auto& scenario : preset.scenarios)
        table.columns.push_back("gamma_doubling_" + format_double(scenario.doubling_years));

    const auto thresholds = threshold_series(preset.econ, preset.fiscal, year_from, year_to);
    for (const auto& report : thresholds) {
        std::vector<double> row{report.year, report.gamma_star};
        for (const auto& scenario : preset.scenarios)
            row.push_back(report.year >= scenario.start_year
                              ? gamma_at(scenario, report.year)
                              : std::numeric_limits<double>::quiet_NaN());
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Oligopoly threshold as the number of symmetric firms rises (conduct = 1/m),
// one column per evaluation year.
inline ResultTable run_competition_sweep(const CalibrationPreset& preset,
                                         const std::vector<int>& firm_counts,
                                         const std::vector<double>& evaluation_years) {
    const SweepSpec spec = SweepSpec::competition(firm_counts, evaluation_years);

    ResultTable table;
    table.metadata = detail::preset_metadata(preset);
    table.metadata.emplace_back("sweep", "competition");
    {
        std::string joined;
        for (const int m : spec.firm_counts) {
            if (!joined.empty()) joined += ", ";
            joined += std::to_string(m);
        }
        table.metadata.emplace_back("firm_counts", joined);
    }
    table.metadata.emplace_back("evaluation_years", detail::join_numbers(spec.evaluation_years));

    table.columns.push_back("m");
    table.columns.push_back("theta");
    for (const double year : spec.evaluation_years)
        table.columns.push_back("gamma_star_oligo_" + format_double(year));

    for (const int m : spec.firm_counts) {
        const double conduct = 1.0 / static_cast<double>(m);
        const MarketStructure market(preset.market.demand_elasticity, conduct);
        std::vector<double> row{static_cast<double>(m), conduct};
        for (const double year : spec.evaluation_years)
            row.push_back(gamma_star_oligo(preset.econ, preset.fiscal, market, year).gamma_star);
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Threshold across the public-share grid, one column per operating-cost value.
// The preset's own public share is inserted into the grid as the marker row.
inline ResultTable run_ownership_sweep(const CalibrationPreset& preset,
                                       std::vector<double> theta_grid,
                                       const std::vector<double>& cost_values, double year) {
    const double marker = preset.fiscal.public_share;
    const bool has_marker =
        std::any_of(theta_grid.begin(), theta_grid.end(),
                    [marker](double theta) { return std::abs(theta - marker) <= 1e-12; });
    if (!has_marker) {
        theta_grid.push_back(marker);
        std::sort(theta_grid.begin(), theta_grid.end());
    }
    const SweepSpec spec = SweepSpec::ownership(std::move(theta_grid), cost_values, year);

    ResultTable table;
    table.metadata = detail::preset_metadata(preset);
    table.metadata.emplace_back("sweep", "ownership");
    table.metadata.emplace_back("year", format_double(spec.year));
    table.metadata.emplace_back("marker_theta", format_double(marker));
    table.metadata.emplace_back("cost_values", detail::join_numbers(spec.cost_values));
    table.metadata.emplace_back("theta_grid", detail::join_numbers(spec.theta_grid));

    table.columns.push_back("theta");
    for (const double cost : spec.cost_values)
        table.columns.push_back("gamma_star_c_" + format_double(cost));

    for (const double theta : spec.theta_grid) {
        std::vector<double> row{theta};
        for (const double cost : spec.cost_values) {
            const FiscalParams fiscal(theta, cost, preset.fiscal.transfer_ratio,
                                      preset.fiscal.profit_capture);
            row.push_back(gamma_star(preset.econ, fiscal, spec.year).gamma_star);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace ubicap
