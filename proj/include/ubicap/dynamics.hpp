#pragma once

// Capability trajectories, threshold time series, transition paths of the
// capital stock, and the year capability first crosses the UBI threshold.

#include <cmath>
#include <limits>
#include <vector>

#include "ubicap/economy.hpp"
#include "ubicap/errors.hpp"
#include "ubicap/thresholds.hpp"

namespace ubicap {

// Exponential capability scenario: doubling every doubling_years from the
// anchor level. doubling_years = +inf freezes capability at its initial value.
struct CapabilityScenario {
    double initial_capability;  // gamma0
    double doubling_years;
    double start_year;

    CapabilityScenario(double initial_capability_, double doubling_years_, double start_year_)
        : initial_capability(initial_capability_),
          doubling_years(doubling_years_),
          start_year(start_year_) {
        auto bad = check(initial_capability, doubling_years, start_year);
        if (!bad.empty()) throw validation_error(std::move(bad));
    }

    bool operator==(const CapabilityScenario&) const = default;

    static std::vector<std::string> check(double gamma0, double doubling_years,
                                          double start_year) {
        std::vector<std::string> bad;
        detail::require_in(bad, gamma0 >= 1.0 && std::isfinite(gamma0),
                           "gamma0 must be finite and >= 1", gamma0);
        detail::require_in(bad, doubling_years > 0.0,
                           "doubling_years must be > 0", doubling_years);
        detail::require_in(bad, std::isfinite(start_year), "start_year must be finite",
                           start_year);
        return bad;
    }
};

// No backcasting: the scenario says nothing about capability before its anchor.
inline double gamma_at(const CapabilityScenario& scenario, double year) {
    if (!(year >= scenario.start_year))
        throw domain_error("year " + format_double(year) + " precedes scenario start " +
                           format_double(scenario.start_year));
    return scenario.initial_capability *
           std::pow(2.0, (year - scenario.start_year) / scenario.doubling_years);
}

// Per-year threshold reports at unit steps from year_from while <= year_to.
// With g > 0 the series grows at the continuous rate (1 - sigma) g.
inline std::vector<ThresholdReport> threshold_series(const EconomyParams& econ,
                                                     const FiscalParams& fiscal, double year_from,
                                                     double year_to) {
    if (!(year_from <= year_to))
        throw domain_error("year range is empty: " + format_double(year_from) + " > " +
                           format_double(year_to));
    const int count = static_cast<int>(std::floor(year_to - year_from)) + 1;
    std::vector<ThresholdReport> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(gamma_star(econ, fiscal, year_from + i));
    return out;
}

struct CrossingResult {
    double crossing_year_continuous;    // NaN when not found
    double crossing_year_first_integer; // first calendar year with gamma >= gamma*
    double threshold_at_crossing;
    bool found;
};

// Both capability and the threshold are exponentials in time, so
// log gamma_t - log gamma*_t is linear and the crossing has a closed form.
// No crossing exists when capability grows no faster than the threshold
// (ln 2 / T_d <= (1 - sigma) g) and starts below it.
inline CrossingResult crossing_year(const CapabilityScenario& scenario, const EconomyParams& econ,
                                    const FiscalParams& fiscal, double horizon_year) {
    if (!(horizon_year > scenario.start_year))
        throw domain_error("horizon " + format_double(horizon_year) +
                           " must lie beyond the scenario start " +
                           format_double(scenario.start_year));

    CrossingResult result;
    result.crossing_year_continuous = std::numeric_limits<double>::quiet_NaN();
    result.crossing_year_first_integer = std::numeric_limits<double>::quiet_NaN();
    result.threshold_at_crossing = std::numeric_limits<double>::quiet_NaN();
    result.found = false;

    const ThresholdReport at_start = gamma_star(econ, fiscal, scenario.start_year);
    double when = std::numeric_limits<double>::quiet_NaN();
    if (scenario.initial_capability >= at_start.gamma_star_unclamped) {
        when = scenario.start_year;
    } else {
        const double capability_rate = std::log(2.0) / scenario.doubling_years;
        const double threshold_rate = (1.0 - econ.substitution_elasticity) * econ.growth_rate;
        const double slope = capability_rate - threshold_rate;
        if (slope <= 0.0) return result;
        const double log_gap =
            std::log(at_start.gamma_star_unclamped) - std::log(scenario.initial_capability);
        when = scenario.start_year + log_gap / slope;
    }
    if (when > horizon_year) return result;

    result.found = true;
    result.crossing_year_continuous = when;
    result.threshold_at_crossing = gamma_star(econ, fiscal, when).gamma_star;

    // First integer calendar year on or after the continuous crossing; nudge
    // down one year in case the crossing itself computed a hair above an
    // integer solution.
    double year = std::max(std::ceil(scenario.start_year), std::ceil(when) - 1.0);
    while (year < scenario.start_year ||
           gamma_at(scenario, year) <
               gamma_star(econ, fiscal, year).gamma_star_unclamped * (1.0 - 1e-12)) {
        year += 1.0;
    }
    result.crossing_year_first_integer = year;
    return result;
}

struct PathRecord {
    double year;
    double productivity;          // A_t
    double capability;            // gamma_t
    double capital;               // K_t
    double output;                // Y_t
    double capital_output_ratio;  // q_t = K_t / Y_t
    double capital_share;         // R_t at the path's own q_t
    double public_rent_ratio;     // phi theta_pub (1-c) R_t
    double threshold;             // gamma*_t (steady-state formula, clamped)
    bool solvent;                 // gamma_t >= unclamped gamma*_t
};

struct SimulationPath {
    std::vector<PathRecord> records;
    bool truncated = false;  // capital or output left (0, 1e300) before the horizon
};

// Full nonlinear transition: output from the CES technology each year, capital
// from the Solow rule. Records year start_year + 0 .. start_year + years.
inline SimulationPath simulate_path(const EconomyParams& econ, const FiscalParams& fiscal,
                                    const CapabilityScenario& scenario, double initial_capital,
                                    int years) {
    if (!(initial_capital > 0.0))
        throw domain_error("initial capital must be > 0, got " + format_double(initial_capital));
    if (years < 1)
        throw domain_error("years must be >= 1, got " + format_double(years));

    constexpr double overflow_guard = 1e300;
    SimulationPath path;
    path.records.reserve(static_cast<std::size_t>(years) + 1);
    double capital = initial_capital;
    for (int i = 0; i <= years; ++i) {
        const double year = scenario.start_year + i;
        const double capability = gamma_at(scenario, year);
        if (!(capital > 0.0 && capital < overflow_guard)) {
            path.truncated = true;
            break;
        }
        // Output can also degenerate to zero when capability outruns the
        // capital stock (the automated block overwhelms the aggregate), so
        // guard both directions.
        const double output = ces_output(econ, {year, capital, capability});
        if (!(output > 0.0 && output < overflow_guard)) {
            path.truncated = true;
            break;
        }
        const ThresholdReport report = gamma_star(econ, fiscal, year);
        PathRecord rec;
        rec.year = year;
        rec.productivity = hicks_productivity(econ, year);
        rec.capability = capability;
        rec.capital = capital;
        rec.output = output;
        rec.capital_output_ratio = capital / output;
        rec.capital_share = capital_income_share(econ, capability, rec.capital_output_ratio, year);
        rec.public_rent_ratio = fiscal.profit_capture * fiscal.public_share *
                                (1.0 - fiscal.cost_share) * rec.capital_share;
        rec.threshold = report.gamma_star;
        rec.solvent = capability >= report.gamma_star_unclamped * (1.0 - 1e-12);
        path.records.push_back(rec);
        capital = solow_step(econ, capital, output);
    }
    return path;
}

// n applications of the affine ratio map; returns the n+1 iterates including
// the start. The error decays geometrically with exact factor (1-delta)/e^g.
inline std::vector<double> q_iterate(const EconomyParams& econ, double q0, int n) {
    if (!(q0 > 0.0))
        throw domain_error("capital-output ratio must be > 0, got " + format_double(q0));
    if (n < 0) throw domain_error("iteration count must be >= 0, got " + format_double(n));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(q0);
    double q = q0;
    for (int i = 0; i < n; ++i) {
        q = q_update(econ, q);
        out.push_back(q);
    }
    return out;
}

// Capital on the balanced path at the given year: solves K = kappa * Y(K) by
// fixed-point iteration (the map's slope at the solution is the capital share,
// well below 1).
inline double balanced_initial_capital(const EconomyParams& econ, double year,
                                       double capability) {
    const double kappa = steady_state_kappa(econ);
    double capital = kappa;
    for (int i = 0; i < 200; ++i)
        capital = kappa * ces_output(econ, {year, capital, capability});
    return capital;
}

} // namespace ubicap
