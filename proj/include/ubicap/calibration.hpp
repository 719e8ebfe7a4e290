#pragma once

// The 2025 U.S. calibration as a provenance-annotated preset, derivation
// helpers for parameters computed from published statistics, and validated
// loading of user-supplied parameter files.
//
// Parameter files are flat `key = value` text, one key per line, `#` starts a
// comment. An inline comment doubles as the value's provenance string.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ubicap/dynamics.hpp"
#include "ubicap/economy.hpp"
#include "ubicap/errors.hpp"
#include "ubicap/format.hpp"
#include "ubicap/thresholds.hpp"

namespace ubicap {

struct CalibrationPreset {
    EconomyParams econ;
    FiscalParams fiscal;
    MarketStructure market;
    std::vector<CapabilityScenario> scenarios;
    std::map<std::string, std::string> provenance;  // keyed by parameter name

    bool operator==(const CalibrationPreset&) const = default;
};

// Parameter names in canonical file order.
inline const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "s",         "g",       "delta",   "alpha_bar", "sigma",
        "A0",        "base_year", "L",     "theta_pub", "c",
        "b_ratio",   "phi",     "epsilon", "conduct",   "gamma0",
        "doubling_years", "start_year"};
    return keys;
}

// Baseline U.S. calibration, 2025 scenarios anchored on a 2024 productivity
// index reading. Every value carries the citation it was taken from.
inline CalibrationPreset preset_us_2025() {
    CalibrationPreset preset{
        EconomyParams(0.22, 0.011, 0.056, 0.42, 0.66, 1.068, 2024.0, 1.0),
        FiscalParams(0.145, 0.6, 0.11, 1.0),
        MarketStructure(1.0, 0.0),
        {CapabilityScenario(1.0, 1.0, 2025.0), CapabilityScenario(1.0, 2.0, 2025.0),
         CapabilityScenario(1.0, 5.0, 2025.0), CapabilityScenario(1.0, 10.0, 2025.0)},
        {
            {"s", "World Bank: U.S. gross capital formation ~22% of GDP (2023)"},
            {"g", "CBO: projected ~1.1%/yr total factor productivity, nonfarm business, 2024-2034"},
            {"delta", "BEA: 2023 current-cost depreciation $3.81T over year-end net stock $68.10T"},
            {"alpha_bar", "WEF Future of Jobs 2023: 42% of business tasks expected automated by 2027"},
            {"sigma", "Knoblach-Roessler-Zwerschke: U.S. substitution elasticity in [0.45, 0.87]; midpoint"},
            {"A0", "FRED MFPNFBS: 2024 multifactor productivity index 106.847 (2017=100), level form"},
            {"base_year", "calendar year of the A0 index reading"},
            {"L", "labor endowment, normalized"},
            {"theta_pub", "GAO: effective federal corporate tax rate 13-16%; midpoint 14.5%"},
            {"c", "Sacra: OpenAI near 40% gross margin, cost share ~0.6; alternates 0.50 and 0.75"},
            {"b_ratio", "UBI Center adult UBI ~$3.1T against BEA 2024Q3 GDP $29.35T, rounded to 11%"},
            {"phi", "full capture of the public rent claim; no leakage"},
            {"epsilon", "UK DSIT 2023: consumer-tech demand elasticities cluster 0.5-1.5; midpoint 1"},
            {"conduct", "competitive benchmark; no market-power adjustment"},
            {"gamma0", "conservative 2025 anchor: no aggregate boost beyond pre-AI automation"},
            {"doubling_years", "capability doubling scenarios of 1, 2, 5, and 10 years"},
            {"start_year", "scenario anchor year"},
        }};
    return preset;
}

// Named operating-cost alternates: the efficient regime and the heavy
// oversight regime.
inline double cost_share_low() { return 0.50; }
inline double cost_share_high() { return 0.75; }

inline double derive_delta(double depreciation_flow, double net_stock) {
    if (!(depreciation_flow > 0.0))
        throw domain_error("depreciation flow must be > 0, got " +
                           format_double(depreciation_flow));
    if (!(net_stock > 0.0))
        throw domain_error("net stock must be > 0, got " + format_double(net_stock));
    const double ratio = depreciation_flow / net_stock;
    if (ratio >= 1.0)
        throw domain_error("implausible depreciation: flow/stock = " + format_double(ratio) +
                           " is not below 1");
    return ratio;
}

inline double derive_A0(double index_value, double index_base) {
    if (!(index_value > 0.0))
        throw domain_error("index value must be > 0, got " + format_double(index_value));
    if (!(index_base > 0.0))
        throw domain_error("index base must be > 0, got " + format_double(index_base));
    return index_value / index_base;
}

inline double derive_b_ratio(double transfer_cost, double gdp) {
    if (!(transfer_cost > 0.0))
        throw domain_error("transfer cost must be > 0, got " + format_double(transfer_cost));
    if (!(gdp > 0.0)) throw domain_error("gdp must be > 0, got " + format_double(gdp));
    const double ratio = transfer_cost / gdp;
    if (ratio >= 1.0)
        throw domain_error("implausible transfer: cost/gdp = " + format_double(ratio) +
                           " is not below 1");
    return ratio;
}

struct ConfigEntry {
    std::string value;       // raw text, numeric literal or comma-separated list
    std::string provenance;  // inline comment if present, else the source location
};

using ConfigMap = std::map<std::string, ConfigEntry>;

namespace detail {

inline std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

inline bool known_key(const std::string& key) {
    for (const auto& k : config_keys())
        if (k == key) return true;
    return false;
}

inline std::vector<double> parse_number_list(const std::string& text, const std::string& context) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            trim(std::string_view(text).substr(pos, (comma == std::string::npos ? text.size() : comma) - pos));
        out.push_back(parse_double(token, context));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// Parses `key = value` lines. Unknown and duplicate keys are errors; every
// problem in the file is reported, not just the first.
inline ConfigMap parse_config_text(std::string_view text, const std::string& source) {
    ConfigMap entries;
    std::vector<std::string> problems;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineno;

        std::string comment;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            comment = detail::trim(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        const std::string body = detail::trim(line);
        if (body.empty()) continue;

        const std::string where = source + ":" + std::to_string(lineno);
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            problems.push_back(where + ": expected 'key = value', got '" + body + "'");
            continue;
        }
        const std::string key = detail::trim(std::string_view(body).substr(0, eq));
        const std::string value = detail::trim(std::string_view(body).substr(eq + 1));
        if (!detail::known_key(key)) {
            problems.push_back(where + ": unknown key '" + key + "'");
            continue;
        }
        if (entries.count(key)) {
            problems.push_back(where + ": duplicate key '" + key + "'");
            continue;
        }
        if (value.empty()) {
            problems.push_back(where + ": empty value for key '" + key + "'");
            continue;
        }
        entries[key] = ConfigEntry{value, comment.empty() ? where : comment};
    }
    if (!problems.empty()) throw validation_error(std::move(problems));
    return entries;
}

// Builds a preset from overrides; keys absent from the map fall back to the
// baseline values with provenance "default". All bound violations across all
// blocks are reported together.
inline CalibrationPreset preset_from_config(const ConfigMap& overrides) {
    const CalibrationPreset base = preset_us_2025();

    double s = base.econ.saving_rate;
    double g = base.econ.growth_rate;
    double delta = base.econ.depreciation;
    double alpha_bar = base.econ.automated_share;
    double sigma = base.econ.substitution_elasticity;
    double A0 = base.econ.base_productivity;
    double base_year = base.econ.base_year;
    double L = base.econ.labor;
    double theta_pub = base.fiscal.public_share;
    double c = base.fiscal.cost_share;
    double b_ratio = base.fiscal.transfer_ratio;
    double phi = base.fiscal.profit_capture;
    double epsilon = base.market.demand_elasticity;
    double conduct = base.market.conduct;
    double gamma0 = base.scenarios.front().initial_capability;
    double start_year = base.scenarios.front().start_year;
    std::vector<double> doubling;
    for (const auto& sc : base.scenarios) doubling.push_back(sc.doubling_years);

    std::map<std::string, std::string> provenance;
    for (const auto& key : config_keys()) provenance[key] = "default";

    std::vector<std::string> problems;
    auto scalar = [&](const char* key, double& slot) {
        const auto it = overrides.find(key);
        if (it == overrides.end()) return;
        try {
            slot = parse_double(it->second.value, std::string("key '") + key + "'");
            provenance[key] = it->second.provenance;
        } catch (const validation_error& e) {
            for (const auto& v : e.violations()) problems.push_back(v);
        }
    };
    scalar("s", s);
    scalar("g", g);
    scalar("delta", delta);
    scalar("alpha_bar", alpha_bar);
    scalar("sigma", sigma);
    scalar("A0", A0);
    scalar("base_year", base_year);
    scalar("L", L);
    scalar("theta_pub", theta_pub);
    scalar("c", c);
    scalar("b_ratio", b_ratio);
    scalar("phi", phi);
    scalar("epsilon", epsilon);
    scalar("conduct", conduct);
    scalar("gamma0", gamma0);
    scalar("start_year", start_year);
    if (const auto it = overrides.find("doubling_years"); it != overrides.end()) {
        try {
            doubling = detail::parse_number_list(it->second.value, "key 'doubling_years'");
            provenance["doubling_years"] = it->second.provenance;
        } catch (const validation_error& e) {
            for (const auto& v : e.violations()) problems.push_back(v);
        }
    }
    if (!problems.empty()) throw validation_error(std::move(problems));

    std::vector<std::string> bad;
    auto append = [&bad](std::vector<std::string> more) {
        for (auto& m : more) bad.push_back(std::move(m));
    };
    append(EconomyParams::check(s, g, delta, alpha_bar, sigma, A0, base_year, L));
    append(FiscalParams::check(theta_pub, c, b_ratio, phi));
    append(MarketStructure::check(epsilon, conduct));
    if (doubling.empty()) bad.push_back("doubling_years must list at least one value");
    detail::require_in(bad, gamma0 >= 1.0 && std::isfinite(gamma0),
                       "gamma0 must be finite and >= 1", gamma0);
    detail::require_in(bad, std::isfinite(start_year), "start_year must be finite", start_year);
    for (const double d : doubling)
        detail::require_in(bad, d > 0.0, "doubling_years must be > 0", d);
    if (!bad.empty()) throw validation_error(std::move(bad));

    std::vector<CapabilityScenario> scenarios;
    for (const double d : doubling) scenarios.emplace_back(gamma0, d, start_year);
    return CalibrationPreset{
        EconomyParams(s, g, delta, alpha_bar, sigma, A0, base_year, L),
        FiscalParams(theta_pub, c, b_ratio, phi),
        MarketStructure(epsilon, conduct),
        std::move(scenarios),
        std::move(provenance),
    };
}

inline CalibrationPreset load_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open parameter file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw io_error("failed reading parameter file: " + path.string());
    return preset_from_config(parse_config_text(buffer.str(), path.string()));
}

namespace detail {

inline std::string config_value(const CalibrationPreset& p, const std::string& key) {
    if (key == "s") return format_double(p.econ.saving_rate);
    if (key == "g") return format_double(p.econ.growth_rate);
    if (key == "delta") return format_double(p.econ.depreciation);
    if (key == "alpha_bar") return format_double(p.econ.automated_share);
    if (key == "sigma") return format_double(p.econ.substitution_elasticity);
    if (key == "A0") return format_double(p.econ.base_productivity);
    if (key == "base_year") return format_double(p.econ.base_year);
    if (key == "L") return format_double(p.econ.labor);
    if (key == "theta_pub") return format_double(p.fiscal.public_share);
    if (key == "c") return format_double(p.fiscal.cost_share);
    if (key == "b_ratio") return format_double(p.fiscal.transfer_ratio);
    if (key == "phi") return format_double(p.fiscal.profit_capture);
    if (key == "epsilon") return format_double(p.market.demand_elasticity);
    if (key == "conduct") return format_double(p.market.conduct);
    if (key == "gamma0") return format_double(p.scenarios.front().initial_capability);
    if (key == "doubling_years") {
        std::string joined;
        for (const auto& sc : p.scenarios) {
            if (!joined.empty()) joined += ", ";
            joined += format_double(sc.doubling_years);
        }
        return joined;
    }
    if (key == "start_year") return format_double(p.scenarios.front().start_year);
    throw domain_error("no config value for key '" + key + "'");
}

} // namespace detail

// Serializes a preset as a loadable parameter file. Provenance strings ride
// along as inline comments, so load(serialize(p)) == p including provenance.
inline std::string to_config_string(const CalibrationPreset& preset) {
    std::vector<std::string> bad;
    if (preset.scenarios.empty()) bad.push_back("preset has no capability scenarios");
    for (const auto& key : config_keys()) {
        const auto it = preset.provenance.find(key);
        if (it == preset.provenance.end() || it->second.empty())
            bad.push_back("missing provenance for parameter '" + key + "'");
    }
    if (!bad.empty()) throw validation_error(std::move(bad));

    std::string out;
    for (const auto& key : config_keys()) {
        out += key;
        out += " = ";
        out += detail::config_value(preset, key);
        out += "  # ";
        out += preset.provenance.at(key);
        out += "\n";
    }
    return out;
}

} // namespace ubicap
