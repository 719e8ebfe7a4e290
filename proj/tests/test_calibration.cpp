#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "ubicap/calibration.hpp"

using namespace ubicap;

namespace {

// Unique scratch file per test run; removed on destruction.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& name, const std::string& contents)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("baseline preset carries the documented values") {
    const CalibrationPreset p = preset_us_2025();
    REQUIRE(p.econ.saving_rate == 0.22);
    REQUIRE(p.econ.growth_rate == 0.011);
    REQUIRE(p.econ.depreciation == 0.056);
    REQUIRE(p.econ.automated_share == 0.42);
    REQUIRE(p.econ.substitution_elasticity == 0.66);
    REQUIRE(p.econ.base_productivity == 1.068);
    REQUIRE(p.econ.base_year == 2024.0);
    REQUIRE(p.econ.labor == 1.0);
    REQUIRE(p.fiscal.public_share == 0.145);
    REQUIRE(p.fiscal.cost_share == 0.6);
    REQUIRE(p.fiscal.transfer_ratio == 0.11);
    REQUIRE(p.fiscal.profit_capture == 1.0);
    REQUIRE(p.market.demand_elasticity == 1.0);
    REQUIRE(p.market.conduct == 0.0);

    REQUIRE(p.scenarios.size() == 4);
    const double doublings[] = {1.0, 2.0, 5.0, 10.0};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(p.scenarios[i].initial_capability == 1.0);
        REQUIRE(p.scenarios[i].doubling_years == doublings[i]);
        REQUIRE(p.scenarios[i].start_year == 2025.0);
    }

    REQUIRE(cost_share_low() == 0.50);
    REQUIRE(cost_share_high() == 0.75);
}

TEST_CASE("baseline preset derived quantities") {
    const CalibrationPreset p = preset_us_2025();
    REQUIRE(std::abs(p.econ.curvature() - (-0.52)) < 5e-3);
    REQUIRE(rel_err(steady_state_kappa(p.econ), 3.2806088568663054) < 1e-12);
    const double threshold = gamma_star(p.econ, p.fiscal, 2025.0).gamma_star;
    REQUIRE(threshold > 5.0);
    REQUIRE(threshold < 6.0);
}

TEST_CASE("every preset parameter carries a non-empty provenance string") {
    const CalibrationPreset p = preset_us_2025();
    for (const auto& key : config_keys()) {
        REQUIRE(p.provenance.count(key) == 1);
        REQUIRE_FALSE(p.provenance.at(key).empty());
    }
}

TEST_CASE("derivation helpers reproduce the documented inputs") {
    REQUIRE(rel_err(derive_delta(3.81, 68.10), 0.055947136563876655) < 1e-15);
    REQUIRE(derive_delta(1.0, 20.0) == 0.05);
    REQUIRE_THROWS_AS(derive_delta(5.0, 5.0), domain_error);   // ratio of 1
    REQUIRE_THROWS_AS(derive_delta(0.0, 5.0), domain_error);

    REQUIRE(rel_err(derive_A0(106.847, 100.0), 1.06847) < 1e-15);
    REQUIRE(derive_A0(100.0, 100.0) == 1.0);
    REQUIRE(derive_A0(214.0, 100.0) == 2.14);
    REQUIRE_THROWS_AS(derive_A0(-1.0, 100.0), domain_error);

    REQUIRE(rel_err(derive_b_ratio(3.1, 29.35), 0.10562180579216354) < 1e-15);
    REQUIRE(derive_b_ratio(1.0, 10.0) == 0.1);
    REQUIRE_THROWS_AS(derive_b_ratio(0.0, 10.0), domain_error);
    REQUIRE_THROWS_AS(derive_b_ratio(12.0, 10.0), domain_error);

    // the preset's rounded entries stay within documentation distance of the
    // raw derivations
    const CalibrationPreset p = preset_us_2025();
    REQUIRE(std::abs(p.econ.depreciation - derive_delta(3.81, 68.10)) < 5e-4);
    REQUIRE(std::abs(p.econ.base_productivity - derive_A0(106.847, 100.0)) < 5e-4);
    REQUIRE(std::abs(p.fiscal.transfer_ratio - derive_b_ratio(3.1, 29.35)) < 5e-3);
}

TEST_CASE("loading a file that overrides one key keeps the other defaults") {
    const TempFile file("ubicap_test_s.cfg", "s = 0.4\n");
    const CalibrationPreset p = load_params(file.path);
    REQUIRE(p.econ.saving_rate == 0.4);
    REQUIRE(p.econ.substitution_elasticity == 0.66);
    REQUIRE(p.fiscal.transfer_ratio == 0.11);
    REQUIRE(rel_err(steady_state_kappa(p.econ), 5.9647433761205555) < 1e-12);
    REQUIRE(p.provenance.at("s") != "default");
    REQUIRE(p.provenance.at("g") == "default");
}

TEST_CASE("an empty file yields the full default preset") {
    const TempFile file("ubicap_test_empty.cfg", "");
    const CalibrationPreset p = load_params(file.path);
    const CalibrationPreset base = preset_us_2025();
    REQUIRE(p.econ == base.econ);
    REQUIRE(p.fiscal == base.fiscal);
    REQUIRE(p.market == base.market);
    REQUIRE(p.scenarios == base.scenarios);
    for (const auto& key : config_keys()) REQUIRE(p.provenance.at(key) == "default");
}

TEST_CASE("violations are reported together and name their bounds") {
    const TempFile file("ubicap_test_bad.cfg", "sigma = 1.2\nc = 1.5\n");
    try {
        load_params(file.path);
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        REQUIRE(e.violations().size() == 2);
        REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("sigma must lie in (0, 1)"));
        REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("c must lie in [0, 1)"));
    }
}

TEST_CASE("unknown keys, duplicates, and malformed lines are parse errors") {
    try {
        parse_config_text("sgima = 0.5\n", "test");
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("unknown key 'sgima'"));
        REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("test:1"));
    }
    REQUIRE_THROWS_AS(parse_config_text("s = 0.2\ns = 0.3\n", "test"), validation_error);
    REQUIRE_THROWS_AS(parse_config_text("just words\n", "test"), validation_error);
    // values are only parsed as numbers when the preset is built
    REQUIRE_THROWS_AS(preset_from_config(parse_config_text("s = banana\n", "t")),
                      validation_error);

    // comments and blank lines are fine
    const ConfigMap ok = parse_config_text("# comment\n\n  s = 0.3  # world bank\n", "test");
    REQUIRE(ok.at("s").value == "0.3");
    REQUIRE(ok.at("s").provenance == "world bank");
}

TEST_CASE("missing parameter files are I/O errors") {
    REQUIRE_THROWS_AS(load_params("/nonexistent/ubicap.cfg"), io_error);
}

TEST_CASE("doubling_years accepts a list and builds one scenario per entry") {
    const CalibrationPreset p =
        preset_from_config(parse_config_text("doubling_years = 3, 7\ngamma0 = 2\n", "test"));
    REQUIRE(p.scenarios.size() == 2);
    REQUIRE(p.scenarios[0].doubling_years == 3.0);
    REQUIRE(p.scenarios[1].doubling_years == 7.0);
    REQUIRE(p.scenarios[0].initial_capability == 2.0);
    REQUIRE(p.scenarios[1].initial_capability == 2.0);
}

TEST_CASE("serialize and reload round-trips the preset exactly") {
    const CalibrationPreset base = preset_us_2025();
    const CalibrationPreset reloaded =
        preset_from_config(parse_config_text(to_config_string(base), "roundtrip"));
    REQUIRE(reloaded == base);

    // also for a modified preset
    const CalibrationPreset custom = preset_from_config(
        parse_config_text("s = 0.31\nsigma = 0.45\ndoubling_years = 2.5\nphi = 0.9\n", "test"));
    const CalibrationPreset again =
        preset_from_config(parse_config_text(to_config_string(custom), "roundtrip"));
    REQUIRE(again == custom);
}
