#pragma once

// Task-automation CES economy: production technology with an AI capability
// shifter, the capital income share, and Solow capital accumulation.

#include <cmath>
#include <string>
#include <vector>

#include "ubicap/errors.hpp"
#include "ubicap/format.hpp"

namespace ubicap {

// CES curvature rho = (sigma - 1)/sigma, strictly negative for sigma in (0, 1).
// Tasks are gross complements, so output is limited by its weakest links.
inline double rho_of(double substitution_elasticity) {
    if (!(substitution_elasticity > 0.0 && substitution_elasticity < 1.0))
        throw domain_error("sigma must lie in (0, 1), got " +
                           format_double(substitution_elasticity));
    return (substitution_elasticity - 1.0) / substitution_elasticity;
}

namespace detail {

inline void require_in(std::vector<std::string>& out, bool ok, const char* msg, double got) {
    if (!ok) out.push_back(std::string(msg) + ", got " + format_double(got));
}

} // namespace detail

// Technology and household block. The curvature is always derived from the
// elasticity, never stored, so sigma == 1/(1 - rho) cannot drift.
struct EconomyParams {
    double saving_rate;              // s, fraction of output invested
    double growth_rate;              // g, Hicks-neutral rate per year
    double depreciation;             // delta, per year
    double automated_share;          // alpha_bar, fraction of tasks run on capital
    double substitution_elasticity;  // sigma, across tasks
    double base_productivity;        // A0, productivity level at base_year
    double base_year;
    double labor;                    // L, efficiency units

    EconomyParams(double saving_rate_, double growth_rate_, double depreciation_,
                  double automated_share_, double substitution_elasticity_,
                  double base_productivity_, double base_year_, double labor_ = 1.0)
        : saving_rate(saving_rate_),
          growth_rate(growth_rate_),
          depreciation(depreciation_),
          automated_share(automated_share_),
          substitution_elasticity(substitution_elasticity_),
          base_productivity(base_productivity_),
          base_year(base_year_),
          labor(labor_) {
        auto bad = check(saving_rate, growth_rate, depreciation, automated_share,
                         substitution_elasticity, base_productivity, base_year, labor);
        if (!bad.empty()) throw validation_error(std::move(bad));
    }

    double curvature() const { return rho_of(substitution_elasticity); }

    bool operator==(const EconomyParams&) const = default;

    static std::vector<std::string> check(double s, double g, double delta, double alpha_bar,
                                          double sigma, double A0, double base_year, double L) {
        std::vector<std::string> bad;
        detail::require_in(bad, s > 0.0 && s < 1.0, "s must lie in (0, 1)", s);
        detail::require_in(bad, g >= 0.0 && std::isfinite(g), "g must be finite and >= 0", g);
        detail::require_in(bad, delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]", delta);
        detail::require_in(bad, alpha_bar > 0.0 && alpha_bar < 1.0,
                           "alpha_bar must lie in (0, 1)", alpha_bar);
        detail::require_in(bad, sigma > 0.0 && sigma < 1.0, "sigma must lie in (0, 1)", sigma);
        detail::require_in(bad, A0 > 0.0 && std::isfinite(A0), "A0 must be finite and > 0", A0);
        detail::require_in(bad, std::isfinite(base_year), "base_year must be finite", base_year);
        detail::require_in(bad, L > 0.0 && std::isfinite(L), "L must be finite and > 0", L);
        return bad;
    }
};

// Point-in-time state: calendar year (fractional allowed), capital stock, and
// the AI capability multiplier (1 = pre-AI baseline).
struct EconomyState {
    double year;
    double capital;
    double capability;
};

inline double hicks_productivity(const EconomyParams& p, double year) {
    return p.base_productivity * std::exp(p.growth_rate * (year - p.base_year));
}

// Y = A_t ((alpha gamma)^{1-rho} K^rho + (1-alpha)^{1-rho} L^rho)^{1/rho}.
// Capability gamma scales the CES weight of the automated block rather than
// capital itself, so its effect enters as gamma^{1-rho} and survives rho < 0.
inline double ces_output(const EconomyParams& p, const EconomyState& state) {
    if (!(state.capital > 0.0))
        throw domain_error("capital must be > 0, got " + format_double(state.capital));
    if (!(p.labor > 0.0))
        throw domain_error("labor must be > 0, got " + format_double(p.labor));
    if (!(state.capability >= 1.0))
        throw domain_error("capability must be >= 1, got " + format_double(state.capability));
    const double rho = p.curvature();
    const double automated = std::pow(p.automated_share * state.capability, 1.0 - rho) *
                             std::pow(state.capital, rho);
    const double human = std::pow(1.0 - p.automated_share, 1.0 - rho) * std::pow(p.labor, rho);
    return hicks_productivity(p, state.year) * std::pow(automated + human, 1.0 / rho);
}

// Transition-phase variant with a labor-augmenting multiplier psi >= 1 on the
// human block; psi = 1 reproduces ces_output exactly.
inline double ces_output_augmented(const EconomyParams& p, const EconomyState& state,
                                   double labor_multiplier) {
    if (!(labor_multiplier >= 1.0))
        throw domain_error("psi must be >= 1, got " + format_double(labor_multiplier));
    if (!(state.capital > 0.0))
        throw domain_error("capital must be > 0, got " + format_double(state.capital));
    if (!(p.labor > 0.0))
        throw domain_error("labor must be > 0, got " + format_double(p.labor));
    if (!(state.capability >= 1.0))
        throw domain_error("capability must be >= 1, got " + format_double(state.capability));
    const double rho = p.curvature();
    const double automated = std::pow(p.automated_share * state.capability, 1.0 - rho) *
                             std::pow(state.capital, rho);
    const double human = std::pow(1.0 - p.automated_share, 1.0 - rho) *
                         std::pow(labor_multiplier * p.labor, rho);
    return hicks_productivity(p, state.year) * std::pow(automated + human, 1.0 / rho);
}

// Capital income share R = (alpha gamma)^{1-rho} A_t^rho (K/Y)^rho, equal to
// (dY/dK) K / Y for the CES technology; strictly increasing in gamma.
inline double capital_income_share(const EconomyParams& p, double capability,
                                   double capital_output_ratio, double year) {
    if (!(capability >= 1.0))
        throw domain_error("capability must be >= 1, got " + format_double(capability));
    if (!(capital_output_ratio > 0.0))
        throw domain_error("capital-output ratio must be > 0, got " +
                           format_double(capital_output_ratio));
    const double rho = p.curvature();
    return std::pow(p.automated_share * capability, 1.0 - rho) *
           std::pow(hicks_productivity(p, year), rho) * std::pow(capital_output_ratio, rho);
}

// Solow limit of the capital-output ratio, s / (e^g - 1 + delta).
inline double steady_state_kappa(const EconomyParams& p) {
    return p.saving_rate / (std::expm1(p.growth_rate) + p.depreciation);
}

inline double solow_step(const EconomyParams& p, double capital, double output) {
    if (!(capital > 0.0))
        throw domain_error("capital must be > 0, got " + format_double(capital));
    if (!(output > 0.0))
        throw domain_error("output must be > 0, got " + format_double(output));
    return p.saving_rate * output + (1.0 - p.depreciation) * capital;
}

// One application of the capital-output ratio map F(q) = (s + (1-delta) q)/e^g.
// An affine contraction with factor (1-delta)/e^g and fixed point steady_state_kappa.
inline double q_update(const EconomyParams& p, double ratio) {
    if (!(ratio > 0.0))
        throw domain_error("capital-output ratio must be > 0, got " + format_double(ratio));
    return (p.saving_rate + (1.0 - p.depreciation) * ratio) / std::exp(p.growth_rate);
}

} // namespace ubicap
