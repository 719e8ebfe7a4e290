#pragma once

// Capability thresholds for a rent-financed universal basic income: the
// competitive closed form, its elasticity ledger, the oligopoly variant, and
// the cross-country ownership gap.

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ubicap/economy.hpp"
#include "ubicap/errors.hpp"
#include "ubicap/format.hpp"

namespace ubicap {

// Fiscal block: the public sector owns (or taxes the equivalent of) a share
// theta_pub of AI capital, loses a fraction c of gross rents to operating
// costs, collects a fraction phi of its nominal claim, and must finance a
// transfer of b_ratio times output.
struct FiscalParams {
    double public_share;    // theta_pub
    double cost_share;      // c
    double transfer_ratio;  // B/Y
    double profit_capture;  // phi; 1 = no leakage

    FiscalParams(double public_share_, double cost_share_, double transfer_ratio_,
                 double profit_capture_ = 1.0)
        : public_share(public_share_),
          cost_share(cost_share_),
          transfer_ratio(transfer_ratio_),
          profit_capture(profit_capture_) {
        auto bad = check(public_share, cost_share, transfer_ratio, profit_capture);
        if (!bad.empty()) throw validation_error(std::move(bad));
    }

    bool operator==(const FiscalParams&) const = default;

    static std::vector<std::string> check(double theta_pub, double c, double b_ratio,
                                          double phi) {
        std::vector<std::string> bad;
        detail::require_in(bad, theta_pub > 0.0 && theta_pub <= 1.0,
                           "theta_pub must lie in (0, 1]", theta_pub);
        detail::require_in(bad, c >= 0.0 && c < 1.0, "c must lie in [0, 1)", c);
        detail::require_in(bad, b_ratio > 0.0 && std::isfinite(b_ratio),
                           "b_ratio must be finite and > 0", b_ratio);
        detail::require_in(bad, phi > 0.0 && phi <= 1.0, "phi must lie in (0, 1]", phi);
        return bad;
    }
};

// Herfindahl-type conduct parameter: sum of squared market shares. 1 under
// monopoly, 1/m under symmetric Cournot, -> 0 under perfect competition.
inline double conduct_from_shares(std::span<const double> shares) {
    double total = 0.0;
    double sum_sq = 0.0;
    for (double share : shares) {
        if (!(share >= 0.0))
            throw validation_error(
                {"market shares must be non-negative, got " + format_double(share)});
        total += share;
        sum_sq += share * share;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw validation_error(
            {"market shares must sum to 1 (tolerance 1e-9), got sum = " + format_double(total)});
    return sum_sq;
}

// Demand elasticity is stored as an absolute value; negative inputs are
// rejected rather than silently negated.
struct MarketStructure {
    double demand_elasticity;  // |epsilon|
    double conduct;            // theta in [0, 1]

    MarketStructure(double demand_elasticity_, double conduct_)
        : demand_elasticity(demand_elasticity_), conduct(conduct_) {
        auto bad = check(demand_elasticity, conduct);
        if (!bad.empty()) throw validation_error(std::move(bad));
    }

    static MarketStructure from_shares(double demand_elasticity,
                                       std::span<const double> shares) {
        return MarketStructure(demand_elasticity, conduct_from_shares(shares));
    }

    // Lerner index (P - MC)/P = theta/epsilon.
    double markup() const { return conduct / demand_elasticity; }

    bool operator==(const MarketStructure&) const = default;

    static std::vector<std::string> check(double epsilon, double conduct) {
        std::vector<std::string> bad;
        detail::require_in(bad, epsilon > 0.0 && std::isfinite(epsilon),
                           "epsilon must be finite and > 0", epsilon);
        detail::require_in(bad, conduct >= 0.0 && conduct <= 1.0,
                           "conduct must lie in [0, 1]", conduct);
        return bad;
    }
};

struct ThresholdReport {
    double year;
    double gamma_star;            // clamped to >= 1; capability is bounded below by 1
    double gamma_star_unclamped;  // NaN when the oligopoly rent base is non-positive
    double z_factor;              // transfer requirement over the effective rent base
    double rent_denominator;      // theta_pub (1-c) alpha^{1-rho} A_t^rho kappa^rho
    double profit_offset;         // (theta/eps) / (alpha^{1-rho} A_t^rho kappa^rho); 0 if competitive
    bool always_solvent;          // threshold at or below the gamma = 1 floor
};

namespace detail {

// Common rent base alpha^{1-rho} A_t^rho kappa^rho, i.e. the capital income
// share at gamma = 1.
inline double rent_base(const EconomyParams& econ, double year, double kappa) {
    return capital_income_share(econ, 1.0, kappa, year);
}

inline double z_factor_at(const EconomyParams& econ, const FiscalParams& fiscal, double year,
                          double kappa) {
    const double denom =
        fiscal.public_share * (1.0 - fiscal.cost_share) * rent_base(econ, year, kappa);
    return fiscal.transfer_ratio / (fiscal.profit_capture * denom);
}

} // namespace detail

// Z_t: the transfer-to-output ratio divided by the public rent claim at the
// pre-AI capability level, using the effective public share phi * theta_pub.
inline double z_factor(const EconomyParams& econ, const FiscalParams& fiscal, double year) {
    return detail::z_factor_at(econ, fiscal, year, steady_state_kappa(econ));
}

// Threshold evaluated at an explicit capital-output ratio; used for
// sensitivity studies. Headline results always use the steady-state ratio.
inline ThresholdReport gamma_star_at_kappa(const EconomyParams& econ, const FiscalParams& fiscal,
                                           double year, double kappa) {
    if (!(kappa > 0.0))
        throw domain_error("capital-output ratio must be > 0, got " + format_double(kappa));
    const double base = detail::rent_base(econ, year, kappa);
    ThresholdReport report;
    report.year = year;
    report.rent_denominator = fiscal.public_share * (1.0 - fiscal.cost_share) * base;
    report.z_factor = fiscal.transfer_ratio / (fiscal.profit_capture * report.rent_denominator);
    report.profit_offset = 0.0;
    report.gamma_star_unclamped = std::pow(report.z_factor, econ.substitution_elasticity);
    report.always_solvent = report.gamma_star_unclamped <= 1.0;
    report.gamma_star = std::max(1.0, report.gamma_star_unclamped);
    return report;
}

// Minimum capability at which rents on the public stake cover the transfer:
// gamma* = Z^sigma, clamped to the gamma >= 1 floor.
inline ThresholdReport gamma_star(const EconomyParams& econ, const FiscalParams& fiscal,
                                  double year) {
    return gamma_star_at_kappa(econ, fiscal, year, steady_state_kappa(econ));
}

// Budget test: phi theta_pub (1-c) R(gamma) >= B/Y. Shortfalls below 1e-12
// relative count as ties, so gamma == gamma* lands on the solvent side
// regardless of pow rounding; a genuine shortfall of 1e-9 relative sits three
// orders of magnitude above this slack and still reads as insolvent.
inline bool is_solvent(const EconomyParams& econ, const FiscalParams& fiscal, double capability,
                       double year) {
    if (!(capability >= 1.0))
        throw domain_error("capability must be >= 1, got " + format_double(capability));
    const double rent = fiscal.profit_capture * fiscal.public_share * (1.0 - fiscal.cost_share) *
                        capital_income_share(econ, capability, steady_state_kappa(econ), year);
    return rent >= fiscal.transfer_ratio * (1.0 - 1e-12);
}

// First-order sensitivities of the unclamped threshold. The substitution
// derivative accounts for the full sigma-dependence: the curvature in every
// exponent as well as the outer power.
struct ThresholdElasticities {
    double wrt_public_share;  // d gamma*/d theta_pub  (< 0)
    double wrt_cost_share;    // d gamma*/d c          (> 0)
    double wrt_saving_rate;   // d gamma*/d s          (> 0, via kappa^rho with rho < 0)
    double wrt_substitution;  // d gamma*/d sigma      (sign calibration-dependent)
    bool at_clamp;            // unclamped threshold <= 1; interior formulas inapplicable
};

namespace detail {

inline double sigma_bracket(const EconomyParams& econ, const FiscalParams& fiscal, double year) {
    const double kappa = steady_state_kappa(econ);
    const double z = z_factor_at(econ, fiscal, year, kappa);
    return std::log(z) + std::log(econ.automated_share / (hicks_productivity(econ, year) * kappa)) /
                             econ.substitution_elasticity;
}

} // namespace detail

inline ThresholdElasticities elasticities(const EconomyParams& econ, const FiscalParams& fiscal,
                                          double year) {
    const ThresholdReport report = gamma_star(econ, fiscal, year);
    const double g_star = report.gamma_star_unclamped;
    const double sigma = econ.substitution_elasticity;
    ThresholdElasticities e;
    e.wrt_public_share = -g_star * sigma / fiscal.public_share;
    e.wrt_cost_share = g_star * sigma / (1.0 - fiscal.cost_share);
    e.wrt_saving_rate = -g_star * sigma * econ.curvature() / econ.saving_rate;
    e.wrt_substitution = g_star * detail::sigma_bracket(econ, fiscal, year);
    e.at_clamp = report.always_solvent;
    return e;
}

// Total log-differential: the first-order relative change of gamma* under
// joint perturbations of theta_pub, c, s, and sigma.
inline double log_differential(const EconomyParams& econ, const FiscalParams& fiscal, double year,
                               double d_public_share, double d_cost_share, double d_saving_rate,
                               double d_substitution) {
    const double sigma = econ.substitution_elasticity;
    return -sigma * d_public_share / fiscal.public_share +
           sigma * d_cost_share / (1.0 - fiscal.cost_share) -
           sigma * econ.curvature() * d_saving_rate / econ.saving_rate +
           detail::sigma_bracket(econ, fiscal, year) * d_substitution;
}

// Oligopoly threshold: captured pure profits (Lerner share theta/eps of
// output) offset part of the transfer, so the rent base shrinks by
// (theta/eps)/(alpha^{1-rho} A^rho kappa^rho). A non-positive base means
// profits alone cover the transfer at any capability level.
inline ThresholdReport gamma_star_oligo(const EconomyParams& econ, const FiscalParams& fiscal,
                                        const MarketStructure& market, double year) {
    const double kappa = steady_state_kappa(econ);
    const double base = detail::rent_base(econ, year, kappa);
    ThresholdReport report;
    report.year = year;
    report.rent_denominator = fiscal.public_share * (1.0 - fiscal.cost_share) * base;
    report.z_factor = fiscal.transfer_ratio / (fiscal.profit_capture * report.rent_denominator);
    report.profit_offset = market.markup() / base;
    const double net = report.z_factor - report.profit_offset;
    if (net <= 0.0) {
        report.gamma_star_unclamped = std::numeric_limits<double>::quiet_NaN();
        report.always_solvent = true;
        report.gamma_star = 1.0;
        return report;
    }
    report.gamma_star_unclamped = std::pow(net, econ.substitution_elasticity);
    report.always_solvent = report.gamma_star_unclamped <= 1.0;
    report.gamma_star = std::max(1.0, report.gamma_star_unclamped);
    return report;
}

// Two economies differing only in their public stake. gamma*_i factors as
// scale * theta_i^{-sigma}, so the lower-stake economy always needs strictly
// more capability.
struct OwnershipGap {
    double threshold_low_share;   // unclamped gamma* at theta_low
    double threshold_high_share;  // unclamped gamma* at theta_high
    double gap;                   // low minus high, strictly positive
    double scale;                 // the common factor multiplying theta^{-sigma}
};

inline OwnershipGap cross_country_gap(const EconomyParams& econ, const FiscalParams& fiscal_common,
                                      double theta_low, double theta_high, double year) {
    if (!(theta_low > 0.0 && theta_low < theta_high && theta_high <= 1.0))
        throw domain_error("ownership shares must satisfy 0 < theta1 < theta2 <= 1, got theta1 = " +
                           format_double(theta_low) + ", theta2 = " + format_double(theta_high));
    const double base = detail::rent_base(econ, year, steady_state_kappa(econ));
    const double sigma = econ.substitution_elasticity;
    const double scale =
        std::pow(fiscal_common.transfer_ratio / (fiscal_common.profit_capture *
                                                 (1.0 - fiscal_common.cost_share) * base),
                 sigma);
    OwnershipGap result;
    result.scale = scale;
    result.threshold_low_share = scale * std::pow(theta_low, -sigma);
    result.threshold_high_share = scale * std::pow(theta_high, -sigma);
    result.gap = result.threshold_low_share - result.threshold_high_share;
    return result;
}

} // namespace ubicap
