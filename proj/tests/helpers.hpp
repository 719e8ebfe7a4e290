#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "ubicap/economy.hpp"
#include "ubicap/thresholds.hpp"

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Deterministic draws over comfortably interior parameter ranges.
struct ParamSampler {
    std::mt19937_64 rng;

    explicit ParamSampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    ubicap::EconomyParams econ() {
        return ubicap::EconomyParams(uniform(0.05, 0.45),  // s
                                     uniform(0.0, 0.03),   // g
                                     uniform(0.02, 0.15),  // delta
                                     uniform(0.2, 0.7),    // alpha_bar
                                     uniform(0.3, 0.9),    // sigma
                                     uniform(0.8, 1.3),    // A0
                                     2024.0, uniform(0.5, 2.0));
    }

    ubicap::FiscalParams fiscal() {
        return ubicap::FiscalParams(uniform(0.05, 1.0),   // theta_pub
                                    uniform(0.0, 0.9),    // c
                                    uniform(0.02, 0.3),   // b_ratio
                                    uniform(0.5, 1.0));   // phi
    }
};
