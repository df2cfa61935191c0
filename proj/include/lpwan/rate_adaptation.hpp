/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_RATE_ADAPTATION_HPP_
#define LPWAN_RATE_ADAPTATION_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lpwan/channel.hpp"

namespace lpwan {

/// Exponentially weighted moving average of the measured linear SINR.
/// The first sample seeds the estimate.
class SinrEstimator
{
public:
    SinrEstimator() = default;

    explicit SinrEstimator(double alpha) : alpha_(alpha) {}

    bool initialized() const noexcept { return initialized_; }
    double value() const noexcept { return estimate_; }

    void update(double measured)
    {
        if (measured < 0.0) {
            throw std::invalid_argument("SinrEstimator: measured SINR must be >= 0");
        }
        if (!initialized_) {
            estimate_ = measured;
            initialized_ = true;
        } else {
            estimate_ = (1.0 - alpha_) * estimate_ + alpha_ * measured;
        }
    }

private:
    double alpha_ = 0.1;
    double estimate_ = 0.0;
    bool initialized_ = false;
};

/// Core of the rate rule: largest index whose decoding threshold stays
/// within -ln(1 - p_star) * psi; index 0 when none qualifies. Thresholds
/// must be ascending.
inline std::size_t select_rate_from_thresholds(double psi_estimate,
                                               std::span<const double> thresholds,
                                               double p_star)
{
    if (thresholds.empty()) {
        throw std::invalid_argument("select_rate_from_thresholds: thresholds must be nonempty");
    }
    const double bound = -std::log1p(-p_star) * psi_estimate;
    std::size_t chosen = 0;
    for (std::size_t i = thresholds.size(); i-- > 0;) {
        if (thresholds[i] <= bound) {
            chosen = i;
            break;
        }
    }
    return chosen;
}

/// Outage-constrained rate choice under Rayleigh fading: with instantaneous
/// SINR = h * psi and h ~ Exp(1), the outage at rate r is
/// 1 - exp(-threshold(r) / psi). The highest rate keeping that below p_star
/// satisfies threshold(r) <= -ln(1 - p_star) * psi. Falls back to the basic
/// rate when no rate qualifies.
inline std::size_t select_rate_index(double psi_estimate,
                                     std::span<const double> rates,
                                     double p_star,
                                     double bandwidth_hz)
{
    std::vector<double> thresholds;
    thresholds.reserve(rates.size());
    for (double r : rates) {
        thresholds.push_back(sinr_threshold(r, bandwidth_hz));
    }
    return select_rate_from_thresholds(psi_estimate, thresholds, p_star);
}

} // namespace lpwan

#endif // LPWAN_RATE_ADAPTATION_HPP_
