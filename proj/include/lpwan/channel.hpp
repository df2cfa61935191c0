/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_CHANNEL_HPP_
#define LPWAN_CHANNEL_HPP_

#include <cmath>
#include <stdexcept>

#include "lpwan/rng.hpp"

namespace lpwan {

/// Distance-dependent channel gain (A*d)^(-beta). Strictly decreasing in d.
inline double path_gain(double distance_m, double coeff_a, double beta)
{
    if (!(distance_m > 0.0)) {
        throw std::invalid_argument("path_gain: distance must be > 0");
    }
    return std::pow(coeff_a * distance_m, -beta);
}

/// Unit-mean Rayleigh power fading gain.
inline double sample_fading(Rng &rng) noexcept
{
    return rng.exponential(1.0);
}

/// Minimum SINR for decoding rate r in bandwidth w: 2^(r/w) - 1.
inline double sinr_threshold(double rate_bps, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0) || rate_bps < 0.0) {
        throw std::invalid_argument("sinr_threshold: need rate >= 0 and bandwidth > 0");
    }
    return std::expm1(rate_bps / bandwidth_hz * M_LN2);
}

/// Thermal noise power over the signal bandwidth.
inline double noise_power(double n0_w_per_hz, double bandwidth_hz) noexcept
{
    return n0_w_per_hz * bandwidth_hz;
}

/// Receiver sensitivity at a given rate: the lowest received power that
/// still decodes against noise alone.
inline double sensitivity(double rate_bps, double bandwidth_hz, double noise_w)
{
    return noise_w * sinr_threshold(rate_bps, bandwidth_hz);
}

/// Largest distance at which the deterministic link budget (unit-mean
/// fading) closes at the given rate:
///   p_tx * (A*d)^(-beta) >= noise * threshold(rate)
/// solved in closed form for d.
inline double max_coverage_radius(double p_tx_w,
                                  double coeff_a,
                                  double beta,
                                  double noise_w,
                                  double rate_bps,
                                  double bandwidth_hz)
{
    const double min_power = sensitivity(rate_bps, bandwidth_hz, noise_w);
    if (!(p_tx_w > 0.0) || !(min_power > 0.0)) {
        throw std::invalid_argument("max_coverage_radius: powers must be > 0");
    }
    return std::pow(p_tx_w / min_power, 1.0 / beta) / coeff_a;
}

/// Energy-based SINR over a packet reception window.
inline double compute_sinr(double signal_energy_j,
                           double noise_energy_j,
                           double interference_energy_j)
{
    if (!(noise_energy_j > 0.0)) {
        throw std::invalid_argument("compute_sinr: noise energy must be > 0");
    }
    return signal_energy_j / (noise_energy_j + interference_energy_j);
}

} // namespace lpwan

#endif // LPWAN_CHANNEL_HPP_
