/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_CONFIG_HPP_
#define LPWAN_CONFIG_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpwan/units.hpp"

namespace lpwan {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Protocol : std::uint8_t { Aloha, Lbt, LbtEtsi, Hyb };

enum class RateMode : std::uint8_t { SingleRate, RateAdaptive };

inline const char *protocol_name(Protocol p) noexcept
{
    switch (p) {
    case Protocol::Aloha: return "aloha";
    case Protocol::Lbt: return "lbt";
    case Protocol::LbtEtsi: return "lbt_etsi";
    case Protocol::Hyb: return "hyb";
    }
    return "?";
}

inline bool is_duty_constrained(Protocol p) noexcept
{
    // LBT relaxes the duty constraint; ALOHA and HYB uplink are bound by it.
    return p == Protocol::Aloha || p == Protocol::Hyb;
}

inline bool is_lbt(Protocol p) noexcept
{
    return p == Protocol::Lbt || p == Protocol::LbtEtsi;
}

struct PopulationSpec
{
    Protocol protocol = Protocol::Aloha;
    double density = 1e-3; // nodes/m^2
};

struct HybParams
{
    double frame_s = 60.0;    // T_W
    int n_slots = 80;         // N_RM
    double resv_bits = 24.0;  // L_RM
    double resv_rate = 500.0; // R_RM, bit/s
    double beacon_s = 0.12;   // T_B
    double notify_s = 3.84;   // T_RA
};

struct LbtParams
{
    int min_be = 3;
    int max_be = 5;
    int max_backoffs = 4;
    double unit_backoff_s = 320e-6;
};

/// Full parameter set for one simulated scenario. Power draws are stored in
/// watts; the config file takes them in dBm and converts once at load.
struct ScenarioConfig
{
    // Traffic and deployment
    double lambda_t = 0.01; // packets/s per node
    std::vector<PopulationSpec> populations{{Protocol::Aloha, 1e-3}};

    // Radio and propagation
    double p_tx_w = dbm_to_watts(14.0);
    double freq_hz = 868e6; // informational; A and beta carry the path loss
    double path_a = 36.36;  // 1/m
    double path_beta = 3.5;
    double packet_bits = 240.0;
    std::vector<double> rates{500.0, 1000.0, 5000.0, 10000.0, 50000.0, 100000.0};
    double bandwidth_hz = 400e3;
    double noise_density = 2e-20; // W/Hz

    // Regulatory
    double duty_cycle = 0.01;
    double duty_window_s = 3600.0;

    // Power model
    double p_circuit_w = dbm_to_watts(16.0);
    double p_rx_w = dbm_to_watts(13.0);
    double p_cca_w = dbm_to_watts(10.0);

    // Carrier sensing
    double t_sense_s = 0.4e-3;
    double e_sense_j = 3.98e-6;
    double t_sense_etsi_s = 5e-3;
    double e_sense_etsi_j = 0.2e-3;
    std::optional<double> ed_threshold_w; // default: sensitivity at basic rate

    // Rate adaptation
    RateMode rate_mode = RateMode::SingleRate;
    double alpha = 0.1;
    double p_star = 0.05;

    HybParams hyb;
    LbtParams lbt;

    // Run control
    double sim_duration_s = 7200.0;
    double warmup_s = 600.0;
    int replications = 20;
    std::uint64_t base_seed = 1;
    int n_bins = 10;

    // Probe mode: when nonempty, replaces the Poisson deployment with one
    // node per listed distance for every population.
    std::vector<double> probe_distances;

    // Test hook: fixes every fading gain to the given value.
    std::optional<double> fading_fixed;

    // Emit per-node energy breakdown CSVs next to the metrics output.
    bool energy_audit = false;

    double basic_rate() const { return rates.front(); }

    double duty_budget_s() const { return duty_cycle * duty_window_s; }

    bool has_protocol(Protocol p) const
    {
        return std::any_of(populations.begin(), populations.end(),
                           [p](const PopulationSpec &s) { return s.protocol == p; });
    }

    /// Throws ConfigError on the first violated invariant.
    void validate() const;
};

inline void ScenarioConfig::validate() const
{
    auto fail = [](const std::string &msg) { throw ConfigError("config: " + msg); };

    if (lambda_t < 0.0) fail("lambda_t must be >= 0");
    if (!(p_tx_w > 0.0)) fail("p_tx must be > 0");
    if (!(path_a > 0.0)) fail("path_loss_a must be > 0");
    if (!(path_beta > 0.0)) fail("path_loss_beta must be > 0");
    if (!(packet_bits > 0.0)) fail("packet_bits must be > 0");
    if (!(bandwidth_hz > 0.0)) fail("bandwidth_hz must be > 0");
    if (!(noise_density > 0.0)) fail("noise_density must be > 0");
    if (!(duty_cycle > 0.0) || duty_cycle > 1.0) fail("duty_cycle must be in (0, 1]");
    if (!(duty_window_s > 0.0)) fail("duty_window_s must be > 0");
    if (!(p_circuit_w > 0.0) || !(p_rx_w > 0.0) || !(p_cca_w > 0.0)) fail("power draws must be > 0");
    if (!(t_sense_s > 0.0) || !(t_sense_etsi_s > 0.0)) fail("sensing times must be > 0");
    if (e_sense_j < 0.0 || e_sense_etsi_j < 0.0) fail("sensing energies must be >= 0");
    if (ed_threshold_w && !(*ed_threshold_w > 0.0)) fail("ed_threshold must be > 0");
    if (!(alpha > 0.0) || alpha > 1.0) fail("alpha must be in (0, 1]");
    if (!(p_star > 0.0) || !(p_star < 1.0)) fail("p_star must be in (0, 1)");
    if (rates.empty()) fail("rates must be nonempty");
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (!(rates[i] > 0.0)) fail("rates must be > 0");
        if (i > 0 && !(rates[i] > rates[i - 1])) fail("rates must be strictly ascending");
    }
    if (populations.empty()) fail("protocol_mix must list at least one population");
    for (const auto &pop : populations) {
        if (pop.density < 0.0) fail("population density must be >= 0");
    }
    if (!(sim_duration_s > 0.0)) fail("sim_duration_s must be > 0");
    if (warmup_s < 0.0 || warmup_s >= sim_duration_s) fail("warmup_s must be in [0, sim_duration)");
    if (replications < 1) fail("replications must be >= 1");
    if (n_bins < 1) fail("n_bins must be >= 1");
    for (double d : probe_distances) {
        if (!(d > 0.0)) fail("probe distances must be > 0");
    }
    if (fading_fixed && *fading_fixed < 0.0) fail("fading_fixed must be >= 0");

    if (lbt.min_be < 0 || lbt.max_be < lbt.min_be) fail("lbt backoff exponents invalid");
    if (lbt.max_backoffs < 0) fail("lbt_max_backoffs must be >= 0");
    if (!(lbt.unit_backoff_s > 0.0)) fail("lbt_backoff_unit_s must be > 0");

    if (has_protocol(Protocol::Hyb)) {
        if (hyb.n_slots < 1) fail("hyb_slots must be >= 1");
        if (!(hyb.frame_s > 0.0) || !(hyb.resv_bits > 0.0) || !(hyb.resv_rate > 0.0) ||
            !(hyb.beacon_s > 0.0) || !(hyb.notify_s > 0.0)) {
            fail("hyb durations and sizes must be > 0");
        }
        const double resv_phase = hyb.n_slots * (hyb.resv_bits / hyb.resv_rate);
        if (!(hyb.beacon_s + resv_phase + hyb.notify_s < hyb.frame_s)) {
            fail("hyb frame leaves no data window (beacon + reservations + notification >= frame)");
        }
    }

    // A duty-constrained node must be able to fit a single message in its
    // budget, otherwise it can never transmit at all.
    const bool any_duty = std::any_of(populations.begin(), populations.end(),
                                      [](const PopulationSpec &s) { return is_duty_constrained(s.protocol); });
    if (any_duty) {
        if (packet_bits / basic_rate() > duty_budget_s()) {
            fail("packet airtime at the basic rate exceeds the duty-cycle budget");
        }
        if (has_protocol(Protocol::Hyb) && hyb.resv_bits / hyb.resv_rate > duty_budget_s()) {
            fail("reservation airtime exceeds the duty-cycle budget");
        }
    }
}

} // namespace lpwan

#endif // LPWAN_CONFIG_HPP_
