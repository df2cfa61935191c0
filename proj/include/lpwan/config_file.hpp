/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_CONFIG_FILE_HPP_
#define LPWAN_CONFIG_FILE_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lpwan/config.hpp"

namespace lpwan {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto *ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(trim(s.substr(pos)));
            break;
        }
        out.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

inline double parse_double(std::string_view v, int line)
{
    const std::string tmp(v);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tmp, &used);
    } catch (const std::exception &) {
        throw ConfigError("line " + std::to_string(line) + ": not a number: '" + tmp + "'");
    }
    if (used != tmp.size()) {
        throw ConfigError("line " + std::to_string(line) + ": trailing junk after number: '" + tmp + "'");
    }
    return value;
}

inline std::int64_t parse_int(std::string_view v, int line)
{
    std::int64_t value = 0;
    const auto *first = v.data();
    const auto *last = v.data() + v.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ConfigError("line " + std::to_string(line) + ": not an integer: '" + std::string(v) + "'");
    }
    return value;
}

inline bool parse_bool(std::string_view v, int line)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("line " + std::to_string(line) + ": not a boolean: '" + std::string(v) + "'");
}

inline Protocol parse_protocol(std::string_view v, int line)
{
    if (v == "aloha") return Protocol::Aloha;
    if (v == "lbt") return Protocol::Lbt;
    if (v == "lbt_etsi") return Protocol::LbtEtsi;
    if (v == "hyb") return Protocol::Hyb;
    throw ConfigError("line " + std::to_string(line) + ": unknown protocol: '" + std::string(v) + "'");
}

inline std::vector<double> parse_double_list(std::string_view v, int line)
{
    std::vector<double> out;
    for (auto item : split(v, ',')) {
        if (item.empty()) {
            throw ConfigError("line " + std::to_string(line) + ": empty list element");
        }
        out.push_back(parse_double(item, line));
    }
    return out;
}

// "aloha:1e-3,lbt:1e-3"
inline std::vector<PopulationSpec> parse_mix(std::string_view v, int line)
{
    std::vector<PopulationSpec> out;
    for (auto item : split(v, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line) +
                              ": protocol_mix entries must look like 'aloha:1e-3'");
        }
        PopulationSpec spec;
        spec.protocol = parse_protocol(trim(item.substr(0, colon)), line);
        spec.density = parse_double(trim(item.substr(colon + 1)), line);
        out.push_back(spec);
    }
    return out;
}

} // namespace detail

/// Applies flat `key = value` text onto a base configuration. Unknown keys
/// and malformed lines are rejected with line-numbered diagnostics. An empty
/// document leaves the baseline defaults untouched.
inline ScenarioConfig parse_config_text(std::string_view text,
                                        ScenarioConfig cfg = ScenarioConfig{})
{
    using namespace detail;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos) ? text.substr(pos)
                                                              : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        }

        if (key == "lambda_s") {
            const double d = parse_double(value, line_no);
            for (auto &pop : cfg.populations) pop.density = d;
        } else if (key == "lambda_t") {
            cfg.lambda_t = parse_double(value, line_no);
        } else if (key == "protocol_mix") {
            cfg.populations = parse_mix(value, line_no);
        } else if (key == "p_tx_dbm") {
            cfg.p_tx_w = dbm_to_watts(parse_double(value, line_no));
        } else if (key == "freq_hz") {
            cfg.freq_hz = parse_double(value, line_no);
        } else if (key == "path_loss_a") {
            cfg.path_a = parse_double(value, line_no);
        } else if (key == "path_loss_beta") {
            cfg.path_beta = parse_double(value, line_no);
        } else if (key == "packet_bits") {
            cfg.packet_bits = parse_double(value, line_no);
        } else if (key == "rates") {
            cfg.rates = parse_double_list(value, line_no);
        } else if (key == "bandwidth_hz") {
            cfg.bandwidth_hz = parse_double(value, line_no);
        } else if (key == "noise_density") {
            cfg.noise_density = parse_double(value, line_no);
        } else if (key == "duty_cycle") {
            cfg.duty_cycle = parse_double(value, line_no);
        } else if (key == "duty_window_s") {
            cfg.duty_window_s = parse_double(value, line_no);
        } else if (key == "p_circuit_dbm") {
            cfg.p_circuit_w = dbm_to_watts(parse_double(value, line_no));
        } else if (key == "p_rx_dbm") {
            cfg.p_rx_w = dbm_to_watts(parse_double(value, line_no));
        } else if (key == "p_cca_dbm") {
            cfg.p_cca_w = dbm_to_watts(parse_double(value, line_no));
        } else if (key == "t_sense_s") {
            cfg.t_sense_s = parse_double(value, line_no);
        } else if (key == "e_sense_j") {
            cfg.e_sense_j = parse_double(value, line_no);
        } else if (key == "t_sense_etsi_s") {
            cfg.t_sense_etsi_s = parse_double(value, line_no);
        } else if (key == "e_sense_etsi_j") {
            cfg.e_sense_etsi_j = parse_double(value, line_no);
        } else if (key == "ed_threshold_dbm") {
            cfg.ed_threshold_w = dbm_to_watts(parse_double(value, line_no));
        } else if (key == "rate_mode") {
            if (value == "single") cfg.rate_mode = RateMode::SingleRate;
            else if (value == "adaptive") cfg.rate_mode = RateMode::RateAdaptive;
            else throw ConfigError("line " + std::to_string(line_no) + ": rate_mode must be 'single' or 'adaptive'");
        } else if (key == "alpha") {
            cfg.alpha = parse_double(value, line_no);
        } else if (key == "p_star") {
            cfg.p_star = parse_double(value, line_no);
        } else if (key == "hyb_frame_s") {
            cfg.hyb.frame_s = parse_double(value, line_no);
        } else if (key == "hyb_slots") {
            cfg.hyb.n_slots = static_cast<int>(parse_int(value, line_no));
        } else if (key == "hyb_resv_bits") {
            cfg.hyb.resv_bits = parse_double(value, line_no);
        } else if (key == "hyb_resv_rate") {
            cfg.hyb.resv_rate = parse_double(value, line_no);
        } else if (key == "hyb_beacon_s") {
            cfg.hyb.beacon_s = parse_double(value, line_no);
        } else if (key == "hyb_notify_s") {
            cfg.hyb.notify_s = parse_double(value, line_no);
        } else if (key == "lbt_min_be") {
            cfg.lbt.min_be = static_cast<int>(parse_int(value, line_no));
        } else if (key == "lbt_max_be") {
            cfg.lbt.max_be = static_cast<int>(parse_int(value, line_no));
        } else if (key == "lbt_max_backoffs") {
            cfg.lbt.max_backoffs = static_cast<int>(parse_int(value, line_no));
        } else if (key == "lbt_backoff_unit_s") {
            cfg.lbt.unit_backoff_s = parse_double(value, line_no);
        } else if (key == "sim_duration_s") {
            cfg.sim_duration_s = parse_double(value, line_no);
        } else if (key == "warmup_s") {
            cfg.warmup_s = parse_double(value, line_no);
        } else if (key == "replications") {
            cfg.replications = static_cast<int>(parse_int(value, line_no));
        } else if (key == "base_seed") {
            cfg.base_seed = static_cast<std::uint64_t>(parse_int(value, line_no));
        } else if (key == "n_bins") {
            cfg.n_bins = static_cast<int>(parse_int(value, line_no));
        } else if (key == "probe_distances_m") {
            cfg.probe_distances = parse_double_list(value, line_no);
        } else if (key == "fading_fixed") {
            cfg.fading_fixed = parse_double(value, line_no);
        } else if (key == "energy_audit") {
            cfg.energy_audit = parse_bool(value, line_no);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }

    cfg.validate();
    return cfg;
}

inline ScenarioConfig load_config(const std::string &path,
                                  ScenarioConfig base = ScenarioConfig{})
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

} // namespace lpwan

#endif // LPWAN_CONFIG_FILE_HPP_
