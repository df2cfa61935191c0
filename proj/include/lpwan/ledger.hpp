/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_LEDGER_HPP_
#define LPWAN_LEDGER_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace lpwan {

/// Raised on internal consistency violations in the event core.
class EngineDefect : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

enum class TxKind : std::uint8_t { Data, Reservation, Beacon, Notification };

inline const char *tx_kind_name(TxKind k) noexcept
{
    switch (k) {
    case TxKind::Data: return "data";
    case TxKind::Reservation: return "resv";
    case TxKind::Beacon: return "beacon";
    case TxKind::Notification: return "notify";
    }
    return "?";
}

/// One on-air signal. Sender index 0xFFFFFFFF marks the gateway.
struct Transmission
{
    static constexpr std::uint32_t kGateway = 0xFFFFFFFFu;

    std::uint64_t serial = 0;
    std::uint32_t sender = kGateway;
    TxKind kind = TxKind::Data;
    double start = 0.0;
    double end = 0.0;
    double rate = 0.0;
    double bits = 0.0;
    double power_at_gw = 0.0;  // received power at the gateway, W
    std::uint64_t fading_key = 0; // base key for per-receiver fading draws

    double airtime() const noexcept { return end - start; }
};

/// Books every active transmission and integrates the aggregate received
/// power at the gateway over time. Interference collected by one packet is
/// the integral of everyone else's power across its reception window, which
/// falls out of two snapshots of the running integral:
///
///   interference = (I(end) - I(start)) - own_power * (end - start)
///
/// so each boundary event costs O(1) regardless of how many transmissions
/// overlap. Ended transmissions are retained for `keep_horizon` seconds so
/// carrier-sensing windows that reach into the recent past can still see
/// them.
class ChannelLedger
{
public:
    explicit ChannelLedger(double keep_horizon_s = 0.0)
        : keep_horizon_(keep_horizon_s)
    {
    }

    double now() const noexcept { return now_; }
    double aggregate_power_at_gw() const noexcept { return agg_power_; }
    std::size_t active_count() const noexcept { return active_.size(); }

    /// Moves the clock forward, flushing the power integral.
    void advance(double t)
    {
        if (t < now_) {
            throw EngineDefect("ledger: time moved backwards");
        }
        agg_integral_ += agg_power_ * (t - now_);
        now_ = t;
    }

    void start(const Transmission &tx)
    {
        advance(tx.start);
        if (!(tx.end > tx.start)) {
            throw EngineDefect("ledger: transmission must have positive duration");
        }
        for (const auto &a : active_) {
            if (a.tx.serial == tx.serial) {
                throw EngineDefect("ledger: duplicate activation");
            }
        }
        active_.push_back({tx, agg_integral_});
        agg_power_ += tx.power_at_gw;
    }

    struct EndResult
    {
        Transmission tx;
        double interference_energy_j = 0.0;
    };

    /// Retires a transmission at its scheduled end and reports the
    /// interference energy it collected at the gateway.
    EndResult end(std::uint64_t serial, double t)
    {
        advance(t);
        auto it = std::find_if(active_.begin(), active_.end(),
                               [serial](const Active &a) { return a.tx.serial == serial; });
        if (it == active_.end()) {
            throw EngineDefect("ledger: ending a transmission that is not active");
        }
        if (t != it->tx.end) {
            throw EngineDefect("ledger: transmission ended at the wrong time");
        }

        EndResult result;
        result.tx = it->tx;
        const double own = it->tx.power_at_gw * it->tx.airtime();
        result.interference_energy_j = (agg_integral_ - it->integral_at_start) - own;
        // Guard the tiny negative residue floating accumulation can leave.
        if (result.interference_energy_j < 0.0) {
            result.interference_energy_j = 0.0;
        }

        agg_power_ -= it->tx.power_at_gw;
        if (keep_horizon_ > 0.0) {
            recent_.push_back(it->tx);
        }
        active_.erase(it);
        prune(t);
        return result;
    }

    /// Visits every transmission overlapping [w0, w1] (active or recently
    /// ended), passing the transmission and its overlap with the window.
    /// Requires w0 >= now - keep_horizon.
    template <typename F>
    void for_each_overlapping(double w0, double w1, F &&fn) const
    {
        for (const auto &a : active_) {
            visit(a.tx, w0, w1, fn);
        }
        for (const auto &tx : recent_) {
            visit(tx, w0, w1, fn);
        }
    }

private:
    struct Active
    {
        Transmission tx;
        double integral_at_start;
    };

    template <typename F>
    static void visit(const Transmission &tx, double w0, double w1, F &fn)
    {
        const double lo = std::max(tx.start, w0);
        const double hi = std::min(tx.end, w1);
        if (hi > lo) {
            fn(tx, hi - lo);
        }
    }

    void prune(double t)
    {
        while (!recent_.empty() && recent_.front().end < t - keep_horizon_) {
            recent_.pop_front();
        }
    }

    double keep_horizon_;
    double now_ = 0.0;
    double agg_power_ = 0.0;
    double agg_integral_ = 0.0;
    std::vector<Active> active_;
    std::deque<Transmission> recent_;
};

} // namespace lpwan

#endif // LPWAN_LEDGER_HPP_
