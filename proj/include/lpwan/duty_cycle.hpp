/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_DUTY_CYCLE_HPP_
#define LPWAN_DUTY_CYCLE_HPP_

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace lpwan {

/// Trailing-window airtime regulator. Keeps the (start, duration) log of
/// recent transmissions and admits a new one only if no trailing window of
/// length `window` would ever exceed `budget` seconds of airtime.
///
/// Because entries are booked at transmission start and admission is checked
/// while the node is idle, every logged entry lies in the past at check
/// time. The airtime seen by the window ending at `t_new + dur` then bounds
/// every later window until the next admission check, so a single window
/// evaluation decides admissibility.
class DutyCycleTracker
{
public:
    DutyCycleTracker() = default;

    DutyCycleTracker(double window_s, double budget_s)
        : window_(window_s), budget_(budget_s)
    {
    }

    double window() const noexcept { return window_; }
    double budget() const noexcept { return budget_; }

    /// Airtime overlapping [w0, w1].
    double airtime_in(double w0, double w1) const noexcept
    {
        double total = 0.0;
        for (const auto &[start, dur] : entries_) {
            const double lo = std::max(start, w0);
            const double hi = std::min(start + dur, w1);
            if (hi > lo) total += hi - lo;
        }
        return total;
    }

    bool admissible(double t, double dur) const noexcept
    {
        const double w1 = t + dur;
        return airtime_in(w1 - window_, w1) + dur <= budget_ + kSlack;
    }

    /// Earliest t' >= t at which a transmission of the given duration is
    /// admissible. Requires dur <= budget.
    double earliest_admissible(double t, double dur) const
    {
        if (dur > budget_ + kSlack) {
            throw std::invalid_argument("duty: message cannot fit in the budget at all");
        }
        if (admissible(t, dur)) return t;

        const double target = budget_ - dur; // airtime the window may still contain
        const double x0 = t + dur - window_; // current window left edge

        // Walk the log oldest-first, sliding the left edge right until
        // enough old airtime has expired from the window.
        double remaining = airtime_in(x0, t + dur);
        for (const auto &[start, dur_e] : entries_) {
            const double e = start + dur_e;
            if (e <= x0) continue;
            const double seg = e - std::max(start, x0);
            const double tail = remaining - seg;
            if (tail <= target) {
                const double keep = target - tail; // part of this entry that may stay
                const double x = e - keep;
                return std::max(t, x + window_ - dur);
            }
            remaining = tail;
        }
        return t; // log empty beyond x0: nothing blocks
    }

    /// Books airtime starting at t. Entries that can no longer intersect any
    /// future trailing window are dropped.
    void debit(double t, double dur)
    {
        while (!entries_.empty() && entries_.front().first + entries_.front().second < t - window_) {
            entries_.pop_front();
        }
        entries_.emplace_back(t, dur);
    }

    const std::deque<std::pair<double, double>> &entries() const noexcept { return entries_; }

private:
    static constexpr double kSlack = 1e-9;

    double window_ = 3600.0;
    double budget_ = 36.0;
    std::deque<std::pair<double, double>> entries_;
};

} // namespace lpwan

#endif // LPWAN_DUTY_CYCLE_HPP_
