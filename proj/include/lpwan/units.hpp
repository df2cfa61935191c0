/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_UNITS_HPP_
#define LPWAN_UNITS_HPP_

#include <cmath>

namespace lpwan {

inline double dbm_to_watts(double dbm) noexcept
{
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

inline double watts_to_dbm(double watts) noexcept
{
    return 10.0 * std::log10(watts / 1e-3);
}

} // namespace lpwan

#endif // LPWAN_UNITS_HPP_
