/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_SCENARIO_HPP_
#define LPWAN_SCENARIO_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lpwan/config.hpp"
#include "lpwan/rng.hpp"

namespace lpwan {

/// One deployed device. The gateway sits at the origin.
struct Node
{
    std::uint32_t population = 0;
    std::uint32_t index = 0; // unique within its population
    Protocol protocol = Protocol::Aloha;
    double x = 0.0;
    double y = 0.0;
    double distance = 0.0;

    std::uint64_t gid() const noexcept
    {
        return (static_cast<std::uint64_t>(population) << 32) | index;
    }
};

/// Draws the random deployment: per population, a Poisson number of nodes
/// placed i.i.d. uniformly on the disk of the given radius. Each population
/// consumes its own random stream, so changing one population's density
/// leaves every other population's draw untouched.
///
/// In probe mode (config.probe_distances nonempty) the Poisson process is
/// replaced by one node per listed distance for every population, placed at
/// a population-specific bearing so probe positions never coincide.
inline std::vector<Node> sample_deployment(const ScenarioConfig &config,
                                           double radius_m,
                                           std::uint64_t rep_seed)
{
    if (!(radius_m > 0.0)) {
        throw std::invalid_argument("sample_deployment: radius must be > 0");
    }

    std::vector<Node> nodes;

    for (std::uint32_t p = 0; p < config.populations.size(); ++p) {
        const auto &pop = config.populations[p];

        if (!config.probe_distances.empty()) {
            const double bearing = 0.7391 * (p + 1); // distinct per population
            for (std::uint32_t i = 0; i < config.probe_distances.size(); ++i) {
                Node n;
                n.population = p;
                n.index = i;
                n.protocol = pop.protocol;
                n.distance = config.probe_distances[i];
                n.x = n.distance * std::cos(bearing);
                n.y = n.distance * std::sin(bearing);
                nodes.push_back(n);
            }
            continue;
        }

        const double mean = pop.density * M_PI * radius_m * radius_m;
        if (!(mean > 0.0)) continue;

        std::mt19937_64 gen(mix_keys({rep_seed, stream_tag::deployment, p}));
        std::poisson_distribution<std::uint64_t> count_dist(mean);
        const std::uint64_t count = count_dist(gen);

        Rng stream(mix_keys({rep_seed, stream_tag::deployment, p, 0xA11CEULL}));
        for (std::uint64_t i = 0; i < count; ++i) {
            Node n;
            n.population = p;
            n.index = static_cast<std::uint32_t>(i);
            n.protocol = pop.protocol;
            // Uniform on the disk: radius via sqrt of a uniform, angle uniform.
            n.distance = radius_m * std::sqrt(stream.uniform());
            const double theta = 2.0 * M_PI * stream.uniform();
            n.x = n.distance * std::cos(theta);
            n.y = n.distance * std::sin(theta);
            nodes.push_back(n);
        }
    }

    return nodes;
}

/// Poisson packet arrivals for one node, truncated at the horizon.
class ArrivalStream
{
public:
    ArrivalStream(double rate_per_s, double horizon_s, std::uint64_t seed)
        : rng_(seed), rate_(rate_per_s), horizon_(horizon_s)
    {
    }

    std::optional<double> next()
    {
        if (rate_ <= 0.0) return std::nullopt;
        t_ += rng_.exponential(1.0 / rate_);
        if (t_ >= horizon_) return std::nullopt;
        return t_;
    }

private:
    Rng rng_;
    double rate_;
    double horizon_;
    double t_ = 0.0;
};

inline ArrivalStream make_arrival_stream(const ScenarioConfig &config,
                                         const Node &node,
                                         std::uint64_t rep_seed)
{
    return ArrivalStream(config.lambda_t, config.sim_duration_s,
                         mix_keys({rep_seed, stream_tag::traffic, node.gid()}));
}

} // namespace lpwan

#endif // LPWAN_SCENARIO_HPP_
