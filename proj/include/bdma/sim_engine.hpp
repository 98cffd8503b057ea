// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_SIM_ENGINE_HPP
#define BDMA_SIM_ENGINE_HPP

#include "bdma/access_schemes.hpp"
#include "bdma/array_geometry.hpp"
#include "bdma/channel.hpp"
#include "bdma/random.hpp"
#include "bdma/user_drop.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bdma
{
    struct ScenarioConfig
    {
        Point bs_position{0.0, 0.0};
        Point irs_position{125.0, 125.0};
        double center_side_m = 125.0; // cell-center square, centered at the BS
        Square edge_square{{100.0, 100.0}, {150.0, 150.0}};
        double min_distance_m = 10.0; // near-user rejection radius and NLOS distance clamp

        std::size_t n_users = 8;
        std::size_t n_far_users = 1;
        ArrayLayout array{64, 8, 0.5};
        std::size_t n_irs_elements = 200;
        double total_power_w = 20.0;
        NoiseParams noise;
        LargeScaleParams large_scale;
        SidelobeModel sidelobes = SidelobeModel::ideal;

        std::size_t n_drops = 2000;
        std::uint64_t seed = 1;
        std::vector<Scheme> schemes{Scheme::bdma, Scheme::tdma, Scheme::fdma, Scheme::noma};
        std::size_t threads = 0; // 0: hardware concurrency; never affects results

        Square center_square() const;
        LinkParams link_params() const;
        ChannelGeometry channel_geometry() const;

        // Throws ConfigError naming the violated constraint.
        void validate() const;
    };

    // Far users uniform over the edge square, near users uniform over the center square with
    // rejection inside min_distance_m of the BS.
    UserDrop place_users(const ScenarioConfig &scenario, Rng &rng);

    // Fills angles, distances and categories from positions.
    UserDrop make_drop(const ScenarioConfig &scenario, std::vector<Point> positions);

    struct CdfSummary
    {
        Scheme scheme = Scheme::bdma;
        std::vector<double> sorted_sums; // ascending, one per drop [bps/Hz]

        double mean() const;
    };

    // Lower order statistic: element ceil(p * n) - 1 of the ascending sums, p in (0, 1).
    double percentile(const CdfSummary &summary, double p);

    struct DropResult
    {
        UserDrop drop;
        ChannelRealization channels;
        std::vector<SchemeOutcome> outcomes; // in scenario.schemes order
    };

    // One Monte-Carlo trial; depends only on (scenario, drop index).
    DropResult run_drop(const ScenarioConfig &scenario, std::size_t drop_index);

    struct CampaignResult
    {
        std::vector<CdfSummary> summaries; // in scenario.schemes order

        const CdfSummary &at(Scheme s) const;
    };

    CampaignResult run_campaign(const ScenarioConfig &scenario);
}

#endif
