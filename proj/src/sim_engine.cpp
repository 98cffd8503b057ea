// SPDX-License-Identifier: Apache-2.0

#include "bdma/sim_engine.hpp"
#include "bdma/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

namespace bdma
{
    Square ScenarioConfig::center_square() const
    {
        const double h = center_side_m / 2.0;
        return {{bs_position.x - h, bs_position.y - h}, {bs_position.x + h, bs_position.y + h}};
    }

    LinkParams ScenarioConfig::link_params() const
    {
        return LinkParams{array, total_power_w, noise_power(noise), sidelobes};
    }

    ChannelGeometry ScenarioConfig::channel_geometry() const
    {
        return ChannelGeometry{array.n_chains(), n_irs_elements, distance(bs_position, irs_position), min_distance_m};
    }

    void ScenarioConfig::validate() const
    {
        if (n_users < 1)
            throw ConfigError("n_users must be >= 1");
        if (n_far_users > n_users)
            throw ConfigError("n_far_users must not exceed n_users");
        if (n_drops < 1)
            throw ConfigError("n_drops must be >= 1");
        if (schemes.empty())
            throw ConfigError("schemes must list at least one scheme");
        if (!(total_power_w > 0.0))
            throw ConfigError("total_power_w must be > 0 W");
        if (!(min_distance_m >= 0.0))
            throw ConfigError("geometry.min_distance_m must be >= 0 m");
        if (n_far_users > 0 && edge_square.empty())
            throw ConfigError("geometry edge square is empty");
        if (n_users > n_far_users)
        {
            if (!(center_side_m > 0.0))
                throw ConfigError("geometry.center_side_m must be > 0 m");
            // Every point of the center square lies inside the rejection radius.
            if (center_side_m / 2.0 * std::sqrt(2.0) <= min_distance_m)
                throw ConfigError("geometry.center_side_m leaves no room outside geometry.min_distance_m");
        }
        if (!edge_square.contains(irs_position))
            throw ConfigError("IRS position must lie inside the cell-edge square");
        if (distance(bs_position, irs_position) < 1.0)
            throw ConfigError("BS-IRS distance must be at least 1 m");
        const bool mixed = n_far_users > 0 && n_users > n_far_users;
        if (mixed && array.n_chains() < 2)
            throw ConfigError("n_chains must be >= 2 when far and near users share a slot");
        try
        {
            noise.validate();
            large_scale.validate();
        }
        catch (const DomainError &e)
        {
            throw ConfigError(e.what());
        }
    }

    UserDrop make_drop(const ScenarioConfig &scenario, std::vector<Point> positions)
    {
        UserDrop drop;
        drop.positions = std::move(positions);
        drop.irs_angle = angle_of(scenario.bs_position, scenario.irs_position);
        for (const auto &p : drop.positions)
        {
            drop.bs_angles.push_back(angle_of(scenario.bs_position, p));
            drop.bs_distances.push_back(distance(scenario.bs_position, p));
            drop.irs_distances.push_back(distance(scenario.irs_position, p));
        }
        auto cats = categorize_users(drop.positions, scenario.edge_square);
        drop.far_set = std::move(cats.far_set);
        drop.near_set = std::move(cats.near_set);
        return drop;
    }

    UserDrop place_users(const ScenarioConfig &scenario, Rng &rng)
    {
        scenario.validate();
        const auto uniform_in = [&rng](const Square &sq) {
            std::uniform_real_distribution<double> ux(sq.lo.x, sq.hi.x);
            std::uniform_real_distribution<double> uy(sq.lo.y, sq.hi.y);
            const double x = ux(rng);
            return Point{x, uy(rng)};
        };

        std::vector<Point> positions;
        positions.reserve(scenario.n_users);
        for (std::size_t i = 0; i < scenario.n_far_users; ++i)
            positions.push_back(uniform_in(scenario.edge_square));

        const Square center = scenario.center_square();
        while (positions.size() < scenario.n_users)
        {
            const Point p = uniform_in(center);
            if (distance(scenario.bs_position, p) >= scenario.min_distance_m && !(p == scenario.bs_position))
                positions.push_back(p);
        }
        return make_drop(scenario, std::move(positions));
    }

    double CdfSummary::mean() const
    {
        if (sorted_sums.empty())
            return 0.0;
        return std::accumulate(sorted_sums.begin(), sorted_sums.end(), 0.0) / static_cast<double>(sorted_sums.size());
    }

    double percentile(const CdfSummary &summary, double p)
    {
        if (summary.sorted_sums.empty())
            throw DomainError("percentile: empty summary");
        if (!(p > 0.0 && p < 1.0))
            throw DomainError("percentile: level must lie in (0, 1)");
        const double n = static_cast<double>(summary.sorted_sums.size());
        // The tolerance keeps products such as 0.05 * 100 from rounding up past an integer.
        auto idx = static_cast<std::size_t>(std::ceil(p * n - 1e-9));
        idx = std::clamp<std::size_t>(idx, 1, summary.sorted_sums.size());
        return summary.sorted_sums[idx - 1];
    }

    DropResult run_drop(const ScenarioConfig &scenario, std::size_t drop_index)
    {
        auto placement_rng = make_stream(scenario.seed, drop_index, StreamTag::placement);
        auto channel_rng = make_stream(scenario.seed, drop_index, StreamTag::channel);

        DropResult r;
        r.drop = place_users(scenario, placement_rng);
        r.channels = generate_channels(scenario.large_scale, scenario.channel_geometry(), r.drop, channel_rng);
        const auto params = scenario.link_params();
        for (auto s : scenario.schemes)
            r.outcomes.push_back(run_scheme(s, r.drop, r.channels, params));
        return r;
    }

    const CdfSummary &CampaignResult::at(Scheme s) const
    {
        for (const auto &c : summaries)
            if (c.scheme == s)
                return c;
        throw DomainError("campaign has no results for scheme " + std::string(to_string(s)));
    }

    CampaignResult run_campaign(const ScenarioConfig &scenario)
    {
        scenario.validate();
        const std::size_t D = scenario.n_drops;
        const std::size_t S = scenario.schemes.size();

        // sums[d * S + s]; each drop writes only its own slots.
        std::vector<double> sums(D * S, 0.0);
        std::vector<std::exception_ptr> errors(D);
        std::atomic<std::size_t> next{0};

        const auto worker = [&] {
            for (std::size_t d = next++; d < D; d = next++)
            {
                try
                {
                    const auto r = run_drop(scenario, d);
                    for (std::size_t s = 0; s < S; ++s)
                        sums[d * S + s] = r.outcomes[s].sum_se;
                }
                catch (...)
                {
                    errors[d] = std::current_exception();
                }
            }
        };

        std::size_t n_threads = scenario.threads ? scenario.threads : std::max(1u, std::thread::hardware_concurrency());
        n_threads = std::min(n_threads, D);
        if (n_threads <= 1)
        {
            worker();
        }
        else
        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < n_threads; ++t)
                pool.emplace_back(worker);
        }

        for (std::size_t d = 0; d < D; ++d)
        {
            if (!errors[d])
                continue;
            try
            {
                std::rethrow_exception(errors[d]);
            }
            catch (const std::exception &e)
            {
                throw CampaignError(d, e.what());
            }
        }

        CampaignResult out;
        for (std::size_t s = 0; s < S; ++s)
        {
            CdfSummary c;
            c.scheme = scenario.schemes[s];
            c.sorted_sums.reserve(D);
            for (std::size_t d = 0; d < D; ++d)
                c.sorted_sums.push_back(sums[d * S + s]);
            std::sort(c.sorted_sums.begin(), c.sorted_sums.end());
            out.summaries.push_back(std::move(c));
        }
        return out;
    }
}
