// SPDX-License-Identifier: Apache-2.0

#include "bdma/access_schemes.hpp"
#include "bdma/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bdma
{
    std::string_view to_string(Scheme s)
    {
        switch (s)
        {
        case Scheme::bdma:
            return "bdma";
        case Scheme::tdma:
            return "tdma";
        case Scheme::fdma:
            return "fdma";
        case Scheme::noma:
            return "noma";
        }
        return "?";
    }

    Scheme parse_scheme(std::string_view token)
    {
        for (auto s : all_schemes)
            if (token == to_string(s))
                return s;
        throw ConfigError("unknown scheme '" + std::string(token) + "' (valid: bdma, tdma, fdma, noma)");
    }

    std::string_view to_string(SidelobeModel s)
    {
        return s == SidelobeModel::exact ? "exact" : "ideal";
    }

    SidelobeModel parse_sidelobe_model(std::string_view token)
    {
        if (token == "exact")
            return SidelobeModel::exact;
        if (token == "ideal")
            return SidelobeModel::ideal;
        throw ConfigError("unknown sidelobe model '" + std::string(token) + "' (valid: ideal, exact)");
    }

    Beam matched_beam(const ArrayLayout &layout, Angle target)
    {
        return Beam{matched_weights(layout, target), target};
    }

    cplx pattern_gain(const ArrayLayout &layout, const Beam &beam, Angle theta, SidelobeModel model)
    {
        if (model == SidelobeModel::ideal && !(theta == beam.target))
            return {};
        return beam_pattern(layout, beam.weights.entries(), theta);
    }

    bool Square::contains(const Point &p) const
    {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }

    UserCategories categorize_users(std::span<const Point> positions, const Square &edge_region, CategorizePolicy)
    {
        if (positions.empty())
            throw DomainError("categorize_users: no users");
        UserCategories out;
        for (std::size_t k = 0; k < positions.size(); ++k)
            (edge_region.contains(positions[k]) ? out.far_set : out.near_set).push_back(k);
        return out;
    }

    namespace
    {
        std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

        // Takes `count` distinct users from `pool` starting at `cursor`, wrapping around.
        std::vector<std::size_t> take_cyclic(const std::vector<std::size_t> &pool, std::size_t &cursor,
                                             std::size_t count)
        {
            std::vector<std::size_t> out;
            out.reserve(count);
            for (std::size_t i = 0; i < count; ++i)
            {
                out.push_back(pool[cursor]);
                cursor = (cursor + 1) % pool.size();
            }
            return out;
        }

        void check_dimensions(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params)
        {
            const std::size_t K = drop.n_users();
            const std::size_t M = params.layout.n_chains();
            const std::size_t N = ch.bs_irs.cols();
            if (K == 0)
                throw DomainError("no users in drop");
            if (ch.direct.rows() != M || ch.direct.cols() != K || ch.bs_irs.rows() != M || ch.irs_ue.rows() != N ||
                ch.irs_ue.cols() != K || drop.bs_angles.size() != K)
                throw DomainError("channel realization does not match drop and array dimensions");
        }

        SchemeOutcome empty_outcome(Scheme s, std::size_t K)
        {
            SchemeOutcome out;
            out.scheme = s;
            out.per_user_se.assign(K, 0.0);
            out.resource_share.assign(K, 0.0);
            return out;
        }

        void finish(SchemeOutcome &out)
        {
            out.sum_se = std::accumulate(out.per_user_se.begin(), out.per_user_se.end(), 0.0);
        }
    }

    std::vector<UserGroup> form_groups(const UserDrop &drop, std::size_t n_chains)
    {
        const std::size_t K = drop.n_users();
        const auto &far = drop.far_set;
        const auto &near = drop.near_set;
        if (K == 0)
            throw DomainError("form_groups: no users");
        if (n_chains == 0)
            throw ConfigError("form_groups: at least one RF chain is required");
        if (far.size() + near.size() != K)
            throw DomainError("form_groups: far and near sets do not cover all users");

        std::vector<UserGroup> groups;
        std::size_t cursor = 0;
        if (!far.empty())
        {
            if (n_chains < 2 && !near.empty())
                throw ConfigError("form_groups: serving a far user together with near users needs at least 2 RF chains");
            const std::size_t near_per_slot = n_chains - 1;
            std::size_t slots = std::max(ceil_div(K, n_chains), far.size());
            if (!near.empty())
                slots = std::max(slots, ceil_div(near.size(), near_per_slot));
            for (std::size_t t = 0; t < slots; ++t)
            {
                UserGroup g;
                g.slot_index = t;
                g.has_far_user = true;
                g.members.push_back(far[t % far.size()]);
                if (!near.empty())
                {
                    auto nus = take_cyclic(near, cursor, std::min(near_per_slot, near.size()));
                    g.members.insert(g.members.end(), nus.begin(), nus.end());
                }
                groups.push_back(std::move(g));
            }
        }
        else
        {
            const std::size_t slots = ceil_div(near.size(), n_chains);
            for (std::size_t t = 0; t < slots; ++t)
                groups.push_back(UserGroup{take_cyclic(near, cursor, std::min(n_chains, near.size())), t, false});
        }
        return groups;
    }

    cplx effective_channel(std::size_t k, std::size_t m, const Beam &beam, const IrsConfig &irs,
                           const ChannelRealization &ch, const UserDrop &drop, const ArrayLayout &layout,
                           SidelobeModel model)
    {
        const std::size_t N = ch.bs_irs.cols();
        if (m >= ch.direct.rows() || k >= ch.direct.cols() || k >= drop.bs_angles.size() || irs.size() != N ||
            ch.irs_ue.rows() != N || k >= ch.irs_ue.cols() || ch.bs_irs.rows() != ch.direct.rows())
            throw DomainError("effective_channel: dimension mismatch");

        cplx reflected{};
        for (std::size_t n = 0; n < N; ++n)
            reflected += ch.irs_ue(n, k) * irs.coefficient(n) * ch.bs_irs(m, n);

        const cplx toward_irs = pattern_gain(layout, beam, drop.irs_angle, model);
        const cplx toward_user = pattern_gain(layout, beam, drop.bs_angles[k], model);
        return reflected * toward_irs + ch.direct(m, k) * toward_user;
    }

    SlotConfig bdma_slot_config(const UserGroup &group, const UserDrop &drop, const ChannelRealization &ch,
                                const LinkParams &params, const IrsConfig &previous_irs)
    {
        if (group.members.empty() || group.members.size() > params.layout.n_chains())
            throw DomainError("bdma_slot_config: group size must be in [1, M]");
        SlotConfig cfg;
        for (std::size_t m = 0; m < group.members.size(); ++m)
        {
            const bool irs_beam = (m == 0 && group.has_far_user);
            cfg.beams.push_back(matched_beam(params.layout, irs_beam ? drop.irs_angle : drop.bs_angles[group.members[m]]));
        }

        const std::size_t N = ch.bs_irs.cols();
        if (group.has_far_user)
        {
            const std::size_t fu = group.members.front();
            // No usable direct main lobe toward the far user: any receiver phase is optimal.
            cfg.irs = optimal_irs_phases(ch.bs_irs.row(0), ch.irs_ue.col(fu), 0.0);
        }
        else
        {
            cfg.irs = previous_irs.size() == N ? previous_irs : IrsConfig::identity(N);
        }
        return cfg;
    }

    std::vector<SignalTerms> bdma_signal_terms(const UserGroup &group, const SlotConfig &config, const UserDrop &drop,
                                               const ChannelRealization &ch, const LinkParams &params)
    {
        if (config.beams.size() != group.members.size())
            throw DomainError("bdma_signal_terms: one beam per group member expected");
        const double per_stream = params.total_power_w / static_cast<double>(params.layout.n_chains());

        std::vector<SignalTerms> terms(group.members.size());
        for (std::size_t i = 0; i < group.members.size(); ++i)
        {
            const std::size_t k = group.members[i];
            for (std::size_t m = 0; m < config.beams.size(); ++m)
            {
                const cplx e = effective_channel(k, m, config.beams[m], config.irs, ch, drop, params.layout,
                                                 params.sidelobes);
                (m == i ? terms[i].desired_w : terms[i].interference_w) += per_stream * std::norm(e);
            }
        }
        return terms;
    }

    double sinr_to_se(double sinr, double resource_fraction)
    {
        if (!(sinr >= 0.0))
            throw DomainError("sinr_to_se: negative SINR");
        if (!(resource_fraction > 0.0 && resource_fraction <= 1.0))
            throw DomainError("sinr_to_se: resource fraction outside (0, 1]");
        return resource_fraction * std::log2(1.0 + sinr);
    }

    SchemeOutcome bdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params)
    {
        check_dimensions(drop, ch, params);
        const auto groups = form_groups(drop, params.layout.n_chains());
        const double share = 1.0 / static_cast<double>(groups.size());
        const double per_stream = params.total_power_w / static_cast<double>(params.layout.n_chains());

        auto out = empty_outcome(Scheme::bdma, drop.n_users());
        IrsConfig irs = IrsConfig::identity(ch.bs_irs.cols());
        for (const auto &group : groups)
        {
            const auto cfg = bdma_slot_config(group, drop, ch, params, irs);
            irs = cfg.irs;
            const auto terms = bdma_signal_terms(group, cfg, drop, ch, params);
            for (std::size_t i = 0; i < group.members.size(); ++i)
            {
                const std::size_t k = group.members[i];
                const double sinr = terms[i].desired_w / (terms[i].interference_w + params.noise_power_w);
                out.per_user_se[k] += sinr_to_se(sinr, share);
                out.resource_share[k] += share;
            }
            out.peak_power_w = std::max(out.peak_power_w, per_stream * static_cast<double>(cfg.beams.size()));
        }
        finish(out);
        return out;
    }

    SingleUserLink single_user_link(std::size_t k, const UserDrop &drop, const ChannelRealization &ch,
                                    const LinkParams &params, const std::optional<IrsConfig> &fixed_irs)
    {
        const std::size_t M = params.layout.n_chains();
        SingleUserLink link;
        link.config.beams.push_back(matched_beam(params.layout, drop.irs_angle));
        for (std::size_t m = 1; m < M; ++m)
            link.config.beams.push_back(matched_beam(params.layout, drop.bs_angles[k]));

        if (fixed_irs)
        {
            link.config.irs = *fixed_irs;
        }
        else
        {
            cplx direct{};
            for (std::size_t m = 0; m < M; ++m)
                direct += ch.direct(m, k) *
                          pattern_gain(params.layout, link.config.beams[m], drop.bs_angles[k], params.sidelobes);
            link.config.irs = optimal_irs_phases(ch.bs_irs.row(0), ch.irs_ue.col(k), cophase_with_direct(direct));
        }

        for (std::size_t m = 0; m < M; ++m)
            link.effective += effective_channel(k, m, link.config.beams[m], link.config.irs, ch, drop, params.layout,
                                                params.sidelobes);
        return link;
    }

    SchemeOutcome tdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params)
    {
        check_dimensions(drop, ch, params);
        const std::size_t K = drop.n_users();
        const double M = static_cast<double>(params.layout.n_chains());
        const double share = 1.0 / static_cast<double>(K);

        auto out = empty_outcome(Scheme::tdma, K);
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto link = single_user_link(k, drop, ch, params);
            const double snr = params.total_power_w / M * std::norm(link.effective) / params.noise_power_w;
            out.per_user_se[k] = sinr_to_se(snr, share);
            out.resource_share[k] = share;
        }
        out.peak_power_w = params.total_power_w;
        finish(out);
        return out;
    }

    SchemeOutcome fdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params)
    {
        check_dimensions(drop, ch, params);
        const std::size_t K = drop.n_users();
        const double M = static_cast<double>(params.layout.n_chains());
        const double share = 1.0 / static_cast<double>(K);
        const double band_power = params.total_power_w * share;
        const double band_noise = params.noise_power_w * share;

        // One phase configuration for the whole band, tuned for the lowest-indexed far user
        // (user 0 when every user is near).
        const std::size_t reference = drop.far_set.empty() ? 0 : drop.far_set.front();
        const IrsConfig irs = single_user_link(reference, drop, ch, params).config.irs;

        auto out = empty_outcome(Scheme::fdma, K);
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto link = single_user_link(k, drop, ch, params, irs);
            const double snr = band_power / M * std::norm(link.effective) / band_noise;
            out.per_user_se[k] = sinr_to_se(snr, share);
            out.resource_share[k] = share;
        }
        out.peak_power_w = band_power * static_cast<double>(K);
        finish(out);
        return out;
    }

    SchemeOutcome noma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params)
    {
        check_dimensions(drop, ch, params);
        const auto groups = form_groups(drop, params.layout.n_chains());
        const double share = 1.0 / static_cast<double>(groups.size());
        const double per_chain = params.total_power_w / static_cast<double>(params.layout.n_chains());

        auto out = empty_outcome(Scheme::noma, drop.n_users());
        IrsConfig irs = IrsConfig::identity(ch.bs_irs.cols());
        for (const auto &group : groups)
        {
            const auto cfg = bdma_slot_config(group, drop, ch, params, irs);
            irs = cfg.irs;
            const std::size_t G = group.members.size();
            // Every chain carries the same superposition of all G symbols.
            const double p = per_chain / static_cast<double>(G);

            std::vector<std::pair<double, std::size_t>> gains; // (|e_k|^2, k)
            for (const auto k : group.members)
            {
                cplx e{};
                for (std::size_t m = 0; m < cfg.beams.size(); ++m)
                    e += effective_channel(k, m, cfg.beams[m], cfg.irs, ch, drop, params.layout, params.sidelobes);
                gains.emplace_back(std::norm(e), k);
            }
            std::sort(gains.begin(), gains.end());

            for (std::size_t r = 1; r <= G; ++r)
            {
                const auto [gain, k] = gains[r - 1];
                const double stronger = static_cast<double>(G - r);
                const double sinr = p * gain / (stronger * p * gain + params.noise_power_w);
                out.per_user_se[k] += sinr_to_se(sinr, share);
                out.resource_share[k] += share;
            }
            out.peak_power_w = std::max(out.peak_power_w, per_chain * static_cast<double>(cfg.beams.size()));
        }
        finish(out);
        return out;
    }

    SchemeOutcome run_scheme(Scheme scheme, const UserDrop &drop, const ChannelRealization &ch,
                             const LinkParams &params)
    {
        switch (scheme)
        {
        case Scheme::bdma:
            return bdma_run(drop, ch, params);
        case Scheme::tdma:
            return tdma_run(drop, ch, params);
        case Scheme::fdma:
            return fdma_run(drop, ch, params);
        case Scheme::noma:
            return noma_run(drop, ch, params);
        }
        throw DomainError("run_scheme: unknown scheme");
    }
}
