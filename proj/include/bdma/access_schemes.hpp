// SPDX-License-Identifier: Apache-2.0
//
// Multiple-access schemes over the hybrid array and the IRS. Every scheme maps one
// (drop, channel realization) pair to per-user spectral efficiencies using expected
// powers of independent unit-power symbols.

#ifndef BDMA_ACCESS_SCHEMES_HPP
#define BDMA_ACCESS_SCHEMES_HPP

#include "bdma/array_geometry.hpp"
#include "bdma/beamforming.hpp"
#include "bdma/channel.hpp"
#include "bdma/user_drop.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bdma
{
    enum class Scheme
    {
        bdma,
        tdma,
        fdma,
        noma,
    };

    inline constexpr Scheme all_schemes[] = {Scheme::bdma, Scheme::tdma, Scheme::fdma, Scheme::noma};

    std::string_view to_string(Scheme s);
    // Throws ConfigError listing the valid tokens.
    Scheme parse_scheme(std::string_view token);

    // How beam patterns are evaluated when computing received powers.
    //   exact: true array response in every direction.
    //   ideal: a beam has its main-lobe gain toward its own target and zero elsewhere.
    enum class SidelobeModel
    {
        exact,
        ideal,
    };

    std::string_view to_string(SidelobeModel s);
    SidelobeModel parse_sidelobe_model(std::string_view token);

    struct LinkParams
    {
        ArrayLayout layout;
        double total_power_w = 20.0;
        double noise_power_w = 0.0;
        SidelobeModel sidelobes = SidelobeModel::ideal;
    };

    struct Beam
    {
        WeightVector weights;
        Angle target;
    };

    Beam matched_beam(const ArrayLayout &layout, Angle target);

    cplx pattern_gain(const ArrayLayout &layout, const Beam &beam, Angle theta, SidelobeModel model);

    // ---- user categorizing and grouping ----

    struct Square
    {
        Point lo;
        Point hi;

        bool contains(const Point &p) const;
        bool empty() const { return !(hi.x > lo.x && hi.y > lo.y); }
    };

    enum class CategorizePolicy
    {
        by_region, // users inside the cell-edge square are far users
    };

    struct UserCategories
    {
        std::vector<std::size_t> far_set;
        std::vector<std::size_t> near_set;
    };

    UserCategories categorize_users(std::span<const Point> positions, const Square &edge_region,
                                    CategorizePolicy policy = CategorizePolicy::by_region);

    struct UserGroup
    {
        std::vector<std::size_t> members; // members[m] is served by sub-array m
        std::size_t slot_index = 0;
        bool has_far_user = false; // if set, members[0] is the IRS-aided far user
    };

    // Round-robin grouping: each slot gets one far user on sub-array 0 followed by up to M-1 near
    // users. The slot count is ceil(K/M), raised when the far or near users cannot all be covered.
    // Without far users, groups of up to M near users are served directly.
    std::vector<UserGroup> form_groups(const UserDrop &drop, std::size_t n_chains);

    // ---- signal model ----

    // Coefficient through which sub-array m's stream reaches user k:
    //   sum_n g_nk e^{j phi_n} h_mn B_m(theta_irs) + f_mk B_m(theta_k).
    cplx effective_channel(std::size_t k, std::size_t m, const Beam &beam, const IrsConfig &irs,
                           const ChannelRealization &ch, const UserDrop &drop, const ArrayLayout &layout,
                           SidelobeModel model = SidelobeModel::exact);

    struct SlotConfig
    {
        std::vector<Beam> beams; // one per active sub-array
        IrsConfig irs;
    };

    struct SignalTerms
    {
        double desired_w = 0.0;
        double interference_w = 0.0;
    };

    // Beams and IRS phases for one BDMA slot. `previous_irs` is kept when the group has no far user.
    SlotConfig bdma_slot_config(const UserGroup &group, const UserDrop &drop, const ChannelRealization &ch,
                                const LinkParams &params, const IrsConfig &previous_irs);

    // Desired and multi-user interference power for each group member, in member order.
    std::vector<SignalTerms> bdma_signal_terms(const UserGroup &group, const SlotConfig &config, const UserDrop &drop,
                                               const ChannelRealization &ch, const LinkParams &params);

    double sinr_to_se(double sinr, double resource_fraction);

    // ---- outcomes ----

    struct SchemeOutcome
    {
        Scheme scheme = Scheme::bdma;
        std::vector<double> per_user_se;    // [bps/Hz]
        double sum_se = 0.0;
        std::vector<double> resource_share; // fraction of the time-frequency frame each user occupies
        double peak_power_w = 0.0;          // largest total radiated power at any instant
    };

    SchemeOutcome bdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params);
    SchemeOutcome tdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params);
    SchemeOutcome fdma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params);
    SchemeOutcome noma_run(const UserDrop &drop, const ChannelRealization &ch, const LinkParams &params);

    SchemeOutcome run_scheme(Scheme scheme, const UserDrop &drop, const ChannelRealization &ch,
                             const LinkParams &params);

    // Single-user link used by TDMA and FDMA: sub-array 0 toward the IRS, the rest toward user k.
    // IRS phases co-phase the reflected aggregate with the direct one unless `fixed_irs` is given.
    struct SingleUserLink
    {
        SlotConfig config;
        cplx effective = {}; // sum over sub-arrays of the effective channel
    };

    SingleUserLink single_user_link(std::size_t k, const UserDrop &drop, const ChannelRealization &ch,
                                    const LinkParams &params, const std::optional<IrsConfig> &fixed_irs = {});
}

#endif
