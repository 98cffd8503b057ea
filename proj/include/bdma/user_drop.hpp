// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_USER_DROP_HPP
#define BDMA_USER_DROP_HPP

#include "bdma/array_geometry.hpp"

#include <cstddef>
#include <vector>

namespace bdma
{
    // One user placement. User indices are 0-based throughout.
    struct UserDrop
    {
        std::vector<Point> positions;
        std::vector<Angle> bs_angles;     // bearing of each user from the BS
        Angle irs_angle;                  // bearing of the IRS from the BS
        std::vector<double> bs_distances; // [m]
        std::vector<double> irs_distances;
        std::vector<std::size_t> far_set; // ascending; served through the IRS
        std::vector<std::size_t> near_set;

        std::size_t n_users() const noexcept { return positions.size(); }
        bool is_far(std::size_t k) const;
    };
}

#endif
