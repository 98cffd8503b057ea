// SPDX-License-Identifier: Apache-2.0

#include "bdma/user_drop.hpp"

#include <algorithm>

namespace bdma
{
    bool UserDrop::is_far(std::size_t k) const
    {
        return std::binary_search(far_set.begin(), far_set.end(), k);
    }
}
