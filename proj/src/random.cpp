// SPDX-License-Identifier: Apache-2.0

#include "bdma/random.hpp"

namespace bdma
{
    Rng make_stream(std::uint64_t seed, std::uint64_t drop_index, StreamTag tag)
    {
        const auto t = static_cast<std::uint64_t>(tag);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(drop_index), static_cast<std::uint32_t>(drop_index >> 32),
                          static_cast<std::uint32_t>(t)};
        return Rng(seq);
    }
}
