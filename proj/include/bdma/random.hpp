// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_RANDOM_HPP
#define BDMA_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bdma
{
    using Rng = std::mt19937_64;

    // Independent sub-streams of one drop.
    enum class StreamTag : std::uint64_t
    {
        placement = 1,
        channel = 2,
    };

    // Stream keyed only by (seed, drop index, tag), so the draws a drop sees do not depend on
    // evaluation order, thread count, or which schemes are requested.
    Rng make_stream(std::uint64_t seed, std::uint64_t drop_index, StreamTag tag);
}

#endif
