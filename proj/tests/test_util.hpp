// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_TEST_UTIL_HPP
#define BDMA_TEST_UTIL_HPP

#include "bdma/array_geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace bdma::test
{
    inline cplx random_complex(std::mt19937_64 &rng, double scale = 1.0)
    {
        std::normal_distribution<double> g(0.0, scale);
        const double re = g(rng);
        return {re, g(rng)};
    }

    inline std::vector<cplx> random_vector(std::mt19937_64 &rng, std::size_t n, double scale = 1.0)
    {
        std::vector<cplx> v(n);
        for (auto &x : v)
            x = random_complex(rng, scale);
        return v;
    }

    inline std::vector<cplx> random_unit_vector(std::mt19937_64 &rng, std::size_t n)
    {
        auto v = random_vector(rng, n);
        double s = 0.0;
        for (const auto &x : v)
            s += std::norm(x);
        for (auto &x : v)
            x /= std::sqrt(s);
        return v;
    }

    inline double random_angle(std::mt19937_64 &rng)
    {
        return std::uniform_real_distribution<double>(0.0, two_pi)(rng);
    }

    // Smallest distance between two phases on the circle.
    inline double phase_distance(double a, double b)
    {
        const double d = std::fmod(std::fabs(a - b), two_pi);
        return std::min(d, two_pi - d);
    }
}

#endif
