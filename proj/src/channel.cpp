// SPDX-License-Identifier: Apache-2.0

#include "bdma/channel.hpp"
#include "bdma/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bdma
{
    void LargeScaleParams::validate() const
    {
        if (!(shadowing_std_db >= 0.0))
            throw DomainError("shadowing standard deviation must be >= 0 dB");
        if (!(rician_factor >= 0.0))
            throw DomainError("Rician factor must be >= 0");
        if (!(los_exponent > 0.0))
            throw DomainError("LOS path-loss exponent must be > 0");
        if (!std::isfinite(nlos_intercept_db) || !std::isfinite(nlos_slope) || !std::isfinite(los_ref_loss_db))
            throw DomainError("large-scale parameters must be finite");
    }

    void NoiseParams::validate() const
    {
        if (!(bandwidth_hz > 0.0) || !(temperature_k > 0.0) || !(boltzmann > 0.0) || !std::isfinite(noise_figure_db))
            throw DomainError("noise parameters must be strictly positive");
    }

    std::vector<cplx> ComplexMatrix::col(std::size_t c) const
    {
        std::vector<cplx> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    double nlos_gain_db(const LargeScaleParams &params, double distance_m, double shadowing_db)
    {
        if (!(distance_m > 0.0))
            throw DomainError("nlos_gain_db: distance must be positive, got " + std::to_string(distance_m));
        const double d = params.nlos_distance_unit == DistanceUnit::kilometers ? distance_m / 1000.0 : distance_m;
        return params.nlos_intercept_db - params.nlos_slope * std::log10(d) + shadowing_db;
    }

    double los_loss_db(const LargeScaleParams &params, double distance_m)
    {
        if (!(distance_m >= 1.0))
            throw DomainError("los_loss_db: distance " + std::to_string(distance_m) + " m is below the 1 m reference");
        return params.los_ref_loss_db + 10.0 * params.los_exponent * std::log10(distance_m);
    }

    cplx draw_rayleigh(Rng &rng, double variance)
    {
        if (!(variance >= 0.0))
            throw DomainError("draw_rayleigh: negative variance");
        std::normal_distribution<double> gauss(0.0, 1.0);
        const double re = gauss(rng);
        const double im = gauss(rng);
        const double s = std::sqrt(variance / 2.0);
        return {s * re, s * im};
    }

    cplx draw_rician(Rng &rng, double total_power, double rician_factor)
    {
        if (!(total_power >= 0.0) || !(rician_factor >= 0.0))
            throw DomainError("draw_rician: power and Rician factor must be >= 0");
        if (rician_factor == 0.0)
            return draw_rayleigh(rng, total_power);

        std::uniform_real_distribution<double> phase(0.0, two_pi);
        if (std::isinf(rician_factor))
            return std::polar(std::sqrt(total_power), phase(rng));

        const double los_power = total_power * rician_factor / (1.0 + rician_factor);
        const double scatter_power = total_power / (1.0 + rician_factor);
        const cplx los = std::polar(std::sqrt(los_power), phase(rng));
        return los + draw_rayleigh(rng, scatter_power);
    }

    double noise_power(const NoiseParams &params)
    {
        params.validate();
        return params.boltzmann * params.bandwidth_hz * params.temperature_k * db_to_linear(params.noise_figure_db);
    }

    ChannelRealization generate_channels(const LargeScaleParams &params, const ChannelGeometry &geometry,
                                         const UserDrop &drop, Rng &rng)
    {
        params.validate();
        const std::size_t M = geometry.n_chains;
        const std::size_t N = geometry.n_irs_elements;
        const std::size_t K = drop.n_users();
        if (drop.bs_distances.size() != K || drop.irs_distances.size() != K)
            throw DomainError("generate_channels: drop distances do not match the number of users");

        std::normal_distribution<double> shadowing(0.0, 1.0);
        const auto clamp = [&](double d) { return std::max(d, geometry.min_link_distance_m); };

        ChannelRealization ch{ComplexMatrix(M, K), ComplexMatrix(M, N), ComplexMatrix(N, K)};

        for (std::size_t k = 0; k < K; ++k)
        {
            const double x = params.shadowing_std_db * shadowing(rng);
            const double var = db_to_linear(nlos_gain_db(params, clamp(drop.bs_distances[k]), x));
            for (std::size_t m = 0; m < M; ++m)
                ch.direct(m, k) = draw_rayleigh(rng, var);
        }

        if (N > 0)
        {
            const double power = db_to_linear(-los_loss_db(params, geometry.bs_irs_distance_m));
            for (std::size_t m = 0; m < M; ++m)
                for (std::size_t n = 0; n < N; ++n)
                    ch.bs_irs(m, n) = draw_rician(rng, power, params.rician_factor);
        }

        for (std::size_t k = 0; k < K; ++k)
        {
            const double x = params.shadowing_std_db * shadowing(rng);
            const double var = db_to_linear(nlos_gain_db(params, clamp(drop.irs_distances[k]), x));
            for (std::size_t n = 0; n < N; ++n)
                ch.irs_ue(n, k) = draw_rayleigh(rng, var);
        }
        return ch;
    }
}
