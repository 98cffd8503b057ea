// SPDX-License-Identifier: Apache-2.0
//
// Stochastic channel model: Rayleigh BS-UE and IRS-UE links with a modified COST-Hata large-scale
// gain and log-normal shadowing, a Rician BS-IRS link with a distance-power law, and thermal noise.

#ifndef BDMA_CHANNEL_HPP
#define BDMA_CHANNEL_HPP

#include "bdma/array_geometry.hpp"
#include "bdma/random.hpp"
#include "bdma/user_drop.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace bdma
{
    enum class DistanceUnit
    {
        meters,
        kilometers,
    };

    struct LargeScaleParams
    {
        double nlos_intercept_db = -166.0;
        double nlos_slope = 35.0; // dB per decade
        double shadowing_std_db = 8.0;
        double los_ref_loss_db = 60.0; // at 1 m
        double los_exponent = 2.0;
        double rician_factor = 5.0; // linear LOS-to-scatter power ratio
        DistanceUnit nlos_distance_unit = DistanceUnit::kilometers;

        void validate() const;
    };

    struct NoiseParams
    {
        double bandwidth_hz = 2.0e7;
        double temperature_k = 290.0;
        double noise_figure_db = 9.0;
        double boltzmann = 1.380649e-23; // [J/K]

        void validate() const;
    };

    // Dense row-major complex matrix.
    class ComplexMatrix
    {
    public:
        ComplexMatrix() = default;
        ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
        std::vector<cplx> col(std::size_t c) const;

        friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cplx> data_;
    };

    // One small-scale fading draw, all coefficients referenced to the first element of each sub-array.
    struct ChannelRealization
    {
        ComplexMatrix direct; // M x K, f_mk
        ComplexMatrix bs_irs; // M x N, h_mn
        ComplexMatrix irs_ue; // N x K, g_nk

        friend bool operator==(const ChannelRealization &, const ChannelRealization &) = default;
    };

    // Gain in dB: intercept - slope * log10(d) + shadowing, d in the configured unit.
    double nlos_gain_db(const LargeScaleParams &params, double distance_m, double shadowing_db);

    // Loss in dB: L0 + 10 * alpha * log10(d), d >= 1 m.
    double los_loss_db(const LargeScaleParams &params, double distance_m);

    cplx draw_rayleigh(Rng &rng, double variance);

    // LOS part with random phase plus scattered part; the power split follows the Rician factor.
    // An infinite factor gives a pure LOS coefficient; zero gives draw_rayleigh(total_power).
    cplx draw_rician(Rng &rng, double total_power, double rician_factor);

    // Thermal noise power in watts.
    double noise_power(const NoiseParams &params);

    struct ChannelGeometry
    {
        std::size_t n_chains = 0;
        std::size_t n_irs_elements = 0;
        double bs_irs_distance_m = 0.0;
        double min_link_distance_m = 10.0; // NLOS distances are clamped to this
    };

    ChannelRealization generate_channels(const LargeScaleParams &params, const ChannelGeometry &geometry,
                                         const UserDrop &drop, Rng &rng);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
}

#endif
