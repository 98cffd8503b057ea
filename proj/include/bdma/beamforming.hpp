// SPDX-License-Identifier: Apache-2.0
//
// Closed-form beam design: matched analog weights per sub-array, and IRS phases that
// co-phase every reflected branch at a chosen receiver phase.

#ifndef BDMA_BEAMFORMING_HPP
#define BDMA_BEAMFORMING_HPP

#include "bdma/array_geometry.hpp"

#include <span>
#include <vector>

namespace bdma
{
    // Analog weights of one sub-array, squared norm <= 1.
    class WeightVector
    {
    public:
        explicit WeightVector(std::vector<cplx> entries);

        std::span<const cplx> entries() const noexcept { return entries_; }
        std::size_t size() const noexcept { return entries_.size(); }
        double squared_norm() const;

    private:
        std::vector<cplx> entries_;
    };

    // Unit-amplitude reflection coefficients; phases held in [0, 2*pi).
    class IrsConfig
    {
    public:
        IrsConfig() = default;
        explicit IrsConfig(std::vector<double> phases);

        // All phases zero.
        static IrsConfig identity(std::size_t n_elements);

        std::span<const double> phases() const noexcept { return phases_; }
        std::size_t size() const noexcept { return phases_.size(); }
        static constexpr double amplitude() noexcept { return 1.0; }
        cplx coefficient(std::size_t n) const { return std::polar(amplitude(), phases_[n]); }

        friend bool operator==(const IrsConfig &, const IrsConfig &) = default;

    private:
        std::vector<double> phases_;
    };

    // (1/sqrt(Ns)) a(theta): unit norm, gain sqrt(Ns) toward theta.
    WeightVector matched_weights(const ArrayLayout &layout, Angle theta);

    // phi_n = mod(target_phase - arg(h_n) - arg(g_n), 2*pi); zero-magnitude entries contribute no phase.
    IrsConfig optimal_irs_phases(std::span<const cplx> bs_irs_row, std::span<const cplx> irs_ue_col,
                                 double target_phase);

    // Receiver phase that makes a reflected aggregate add in phase with `direct_aggregate`; 0 when it is zero.
    double cophase_with_direct(cplx direct_aggregate);

    // sum_n g_n e^{j phi_n} h_n
    cplx reflected_sum(std::span<const cplx> bs_irs_row, std::span<const cplx> irs_ue_col, const IrsConfig &irs);
}

#endif
