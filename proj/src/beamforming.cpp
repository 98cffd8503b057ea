// SPDX-License-Identifier: Apache-2.0

#include "bdma/beamforming.hpp"
#include "bdma/error.hpp"

#include <cmath>
#include <string>

namespace bdma
{
    namespace
    {
        double wrap_phase(double x)
        {
            return Angle(x).radians();
        }

        double safe_arg(cplx z)
        {
            return z == cplx{} ? 0.0 : std::arg(z);
        }
    }

    WeightVector::WeightVector(std::vector<cplx> entries) : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw DomainError("WeightVector: empty");
        if (squared_norm() > 1.0 + 1e-12)
            throw DomainError("WeightVector: squared norm exceeds 1");
    }

    double WeightVector::squared_norm() const
    {
        double s = 0.0;
        for (const auto &w : entries_)
            s += std::norm(w);
        return s;
    }

    IrsConfig::IrsConfig(std::vector<double> phases) : phases_(std::move(phases))
    {
        for (auto &p : phases_)
        {
            if (!std::isfinite(p))
                throw DomainError("IrsConfig: non-finite phase");
            p = wrap_phase(p);
        }
    }

    IrsConfig IrsConfig::identity(std::size_t n_elements)
    {
        return IrsConfig(std::vector<double>(n_elements, 0.0));
    }

    WeightVector matched_weights(const ArrayLayout &layout, Angle theta)
    {
        const auto a = steering_vector(layout, theta);
        const double scale = 1.0 / std::sqrt(static_cast<double>(layout.n_per_sub()));
        std::vector<cplx> w(a.size());
        for (std::size_t n = 0; n < a.size(); ++n)
            w[n] = scale * a[n];
        return WeightVector(std::move(w));
    }

    IrsConfig optimal_irs_phases(std::span<const cplx> bs_irs_row, std::span<const cplx> irs_ue_col,
                                 double target_phase)
    {
        if (bs_irs_row.size() != irs_ue_col.size())
            throw DomainError("optimal_irs_phases: " + std::to_string(bs_irs_row.size()) + " BS-IRS coefficients vs " +
                              std::to_string(irs_ue_col.size()) + " IRS-UE coefficients");
        std::vector<double> phases(bs_irs_row.size());
        for (std::size_t n = 0; n < phases.size(); ++n)
            phases[n] = target_phase - safe_arg(bs_irs_row[n]) - safe_arg(irs_ue_col[n]);
        return IrsConfig(std::move(phases));
    }

    double cophase_with_direct(cplx direct_aggregate)
    {
        return safe_arg(direct_aggregate);
    }

    cplx reflected_sum(std::span<const cplx> bs_irs_row, std::span<const cplx> irs_ue_col, const IrsConfig &irs)
    {
        if (bs_irs_row.size() != irs_ue_col.size() || irs.size() != irs_ue_col.size())
            throw DomainError("reflected_sum: dimension mismatch");
        cplx acc{};
        for (std::size_t n = 0; n < irs.size(); ++n)
            acc += irs_ue_col[n] * irs.coefficient(n) * bs_irs_row[n];
        return acc;
    }
}
