// SPDX-License-Identifier: Apache-2.0

#include "bdma/array_geometry.hpp"
#include "bdma/error.hpp"

#include <cmath>
#include <string>

namespace bdma
{
    Angle::Angle(double radians)
    {
        double v = std::fmod(radians, two_pi);
        if (v < 0.0)
            v += two_pi;
        if (v >= two_pi) // fmod of a tiny negative value can round up to 2*pi
            v = 0.0;
        value_ = v;
    }

    double distance(const Point &a, const Point &b)
    {
        return std::hypot(b.x - a.x, b.y - a.y);
    }

    ArrayLayout::ArrayLayout(std::size_t n_total, std::size_t n_chains, double spacing_wavelengths)
        : n_total_(n_total), n_chains_(n_chains), n_per_sub_(0), spacing_(spacing_wavelengths)
    {
        if (n_chains == 0)
            throw DomainError("ArrayLayout: number of RF chains must be at least 1");
        if (n_total == 0 || n_total % n_chains != 0)
            throw DomainError("ArrayLayout: " + std::to_string(n_total) + " antennas cannot be split into " +
                              std::to_string(n_chains) + " equal sub-arrays");
        if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths))
            throw DomainError("ArrayLayout: element spacing must be positive");
        n_per_sub_ = n_total / n_chains;
    }

    SteeringVector::SteeringVector(std::vector<cplx> entries) : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw DomainError("SteeringVector: empty");
    }

    double element_phase(const ArrayLayout &layout, std::size_t element_index, Angle theta)
    {
        if (element_index < 1 || element_index > layout.n_per_sub())
            throw DomainError("element_phase: index " + std::to_string(element_index) + " outside [1, " +
                              std::to_string(layout.n_per_sub()) + "]");
        return two_pi * layout.spacing() * static_cast<double>(element_index - 1) * std::sin(theta.radians());
    }

    SteeringVector steering_vector(const ArrayLayout &layout, Angle theta)
    {
        std::vector<cplx> a(layout.n_per_sub());
        a[0] = cplx(1.0, 0.0);
        for (std::size_t n = 2; n <= a.size(); ++n)
            a[n - 1] = std::polar(1.0, element_phase(layout, n, theta));
        return SteeringVector(std::move(a));
    }

    cplx beam_pattern(const ArrayLayout &layout, std::span<const cplx> weights, Angle theta)
    {
        if (weights.size() != layout.n_per_sub())
            throw DomainError("beam_pattern: weight length " + std::to_string(weights.size()) +
                              " does not match sub-array size " + std::to_string(layout.n_per_sub()));
        const auto a = steering_vector(layout, theta);
        cplx acc{};
        for (std::size_t n = 0; n < weights.size(); ++n)
            acc += std::conj(a[n]) * weights[n];
        return acc;
    }

    Angle angle_of(const Point &origin, const Point &target)
    {
        const double dx = target.x - origin.x;
        const double dy = target.y - origin.y;
        if (dx == 0.0 && dy == 0.0)
            throw DomainError("angle_of: coincident points");
        return Angle(std::atan2(dy, dx));
    }
}
