// SPDX-License-Identifier: Apache-2.0
//
// Geometry of a partially-connected hybrid array: every RF chain drives a uniform linear
// sub-array of n_per_sub elements. All sub-arrays share the same steering vector, with the
// first element of each sub-array as phase reference.

#ifndef BDMA_ARRAY_GEOMETRY_HPP
#define BDMA_ARRAY_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace bdma
{
    using cplx = std::complex<double>;

    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Planar direction in radians, always held in [0, 2*pi).
    class Angle
    {
    public:
        constexpr Angle() = default;
        explicit Angle(double radians);

        double radians() const noexcept { return value_; }

        friend bool operator==(const Angle &, const Angle &) = default;

    private:
        double value_ = 0.0;
    };

    struct Point
    {
        double x = 0.0; // [m]
        double y = 0.0; // [m]

        friend bool operator==(const Point &, const Point &) = default;
    };

    double distance(const Point &a, const Point &b);

    class ArrayLayout
    {
    public:
        // Throws DomainError unless n_total is an exact multiple of n_chains and spacing > 0.
        ArrayLayout(std::size_t n_total, std::size_t n_chains, double spacing_wavelengths = 0.5);

        std::size_t n_total() const noexcept { return n_total_; }
        std::size_t n_chains() const noexcept { return n_chains_; }
        std::size_t n_per_sub() const noexcept { return n_per_sub_; }
        double spacing() const noexcept { return spacing_; }

    private:
        std::size_t n_total_;
        std::size_t n_chains_;
        std::size_t n_per_sub_;
        double spacing_;
    };

    // Unit-modulus steering vector of one sub-array; entry 0 is exactly 1.
    class SteeringVector
    {
    public:
        explicit SteeringVector(std::vector<cplx> entries);

        std::span<const cplx> entries() const noexcept { return entries_; }
        std::size_t size() const noexcept { return entries_.size(); }
        const cplx &operator[](std::size_t i) const { return entries_[i]; }

    private:
        std::vector<cplx> entries_;
    };

    // Phase of element `element_index` (1-based) relative to the sub-array reference element.
    double element_phase(const ArrayLayout &layout, std::size_t element_index, Angle theta);

    SteeringVector steering_vector(const ArrayLayout &layout, Angle theta);

    // B(theta) = a^H(theta) w. Throws DomainError if weights.size() != n_per_sub.
    cplx beam_pattern(const ArrayLayout &layout, std::span<const cplx> weights, Angle theta);

    // Bearing of `target` seen from `origin`. Throws DomainError for coincident points.
    Angle angle_of(const Point &origin, const Point &target);
}

#endif
