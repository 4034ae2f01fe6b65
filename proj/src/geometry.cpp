// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field circular H-MIMO beamforming for data and energy multicast
// Copyright (C) 2026 The hmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hmimo/geometry.hpp"

#include "hmimo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hmimo
{

void validate(const PolarPoint &p)
{
    if (!std::isfinite(p.r) || !std::isfinite(p.theta) || !std::isfinite(p.phi))
        throw std::invalid_argument("PolarPoint: non-finite coordinate");
    if (p.r <= 0.0)
        throw std::invalid_argument("PolarPoint: range must be positive");
}

PolarPoint from_cartesian(double x, double y, double z)
{
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0)
        return {0.0, 0.0, 0.0};
    double phi = std::atan2(y, x);
    if (phi < 0.0)
        phi += 2.0 * std::numbers::pi;
    return {r, std::acos(std::clamp(z / r, -1.0, 1.0)), phi};
}

CircularArray CircularArray::half_wavelength(std::size_t n_antennas, double wavelength)
{
    return {n_antennas, wavelength, static_cast<double>(n_antennas) * wavelength / (4.0 * std::numbers::pi)};
}

CircularArray::CircularArray(std::size_t n_antennas, double wavelength, double radius)
    : wavelength_(wavelength), radius_(radius)
{
    if (n_antennas == 0)
        throw std::invalid_argument("CircularArray: need at least one antenna");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("CircularArray: wavelength must be positive");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("CircularArray: radius must be positive");

    angles_.resize(n_antennas);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_antennas);
    for (std::size_t n = 0; n < n_antennas; ++n)
        angles_[n] = step * static_cast<double>(n);
}

double CircularArray::wavenumber() const noexcept
{
    return 2.0 * std::numbers::pi / wavelength_;
}

double CircularArray::fresnel_lower_bound() const noexcept
{
    const double d = 2.0 * radius_;
    return 0.5 * std::sqrt(d * d * d / wavelength_);
}

namespace
{
void check_index(const CircularArray &array, std::size_t n)
{
    if (n >= array.size())
        throw std::out_of_range("antenna index " + std::to_string(n) + " out of range [0, " +
                                std::to_string(array.size()) + ")");
}

// r - r_n written without cancellation: (2 r R u - R^2) / (r + r_n).
double range_offset(double r, double radius, double u, double dist)
{
    return (2.0 * r * radius * u - radius * radius) / (r + dist);
}
} // namespace

double exact_distance(const CircularArray &array, const PolarPoint &p, std::size_t n)
{
    check_index(array, n);
    const double R = array.radius();
    const double u = std::sin(p.theta) * std::cos(p.phi - array.angle(n));
    const double d2 = p.r * p.r + R * R - 2.0 * p.r * R * u;
    return std::sqrt(std::max(d2, 0.0));
}

double fresnel_distance(const CircularArray &array, const PolarPoint &p, std::size_t n)
{
    check_index(array, n);
    const double R = array.radius();
    const double r = p.r;
    if (!(r > R))
        throw OutOfValidity("fresnel_distance: r = " + std::to_string(r) + " m is inside the array radius " +
                            std::to_string(R) + " m");
    const double s = std::sin(p.theta);
    const double c = std::cos(p.phi - array.angle(n));
    return r - R * s * c + (R * R / (2.0 * r)) * (1.0 - c * c * s * s) - (R * R * R / (2.0 * r * r)) * s * c -
           R * R * R * R / (8.0 * r * r * r);
}

CVec steering_vector(const CircularArray &array, const PolarPoint &p)
{
    validate(p);
    const std::size_t N = array.size();
    const double R = array.radius();
    const double k = array.wavenumber();
    const double s = std::sin(p.theta);
    const double norm = 1.0 / std::sqrt(static_cast<double>(N));

    CVec a(static_cast<Eigen::Index>(N));
    for (std::size_t n = 0; n < N; ++n)
    {
        const double u = s * std::cos(p.phi - array.angle(n));
        const double d = std::sqrt(std::max(p.r * p.r + R * R - 2.0 * p.r * R * u, 0.0));
        a(static_cast<Eigen::Index>(n)) = std::polar(norm, k * range_offset(p.r, R, u, d));
    }
    return a;
}

} // namespace hmimo
