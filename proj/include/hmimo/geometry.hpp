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

#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hmimo
{

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Position in the array-centred spherical frame. theta is measured from the
// array normal (+z), phi in the array plane from +x. Angles outside their
// canonical ranges are accepted and treated periodically.
struct PolarPoint
{
    double r = 1.0;
    double theta = 0.0;
    double phi = 0.0;

    bool operator==(const PolarPoint &) const = default;
};

// Throws std::invalid_argument unless r > 0 and all fields are finite.
void validate(const PolarPoint &p);

PolarPoint from_cartesian(double x, double y, double z);

// Uniform circular array in the xoy plane, antennas at angles 2*pi*n/N.
class CircularArray
{
  public:
    // Radius R = N * lambda / (4 * pi): half-wavelength arc spacing.
    static CircularArray half_wavelength(std::size_t n_antennas, double wavelength);

    CircularArray(std::size_t n_antennas, double wavelength, double radius);

    std::size_t size() const noexcept { return angles_.size(); }
    double wavelength() const noexcept { return wavelength_; }
    double radius() const noexcept { return radius_; }
    double wavenumber() const noexcept;
    std::span<const double> angles() const noexcept { return angles_; }
    double angle(std::size_t n) const { return angles_.at(n); }

    // Lower edge of the radiating near field, 0.5 * sqrt(D^3 / lambda).
    double fresnel_lower_bound() const noexcept;

  private:
    double wavelength_;
    double radius_;
    std::vector<double> angles_;
};

// Antenna indices are zero-based; std::out_of_range for n >= N.
double exact_distance(const CircularArray &array, const PolarPoint &p, std::size_t n);

// Fourth-order expansion of exact_distance in R/r. Throws OutOfValidity when r <= R.
double fresnel_distance(const CircularArray &array, const PolarPoint &p, std::size_t n);

// Unit-norm polar-domain response: a(n) = exp(j k (r - r_n)) / sqrt(N).
CVec steering_vector(const CircularArray &array, const PolarPoint &p);

} // namespace hmimo
