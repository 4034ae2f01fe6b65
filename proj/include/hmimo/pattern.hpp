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

#include "hmimo/channel.hpp"
#include "hmimo/geometry.hpp"

#include <Eigen/Core>

#include <functional>
#include <utility>
#include <vector>

namespace hmimo
{

// Uniform linear array along the y axis, centred on the origin, broadside +x.
class LinearArray
{
  public:
    LinearArray(std::size_t n_antennas, double spacing, double wavelength);

    std::size_t size() const noexcept { return positions_.size(); }
    double spacing() const noexcept { return spacing_; }
    double wavelength() const noexcept { return wavelength_; }
    double aperture() const noexcept { return spacing_ * static_cast<double>(size()); }
    double position(std::size_t n) const { return positions_.at(n); }

    CVec steering_vector(const PolarPoint &p) const;

  private:
    double spacing_;
    double wavelength_;
    std::vector<double> positions_;
};

// LoS-only channel sqrt(N) * gain * a(p) for the linear baseline.
Channel linear_los_channel(const LinearArray &array, const PolarPoint &p, cd gain);

enum class Plane
{
    Horizontal, // axis1 = x, axis2 = y, fixed = z
    Vertical,   // axis1 = x, axis2 = z, fixed = y
    Angular,    // axis1 = theta, axis2 = phi, fixed = r
};

struct Axis
{
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    std::vector<double> samples() const;

    bool operator==(const Axis &) const = default;
};

struct PlaneSpec
{
    Plane plane = Plane::Horizontal;
    Axis axis1;
    Axis axis2;
    double fixed = 0.0;
};

// Channel-gain-normalized received power |a(p)^H f|^2 over a plane, scaled so
// the grid maximum is 1. values(i, j) belongs to (axis1[i], axis2[j]).
struct BeamPatternGrid
{
    Plane plane = Plane::Horizontal;
    std::vector<double> axis1_samples;
    std::vector<double> axis2_samples;
    Eigen::MatrixXd values;
};

PolarPoint plane_point(const PlaneSpec &spec, double a1, double a2);

BeamPatternGrid beam_pattern(const CircularArray &array, const CVec &f_eff, const PlaneSpec &spec);
BeamPatternGrid linear_array_pattern(const LinearArray &array, const CVec &f_eff, const PlaneSpec &spec);

// Divides by the maximum (no-op on an all-zero grid).
void normalize_max(Eigen::MatrixXd &values);

// Index of the sample closest to (a1, a2).
std::pair<int, int> nearest_cell(const BeamPatternGrid &grid, double a1, double a2);

// Strict 8-neighbour local maxima with value >= min_value.
std::vector<std::pair<int, int>> find_local_maxima(const BeamPatternGrid &grid, double min_value = 0.0);

// The maximum of the (2*window+1)^2 cell neighbourhood around the cell nearest
// (a1, a2) sits within `tolerance` cells of it: the pattern focuses there.
bool peak_near(const BeamPatternGrid &grid, double a1, double a2, int tolerance = 1, int window = 5);

} // namespace hmimo
