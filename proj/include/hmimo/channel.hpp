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

#include "hmimo/geometry.hpp"

#include <cstdint>
#include <vector>

namespace hmimo
{

struct PathComponent
{
    cd gain{0.0, 0.0};
    PolarPoint anchor;
};

// Spherical-wave multipath channel: one line-of-sight component plus I
// scattered components,
//   h = sqrt(N) a0 a_t(p0) + sqrt(N / I) sum_i a_i a_t(p_i).
struct Channel
{
    CVec vector;
    PathComponent los;
    std::vector<PathComponent> nlos;

    std::size_t size() const noexcept { return static_cast<std::size_t>(vector.size()); }
};

// Rebuilds the channel vector from its path list.
Channel assemble_channel(const CircularArray &array, const PathComponent &los,
                         std::vector<PathComponent> nlos = {});

struct ChannelGenConfig
{
    double tx_gain_dbi = 10.0;
    double rx_gain_dbi = 0.0;
    double nlos_amplitude_ratio = 0.1; // std-dev of |a_i| relative to |a0|
    double scatterer_min_range = 1.0;  // m, inner annulus radius
    double scatterer_max_range = 0.0;  // m, <= 0 means "user range"
};

// Friis amplitude sqrt(Gt Gr) lambda / (4 pi r).
double los_amplitude(const ChannelGenConfig &config, double wavelength, double range);

// LoS gain of Friis magnitude and uniform phase; scattered gains circularly
// symmetric Gaussian; scatterers area-uniform in a horizontal annulus.
// Deterministic in seed.
Channel generate_channel(const CircularArray &array, const PolarPoint &user, std::size_t n_paths,
                         const ChannelGenConfig &config, std::uint64_t seed);

} // namespace hmimo
