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

#include "hmimo/channel.hpp"

#include "hmimo/rng.hpp"
#include "hmimo/units.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace hmimo
{

Channel assemble_channel(const CircularArray &array, const PathComponent &los, std::vector<PathComponent> nlos)
{
    const double N = static_cast<double>(array.size());
    Channel ch;
    ch.los = los;
    ch.nlos = std::move(nlos);
    ch.vector = std::sqrt(N) * los.gain * steering_vector(array, los.anchor);
    if (!ch.nlos.empty())
    {
        const double w = std::sqrt(N / static_cast<double>(ch.nlos.size()));
        for (const auto &path : ch.nlos)
            ch.vector += w * path.gain * steering_vector(array, path.anchor);
    }
    return ch;
}

double los_amplitude(const ChannelGenConfig &config, double wavelength, double range)
{
    const double gain = units::db_to_linear(config.tx_gain_dbi + config.rx_gain_dbi);
    return std::sqrt(gain) * wavelength / (4.0 * std::numbers::pi * range);
}

Channel generate_channel(const CircularArray &array, const PolarPoint &user, std::size_t n_paths,
                         const ChannelGenConfig &config, std::uint64_t seed)
{
    validate(user);
    Rng rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, 1.0);

    PathComponent los{std::polar(los_amplitude(config, array.wavelength(), user.r), phase(rng)), user};

    double inner = config.scatterer_min_range;
    double outer = config.scatterer_max_range > 0.0 ? config.scatterer_max_range : user.r;
    if (inner > outer)
        std::swap(inner, outer);
    std::uniform_real_distribution<double> area(inner * inner, outer * outer);

    // Per-component std-dev rho |a0|, split evenly over I and Q.
    const double sigma = config.nlos_amplitude_ratio * std::abs(los.gain) / std::numbers::sqrt2;
    std::vector<PathComponent> nlos;
    nlos.reserve(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i)
    {
        const double re = sigma * gauss(rng);
        const double im = sigma * gauss(rng);
        const double r = std::sqrt(area(rng));
        nlos.push_back({cd(re, im), PolarPoint{r, std::numbers::pi / 2.0, phase(rng)}});
    }
    return assemble_channel(array, los, std::move(nlos));
}

} // namespace hmimo
