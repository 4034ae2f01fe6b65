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

#include "hmimo/propagation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hmimo
{

PropagationMatrix propagation_matrix(const CircularArray &array, std::size_t n_rf, double gamma, double beta)
{
    const std::size_t N = array.size();
    if (n_rf == 0 || n_rf > N)
        throw std::invalid_argument("propagation_matrix: n_rf must be in [1, N]");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    PropagationMatrix P;
    P.gamma = gamma;
    P.beta = beta;
    P.feed_angles.resize(n_rf);
    for (std::size_t k = 0; k < n_rf; ++k)
        P.feed_angles[k] = two_pi * static_cast<double>(k) / static_cast<double>(n_rf);

    P.matrix.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(n_rf));
    for (std::size_t m = 0; m < N; ++m)
    {
        for (std::size_t k = 0; k < n_rf; ++k)
        {
            double arc = std::fmod(array.angle(m) - P.feed_angles[k], two_pi);
            if (arc < 0.0)
                arc += two_pi;
            const double l = array.radius() * arc;
            P.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                std::exp(-gamma * l) * cd(std::cos(beta * l), std::sin(beta * l));
        }
    }
    return P;
}

PropagationMatrix propagation_matrix(const CircularArray &array, std::size_t n_rf, double gamma)
{
    return propagation_matrix(array, n_rf, gamma, array.wavenumber());
}

} // namespace hmimo
