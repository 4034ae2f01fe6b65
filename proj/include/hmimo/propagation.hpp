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

#include <vector>

namespace hmimo
{

// Waveguide response from each RF feed to each antenna. Feeds sit on the
// antenna ring at angles 2*pi*k/N_RF and the wave travels clockwise, so
// l(m, k) = R * ((psi_m - feed_k) mod 2*pi) and
//   P(m, k) = exp(-gamma * l) * exp(j * beta * l).
struct PropagationMatrix
{
    CMat matrix;
    double gamma = 0.0;
    double beta = 0.0;
    std::vector<double> feed_angles;

    std::size_t n_rf() const noexcept { return feed_angles.size(); }
};

PropagationMatrix propagation_matrix(const CircularArray &array, std::size_t n_rf, double gamma,
                                     double beta);

// Convenience overload with beta = 2*pi/lambda.
PropagationMatrix propagation_matrix(const CircularArray &array, std::size_t n_rf, double gamma);

} // namespace hmimo
