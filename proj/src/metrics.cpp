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

#include "hmimo/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hmimo
{

namespace
{
double gain(const Channel &h, const CVec &f_eff)
{
    if (h.vector.size() != f_eff.size())
        throw std::invalid_argument("beam and channel lengths differ");
    return std::norm(h.vector.dot(f_eff));
}
} // namespace

double du_rate(const Channel &h, const CVec &f_eff, double transmit_power, double noise_power)
{
    return std::log1p(transmit_power * gain(h, f_eff) / noise_power) / std::numbers::ln2;
}

double eu_energy(const Channel &h, const CVec &f_eff, double transmit_power)
{
    return transmit_power * gain(h, f_eff);
}

} // namespace hmimo
