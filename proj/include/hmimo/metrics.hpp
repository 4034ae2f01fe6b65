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

namespace hmimo
{

// log2(1 + Pt |h^H f|^2 / sigma^2)
double du_rate(const Channel &h, const CVec &f_eff, double transmit_power, double noise_power);

// Pt |h^H f|^2, linear harvester
double eu_energy(const Channel &h, const CVec &f_eff, double transmit_power);

} // namespace hmimo
