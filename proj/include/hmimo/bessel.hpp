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

#include <span>
#include <vector>

namespace hmimo
{

// Integer-order Bessel functions of the first kind.
//
// Values for every order 0..n_max are produced in one pass with Miller's
// backward recurrence, normalized through J0 + 2 * sum_k J_2k = 1. The start
// order is placed far enough beyond max(n_max, x) that the discarded tail
// is below double precision, so the sequence is accurate for large x too.
void bessel_j_sequence(double x, std::span<double> out);
std::vector<double> bessel_j_sequence(double x, int n_max);

// Single value; negative orders via J_{-n} = (-1)^n J_n.
double bessel_j(int n, double x);

} // namespace hmimo
