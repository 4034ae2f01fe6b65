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

#include "hmimo/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmimo
{

namespace
{
// Start order for the backward recurrence. J_m(x) falls off like an Airy
// tail once m exceeds x by a few multiples of x^(1/3); the extra margin
// pushes the truncated part below 1e-16 of the normalization sum.
int start_order(int n_max, double ax)
{
    const double base = std::max(static_cast<double>(n_max), ax);
    int m = static_cast<int>(std::ceil(base + 12.0 * std::cbrt(base + 1.0) + 40.0));
    return m + (m & 1);
}
} // namespace

void bessel_j_sequence(double x, std::span<double> out)
{
    if (out.empty())
        return;
    const int n_max = static_cast<int>(out.size()) - 1;
    std::fill(out.begin(), out.end(), 0.0);
    if (x == 0.0)
    {
        out[0] = 1.0;
        return;
    }
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j_sequence: non-finite argument");

    const double ax = std::abs(x);
    const int m = start_order(n_max, ax);

    constexpr double big = 1e250;
    constexpr double shrink = 1e-250;

    double next = 0.0;  // J_{i+1}
    double cur = 1e-30; // J_i, unnormalized
    double norm = 2.0 * cur; // m is even
    for (int i = m; i > 0; --i)
    {
        const double prev = (2.0 * i / ax) * cur - next;
        next = cur;
        cur = prev;
        const int k = i - 1;
        if (std::abs(cur) > big)
        {
            cur *= shrink;
            next *= shrink;
            norm *= shrink;
            for (int j = k + 1; j <= n_max; ++j)
                out[static_cast<std::size_t>(j)] *= shrink;
        }
        if (k <= n_max)
            out[static_cast<std::size_t>(k)] = cur;
        if ((k & 1) == 0)
            norm += (k == 0 ? 1.0 : 2.0) * cur;
    }

    const double inv = 1.0 / norm;
    for (int n = 0; n <= n_max; ++n)
    {
        double v = out[static_cast<std::size_t>(n)] * inv;
        if (x < 0.0 && (n & 1))
            v = -v;
        out[static_cast<std::size_t>(n)] = v;
    }
}

std::vector<double> bessel_j_sequence(double x, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("bessel_j_sequence: negative order bound");
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    bessel_j_sequence(x, out);
    return out;
}

double bessel_j(int n, double x)
{
    if (n < 0)
        return (n & 1) ? -bessel_j(-n, x) : bessel_j(-n, x);
    return bessel_j_sequence(x, n).back();
}

} // namespace hmimo
