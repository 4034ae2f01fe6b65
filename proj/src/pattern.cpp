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

#include "hmimo/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hmimo
{

LinearArray::LinearArray(std::size_t n_antennas, double spacing, double wavelength)
    : spacing_(spacing), wavelength_(wavelength)
{
    if (n_antennas == 0)
        throw std::invalid_argument("LinearArray: at least one antenna required");
    if (!(spacing > 0.0) || !(wavelength > 0.0))
        throw std::invalid_argument("LinearArray: spacing and wavelength must be positive");
    positions_.resize(n_antennas);
    const double centre = 0.5 * static_cast<double>(n_antennas - 1);
    for (std::size_t n = 0; n < n_antennas; ++n)
        positions_[n] = (static_cast<double>(n) - centre) * spacing;
}

CVec LinearArray::steering_vector(const PolarPoint &p) const
{
    validate(p);
    const double x = p.r * std::sin(p.theta) * std::cos(p.phi);
    const double y = p.r * std::sin(p.theta) * std::sin(p.phi);
    const double z = p.r * std::cos(p.theta);
    const double k = 2.0 * std::numbers::pi / wavelength_;
    const double norm = 1.0 / std::sqrt(static_cast<double>(size()));
    CVec a(static_cast<Eigen::Index>(size()));
    for (std::size_t n = 0; n < size(); ++n)
    {
        const double dy = y - positions_[n];
        const double d = std::sqrt(x * x + dy * dy + z * z);
        a(static_cast<Eigen::Index>(n)) = norm * std::polar(1.0, k * (p.r - d));
    }
    return a;
}

Channel linear_los_channel(const LinearArray &array, const PolarPoint &p, cd gain)
{
    Channel ch;
    ch.los = {gain, p};
    ch.vector = std::sqrt(static_cast<double>(array.size())) * gain * array.steering_vector(p);
    return ch;
}

std::vector<double> Axis::samples() const
{
    if (count < 1)
        throw std::invalid_argument("Axis: count must be positive");
    std::vector<double> s(static_cast<std::size_t>(count));
    if (count == 1)
    {
        s[0] = min;
        return s;
    }
    const double step = (max - min) / (count - 1);
    for (int i = 0; i < count; ++i)
        s[static_cast<std::size_t>(i)] = min + step * i;
    s.back() = max;
    return s;
}

PolarPoint plane_point(const PlaneSpec &spec, double a1, double a2)
{
    switch (spec.plane)
    {
    case Plane::Horizontal:
        return from_cartesian(a1, a2, spec.fixed);
    case Plane::Vertical:
        return from_cartesian(a1, spec.fixed, a2);
    case Plane::Angular:
        return PolarPoint{spec.fixed, a1, a2};
    }
    throw std::logic_error("plane_point: unknown plane");
}

namespace
{
template <typename Steer>
BeamPatternGrid pattern_grid(const CVec &f_eff, const PlaneSpec &spec, Steer steer)
{
    BeamPatternGrid g;
    g.plane = spec.plane;
    g.axis1_samples = spec.axis1.samples();
    g.axis2_samples = spec.axis2.samples();
    const auto n1 = static_cast<Eigen::Index>(g.axis1_samples.size());
    const auto n2 = static_cast<Eigen::Index>(g.axis2_samples.size());
    g.values = Eigen::MatrixXd::Zero(n1, n2);
    for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index j = 0; j < n2; ++j)
        {
            const PolarPoint p = plane_point(spec, g.axis1_samples[static_cast<std::size_t>(i)],
                                             g.axis2_samples[static_cast<std::size_t>(j)]);
            // The array centre itself carries no defined steering direction.
            if (!(p.r > 0.0))
                continue;
            const CVec a = steer(p);
            if (a.size() != f_eff.size())
                throw std::invalid_argument("beam_pattern: beam length does not match the array");
            g.values(i, j) = std::norm(a.dot(f_eff));
        }
    normalize_max(g.values);
    return g;
}
} // namespace

BeamPatternGrid beam_pattern(const CircularArray &array, const CVec &f_eff, const PlaneSpec &spec)
{
    return pattern_grid(f_eff, spec, [&](const PolarPoint &p) { return steering_vector(array, p); });
}

BeamPatternGrid linear_array_pattern(const LinearArray &array, const CVec &f_eff, const PlaneSpec &spec)
{
    return pattern_grid(f_eff, spec, [&](const PolarPoint &p) { return array.steering_vector(p); });
}

void normalize_max(Eigen::MatrixXd &values)
{
    if (values.size() == 0)
        return;
    const double m = values.maxCoeff();
    if (m > 0.0)
        values /= m;
}

std::pair<int, int> nearest_cell(const BeamPatternGrid &grid, double a1, double a2)
{
    auto nearest = [](const std::vector<double> &s, double v) {
        int best = 0;
        for (int i = 1; i < static_cast<int>(s.size()); ++i)
            if (std::abs(s[static_cast<std::size_t>(i)] - v) < std::abs(s[static_cast<std::size_t>(best)] - v))
                best = i;
        return best;
    };
    return {nearest(grid.axis1_samples, a1), nearest(grid.axis2_samples, a2)};
}

std::vector<std::pair<int, int>> find_local_maxima(const BeamPatternGrid &grid, double min_value)
{
    std::vector<std::pair<int, int>> out;
    const auto &v = grid.values;
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j)
        {
            const double c = v(i, j);
            if (c < min_value)
                continue;
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di)
                for (int dj = -1; dj <= 1 && peak; ++dj)
                {
                    if (di == 0 && dj == 0)
                        continue;
                    const Eigen::Index ii = i + di, jj = j + dj;
                    if (ii < 0 || jj < 0 || ii >= v.rows() || jj >= v.cols())
                        continue;
                    if (v(ii, jj) >= c)
                        peak = false;
                }
            if (peak)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

bool peak_near(const BeamPatternGrid &grid, double a1, double a2, int tolerance, int window)
{
    const auto [ci, cj] = nearest_cell(grid, a1, a2);
    const auto &v = grid.values;
    const int i0 = std::max(0, ci - window), i1 = std::min(static_cast<int>(v.rows()) - 1, ci + window);
    const int j0 = std::max(0, cj - window), j1 = std::min(static_cast<int>(v.cols()) - 1, cj + window);
    int bi = ci, bj = cj;
    for (int i = i0; i <= i1; ++i)
        for (int j = j0; j <= j1; ++j)
            if (v(i, j) > v(bi, bj))
            {
                bi = i;
                bj = j;
            }
    return std::abs(bi - ci) <= tolerance && std::abs(bj - cj) <= tolerance;
}

} // namespace hmimo
