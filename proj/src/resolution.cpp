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

#include "hmimo/resolution.hpp"

#include "hmimo/bessel.hpp"
#include "hmimo/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace hmimo
{

using std::numbers::pi;

std::string_view to_string(PhaseConvention c)
{
    switch (c)
    {
    case PhaseConvention::FullQuadrant:
        return "atan2";
    case PhaseConvention::PrincipalValue:
        return "atan";
    }
    return "?";
}

double resolution_exact(const CircularArray &array, const PolarPoint &p1, const PolarPoint &p2)
{
    validate(p1);
    validate(p2);
    const double R = array.radius();
    const double k = array.wavenumber();
    const double s1 = std::sin(p1.theta);
    const double s2 = std::sin(p2.theta);

    // (r - r_n) without cancellation, as in steering_vector.
    auto offset = [R](double r, double u) {
        const double d = std::sqrt(std::max(r * r + R * R - 2.0 * r * R * u, 0.0));
        return (2.0 * r * R * u - R * R) / (r + d);
    };

    double re = 0.0;
    double im = 0.0;
    for (double psi : array.angles())
    {
        const double phase = k * (offset(p2.r, s2 * std::cos(p2.phi - psi)) - offset(p1.r, s1 * std::cos(p1.phi - psi)));
        re += std::cos(phase);
        im += std::sin(phase);
    }
    const double n = static_cast<double>(array.size());
    return std::min(std::hypot(re, im) / n, 1.0);
}

namespace
{
double recover_angle(double num, double den, PhaseConvention convention)
{
    if (convention == PhaseConvention::FullQuadrant)
        return std::atan2(num, den);
    if (den == 0.0)
        return num == 0.0 ? 0.0 : std::copysign(pi / 2.0, num);
    return std::atan(num / den);
}

bool coincident(const PolarPoint &a, const PolarPoint &b)
{
    if (a.r != b.r || a.theta != b.theta)
        return false;
    if (a.phi == b.phi)
        return true;
    // Direction is phi-independent on the axis.
    return std::sin(a.theta) == 0.0;
}
} // namespace

ResolutionParams resolution_params(const CircularArray &array, const PolarPoint &p1, const PolarPoint &p2,
                                   PhaseConvention convention)
{
    validate(p1);
    validate(p2);
    const double R = array.radius();
    const double lambda = array.wavelength();
    const double s1 = std::sin(p1.theta);
    const double s2 = std::sin(p2.theta);
    const double q1 = s1 * s1 / p1.r;
    const double q2 = s2 * s2 / p2.r;

    ResolutionParams out;
    const double lin = 2.0 * pi * R / lambda;
    out.eta1 = lin * (s2 * std::cos(p2.phi) - s1 * std::cos(p1.phi));
    out.eta2 = lin * (s2 * std::sin(p2.phi) - s1 * std::sin(p1.phi));
    const double quad = pi * R * R / (2.0 * lambda);
    out.eta3 = quad * (q2 * std::cos(2.0 * p2.phi) - q1 * std::cos(2.0 * p1.phi));
    out.eta4 = quad * (q2 * std::sin(2.0 * p2.phi) - q1 * std::sin(2.0 * p1.phi));

    out.xi1 = std::hypot(out.eta1, out.eta2);
    out.xi2 = recover_angle(out.eta1, out.eta2, convention);
    out.xi3 = std::hypot(out.eta3, out.eta4);
    out.xi4 = recover_angle(out.eta3, out.eta4, convention);

    const double common = (pi * R * R / lambda) * (q2 / 2.0 - q1 / 2.0 + 1.0 / p1.r - 1.0 / p2.r);
    out.xi5 = cd(std::cos(common), std::sin(common));
    return out;
}

ClosedFormResult bessel_series(const ResolutionParams &params, const BesselSeriesConfig &cfg)
{
    if (!(cfg.abs_tolerance > 0.0))
        throw std::invalid_argument("BesselSeriesConfig: abs_tolerance must be positive");

    const int cap = cfg.max_terms > 0
                        ? cfg.max_terms
                        : 4 * (static_cast<int>(std::ceil(params.xi1)) + static_cast<int>(std::ceil(params.xi3))) + 64;
    // Products J_n(xi3) J_2n(xi1) only start their super-exponential decay past
    // min(xi3, xi1 / 2); no early exit before that.
    const double decay_onset = std::min(params.xi3, params.xi1 / 2.0);

    static constexpr std::array<cd, 4> j_pow{cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    const double angle = 2.0 * params.xi2 - params.xi4 - pi / 2.0;

    auto run = [&](int limit, ClosedFormResult &res) {
        const auto j3 = bessel_j_sequence(params.xi3, limit);
        const auto j1 = bessel_j_sequence(params.xi1, 2 * limit);
        cd sum = j3[0] * j1[0];
        int small = 0;
        for (int n = 1; n <= limit; ++n)
        {
            const double mag = j3[static_cast<std::size_t>(n)] * j1[static_cast<std::size_t>(2 * n)];
            // n and -n: J_{-n}(x) = (-1)^n J_n(x), J_{-2n} = J_{2n}, j^{-n} = conj(j^n).
            const cd pos = j_pow[static_cast<std::size_t>(n % 4)] * std::polar(1.0, n * angle);
            const cd neg = std::conj(j_pow[static_cast<std::size_t>(n % 4)]) * std::polar(1.0, -n * angle) *
                           ((n & 1) ? -1.0 : 1.0);
            sum += mag * (pos + neg);
            res.terms = n;
            small = std::abs(mag) < cfg.abs_tolerance ? small + 1 : 0;
            if (small >= 3 && n > decay_onset)
            {
                res.converged = true;
                res.value = std::min(std::abs(params.xi5 * sum), 1.0);
                return true;
            }
        }
        res.value = std::min(std::abs(params.xi5 * sum), 1.0);
        return false;
    };

    ClosedFormResult res;
    res.converged = false;
    const int first = std::min(cap, static_cast<int>(std::ceil(decay_onset)) + 64);
    if (run(first, res) || first == cap)
        return res;
    run(cap, res);
    return res;
}

ClosedFormResult resolution_closed_form(const CircularArray &array, const PolarPoint &p1, const PolarPoint &p2,
                                        const BesselSeriesConfig &cfg, PhaseConvention convention)
{
    validate(p1);
    validate(p2);
    const bool outside = std::min(p1.r, p2.r) < array.fresnel_lower_bound();
    if (coincident(p1, p2))
        return {1.0, 0, true, outside};
    auto res = bessel_series(resolution_params(array, p1, p2, convention), cfg);
    res.outside_fresnel = outside;
    return res;
}

double resolution_upper_bound(const ResolutionParams &params)
{
    if (params.xi1 <= 0.0)
        return 1.0;
    return std::sqrt(2.0 / (pi * params.xi1));
}

double resolution_radial(const CircularArray &array, double r1, double r2, double theta, double /*phi*/)
{
    if (!(r1 > 0.0) || !(r2 > 0.0))
        throw std::invalid_argument("resolution_radial: ranges must be positive");
    const double R = array.radius();
    const double s = std::sin(theta);
    const double arg = (pi * R * R * s * s / (2.0 * array.wavelength())) * (1.0 / r2 - 1.0 / r1);
    return std::abs(bessel_j(0, arg));
}

double radial_argument_from_count(std::size_t n_antennas, double wavelength, double r1, double r2, double theta)
{
    const double N = static_cast<double>(n_antennas);
    const double s = std::sin(theta);
    return wavelength * N * N * s * s * (r1 - r2) / (32.0 * pi * r1 * r2);
}

double cross_coherence(const Channel &h1, const Channel &h2)
{
    if (h1.vector.size() != h2.vector.size())
        throw std::invalid_argument("cross_coherence: channel lengths differ");
    if (h1.vector.size() == 0)
        throw std::invalid_argument("cross_coherence: empty channel");
    return std::abs(h1.vector.dot(h2.vector)) / static_cast<double>(h1.vector.size());
}

ConventionCheck check_phase_convention(const CircularArray &array, int pairs, std::uint64_t seed)
{
    Rng rng(seed);
    const double r_lo = std::max(2.0 * array.fresnel_lower_bound(), 5.0);
    std::uniform_real_distribution<double> range(r_lo, 4.0 * r_lo);
    std::uniform_real_distribution<double> polar(0.0, pi);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * pi);

    ConventionCheck out;
    out.pairs = pairs;
    for (int i = 0; i < pairs; ++i)
    {
        const PolarPoint p1{range(rng), polar(rng), azimuth(rng)};
        // Second point nearby so the resolution is far from zero.
        PolarPoint p2{p1.r * (1.0 + 0.1 * (range(rng) / r_lo - 2.5)), p1.theta + 0.02 * (polar(rng) - pi / 2.0),
                      p1.phi + 0.02 * (azimuth(rng) - pi)};
        p2.theta = std::clamp(p2.theta, 0.0, pi);
        p2.phi = std::fmod(p2.phi + 2.0 * pi, 2.0 * pi);
        const double exact = resolution_exact(array, p1, p2);
        const double full = resolution_closed_form(array, p1, p2, {}, PhaseConvention::FullQuadrant).value;
        const double principal = resolution_closed_form(array, p1, p2, {}, PhaseConvention::PrincipalValue).value;
        out.full_quadrant_max_error = std::max(out.full_quadrant_max_error, std::abs(full - exact));
        out.principal_value_max_error = std::max(out.principal_value_max_error, std::abs(principal - exact));
    }
    out.best = out.full_quadrant_max_error <= out.principal_value_max_error ? PhaseConvention::FullQuadrant
                                                                           : PhaseConvention::PrincipalValue;
    return out;
}

} // namespace hmimo
