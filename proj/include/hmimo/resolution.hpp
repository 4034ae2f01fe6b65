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
#include "hmimo/geometry.hpp"

#include <string_view>

namespace hmimo
{

// How the angle parameters xi2, xi4 are recovered from (eta1, eta2) and
// (eta3, eta4). FullQuadrant uses atan2(eta1, eta2) and atan2(eta3, eta4),
// which rewrites eta1 cos x + eta2 sin x as xi1 sin(x + xi2) exactly.
// PrincipalValue is the one-argument arctangent of the ratio, kept so the
// self-test can show that it is the wrong choice.
enum class PhaseConvention
{
    FullQuadrant,
    PrincipalValue,
};

std::string_view to_string(PhaseConvention c);

struct ResolutionParams
{
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta3 = 0.0;
    double eta4 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
    double xi4 = 0.0;
    cd xi5{1.0, 0.0};
};

struct BesselSeriesConfig
{
    double abs_tolerance = 1e-12;
    int max_terms = 0; // 0: 4 * (ceil(xi1) + ceil(xi3)) + 64
};

struct ClosedFormResult
{
    double value = 1.0;
    int terms = 0;                 // highest |n| summed
    bool converged = true;
    bool outside_fresnel = false;  // advisory: approximation not valid here
};

// |a_t(p1)^H a_t(p2)| by direct N-term summation with exact distances.
double resolution_exact(const CircularArray &array, const PolarPoint &p1, const PolarPoint &p2);

ResolutionParams resolution_params(const CircularArray &array, const PolarPoint &p1,
                                   const PolarPoint &p2,
                                   PhaseConvention convention = PhaseConvention::FullQuadrant);

// |xi5 * sum_n j^n J_n(xi3) J_2n(xi1) exp(j n (2 xi2 - xi4 - pi/2))|
ClosedFormResult resolution_closed_form(const CircularArray &array, const PolarPoint &p1,
                                        const PolarPoint &p2, const BesselSeriesConfig &cfg = {},
                                        PhaseConvention convention = PhaseConvention::FullQuadrant);

// Series evaluation on precomputed parameters.
ClosedFormResult bessel_series(const ResolutionParams &params, const BesselSeriesConfig &cfg = {});

// sqrt(2 / (pi xi1)); 1 when xi1 == 0.
double resolution_upper_bound(const ResolutionParams &params);

// Same-direction pair: |J0((pi R^2 sin^2(theta) / (2 lambda)) (1/r2 - 1/r1))|.
// phi does not enter the value but is kept for symmetry with the general form.
double resolution_radial(const CircularArray &array, double r1, double r2, double theta, double phi);

// Argument of the radial J0 written in terms of N under R = N lambda / (4 pi):
// lambda N^2 sin^2(theta) (r1 - r2) / (32 pi r1 r2).
double radial_argument_from_count(std::size_t n_antennas, double wavelength, double r1, double r2,
                                  double theta);

// |h1^H h2| / N; std::invalid_argument on length mismatch.
double cross_coherence(const Channel &h1, const Channel &h2);

struct ConventionCheck
{
    PhaseConvention best = PhaseConvention::FullQuadrant;
    double full_quadrant_max_error = 0.0;
    double principal_value_max_error = 0.0;
    int pairs = 0;
};

// Compares both phase conventions against resolution_exact on a seeded suite
// of far-zone point pairs and reports which reproduces the direct sum.
ConventionCheck check_phase_convention(const CircularArray &array, int pairs, std::uint64_t seed);

} // namespace hmimo
