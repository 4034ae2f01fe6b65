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
#include "hmimo/propagation.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace hmimo
{

enum class ControlKind
{
    AmplitudeOnly,   // 0 <= q <= 1
    BinaryAmplitude, // q in {0, 1}
    LorentzianPhase, // q = (j + exp(j phi)) / 2
};

struct ControlMode
{
    ControlKind kind = ControlKind::LorentzianPhase;
    bool scaled = true; // equivalent-scaling relaxation (constraint set times a)

    bool operator==(const ControlMode &) const = default;
};

std::string_view to_string(ControlKind k);

// Diagonal of Q. While scaled the feasible set is the unit set times scale_a;
// after descale() scale_a is 1 and q is in the unit set.
struct AnalogBeamformer
{
    CVec q;
    double scale_a = 1.0;
    ControlMode mode;
};

struct DigitalBeamformer
{
    CVec b;
};

struct Scenario
{
    std::vector<Channel> du_channels;
    std::vector<Channel> eu_channels;
    double transmit_power = 0.1; // W
    double noise_power = 0.0;    // W
    double energy_floor = 0.0;   // W

    std::size_t n_antennas() const;
    // std::invalid_argument on K == 0, non-positive powers, mixed lengths.
    void validate() const;
};

// ---- fully digital ---------------------------------------------------------

// Asymptotically optimal multicast beamformer
//   f = sum_k w_k h_k + sum_l w_l h_l,
//   w_l = sqrt(E0 / (Pt |h_l|^4)),
//   w_k = sqrt((1 - sum_l w_l^2 |h_l|^2) / (|h_k|^4 sum_k' 1/|h_k'|^2)).
// Throws EnergyInfeasible when the energy users take all of the power.
CVec fd_asymptotic(const Scenario &scenario);

// Matched filter on the sum of all user channels, unit norm.
CVec mf_baseline(const Scenario &scenario);

// ---- hybrid building blocks ------------------------------------------------

enum class RankPolicy
{
    MinimumNorm, // rank-deficient systems get the minimum-norm LS solution
    Strict,      // rank deficiency throws SingularUpdate
};

// argmin_b ||f - Q P b|| via a complete orthogonal decomposition of Q P.
DigitalBeamformer digital_ls_update(const PropagationMatrix &P, const AnalogBeamformer &analog,
                                    const CVec &f, RankPolicy policy = RankPolicy::MinimumNorm);

// x(i) = f(i) / (P(i,:) b). Elements where P(i,:) b vanishes map to 0.
CVec analog_target(const PropagationMatrix &P, const DigitalBeamformer &digital, const CVec &f);

// Nearest point of the mode's feasible set (scaled by a) to each x(i).
CVec project_amplitude(const CVec &x, double a);
CVec project_binary(const CVec &x, double a);
CVec project_lorentzian(const CVec &x, double a);
CVec project(ControlKind kind, const CVec &x, double a);

enum class BinaryScaleRule
{
    Mean,   // iterative elimination; a = mean of Re(x) over the surviving set
    Median, // same elimination loop, median instead of mean
};

enum class LorentzianScaleRule
{
    ClosedForm,    // a = |p|^2 / Im(p): solves a (j + e^{j phi}) / 2 = p exactly
    PrintedFormula, // a = |p^2| / (2 Im(p)), for A/B comparison only
    GlobalSearch,  // log grid + golden section on the per-element distance sum; never worse than ClosedForm
};

// Clamp (unscaled) or positive part (scaled) of Re(x). Throws DegenerateAnalog in
// scaled mode when no element has positive real part.
AnalogBeamformer analog_amplitude(const CVec &x, bool scaled);

// Threshold at a/2, a = 1 unscaled or from the scale rule.
AnalogBeamformer analog_binary(const CVec &x, bool scaled, BinaryScaleRule rule = BinaryScaleRule::Mean);

// Nearest point on the scaled circle: phi(i) = arg(2 x(i) - a j).
AnalogBeamformer analog_lorentzian(const CVec &x, bool scaled,
                                   LorentzianScaleRule rule = LorentzianScaleRule::ClosedForm);

double binary_scale_mean(const CVec &x);
double binary_scale_median(const CVec &x);
double binary_scale(const CVec &x, BinaryScaleRule rule);

// sum_i dist(x(i), {0, a}): the binary-mode approximation error for a given a.
double binary_scale_objective(const CVec &x, double a);

// sum_i | |x(i) - j a/2| - a/2 |: distance of every x(i) to the scaled circle.
double lorentzian_scale_objective(const CVec &x, double a);

// Index of the largest-modulus element with positive imaginary part.
// Throws DegenerateAnalog when none exists.
std::size_t lorentzian_anchor(const CVec &x);

double lorentzian_scale(const CVec &x, LorentzianScaleRule rule = LorentzianScaleRule::ClosedForm);

// Returns b / ||Q P b||. Throws DegenerateBeam when the effective beam is zero.
DigitalBeamformer normalize_digital(const DigitalBeamformer &digital, const AnalogBeamformer &analog,
                                    const PropagationMatrix &P);

// Q* = Q / a, b* = a b. The effective beam Q P b is unchanged.
std::pair<AnalogBeamformer, DigitalBeamformer> descale(const AnalogBeamformer &analog,
                                                       const DigitalBeamformer &digital);

// Q P b.
CVec effective_beam(const AnalogBeamformer &analog, const PropagationMatrix &P,
                    const DigitalBeamformer &digital);

// True when every element lies in the mode's feasible set scaled by
// analog.scale_a, within tol.
bool satisfies_constraints(const AnalogBeamformer &analog, double tol = 1e-10);

} // namespace hmimo
