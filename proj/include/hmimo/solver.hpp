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

#include "hmimo/beamforming.hpp"

#include <string>
#include <vector>

namespace hmimo
{

struct SolverOptions
{
    int max_iterations = 200;
    double rate_tolerance = 1e-4; // bits/s/Hz between outer iterations
    BinaryScaleRule binary_rule = BinaryScaleRule::Mean;
    LorentzianScaleRule lorentzian_rule = LorentzianScaleRule::ClosedForm;
    double energy_slack_db = 0.5; // EU counts as served if E >= E0 - slack
};

struct SolveReport
{
    double min_rate = 0.0;
    std::vector<double> per_du_rates;
    std::vector<double> per_eu_energy;
    std::vector<double> residual_history; // ||f - QPb|| after every half-update
    int iterations = 0;
    bool converged = false;
    bool feasible = false;
    std::string warning;

    bool operator==(const SolveReport &) const = default;
};

struct HybridSolution
{
    AnalogBeamformer analog;   // descaled, unit constraint set
    DigitalBeamformer digital; // ||Q P b|| = 1
    SolveReport report;
};

// Alternating minimization of ||f - Q P b|| towards the fully digital target
// f = fd_asymptotic(scenario): least-squares digital step, element-wise
// analog projection (with the scale update in scaled modes), normalization,
// min-rate check. The recorded residual never increases: an analog candidate
// that would raise it is replaced by the fixed-scale projection, and failing
// that the previous analog beamformer is kept.
HybridSolution alternating_optimize(const Scenario &scenario, const PropagationMatrix &P,
                                    const ControlMode &mode, const SolverOptions &opts = {});

// Rates and energies of an arbitrary unit-power beam.
SolveReport evaluate_beam(const Scenario &scenario, const CVec &f_eff, double energy_slack_db = 0.5);

} // namespace hmimo
