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
#include "hmimo/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hmimo
{

enum class Scheme
{
    FdAsy,            // fully digital, asymptotically optimal
    FdMf,             // fully digital matched filter
    Amplitude,
    AmplitudeScaling,
    Binary,
    BinaryScaling,
    Phase,
    PhaseScaling,
    PhaseGlobal,      // scaled Lorentzian with the grid-searched scale
};

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

enum class SweepVariable
{
    RfChains,
    TransmitPower,
    EnergyFloor,
    NAntennas,
    Gamma,
};

std::string_view to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

// Everything needed to draw a random scenario and solve it. Powers in watts.
struct ScenarioTemplate
{
    std::size_t n_antennas = 800;
    double wavelength = 0.01;
    double radius = 0.0; // <= 0: half-wavelength arc spacing
    std::size_t n_du = 3;
    std::size_t n_eu = 2;
    double du_range = 20.0;
    double eu_range = 3.0;
    double transmit_power = 0.1;
    double noise_power = 3.981071705534972e-13;
    double energy_floor = 3.1622776601683795e-05;
    std::size_t n_paths = 6;
    ChannelGenConfig channel;
    std::size_t n_rf = 4;
    double gamma = 5.0;
    std::optional<double> beta; // default 2*pi/lambda
    SolverOptions solver;
};

CircularArray make_array(const ScenarioTemplate &tpl);
PropagationMatrix make_propagation(const ScenarioTemplate &tpl, const CircularArray &array);

// Users in the array plane (theta = pi/2) at the template ranges with
// phi ~ U[0, 2 pi); DUs first, then EUs. Each user has its own sub-seed.
Scenario draw_scenario(const ScenarioTemplate &tpl, const CircularArray &array, std::uint64_t seed);

// Solves one scheme and evaluates rates/energies of the resulting unit-power beam.
SolveReport solve_scheme(Scheme scheme, const Scenario &scenario, const PropagationMatrix &P,
                         const SolverOptions &opts);

struct SweepSpec
{
    SweepVariable variable = SweepVariable::RfChains;
    std::vector<double> grid;    // SI units (W for powers)
    std::vector<Scheme> schemes;
    int trials = 1;
    std::uint64_t seed = 1;

    void validate() const;
};

struct TrialRow
{
    std::size_t grid_index = 0;
    double value = 0.0;
    Scheme scheme = Scheme::FdAsy;
    int trial = 0;
    bool ok = false;
    SolveReport report;
    std::string error;
};

struct SweepRow
{
    double value = 0.0;
    Scheme scheme = Scheme::FdAsy;
    double mean_min_rate = 0.0;
    double mean_eu_energy = 0.0;
    double feasible_fraction = 0.0;
    int successes = 0;
    int trials = 0;
};

struct SweepTable
{
    std::vector<SweepRow> rows;     // ordered by (grid index, scheme)
    std::vector<TrialRow> trials;   // ordered by (grid index, scheme, trial)
};

// Applies the sweep variable to a copy of the template.
ScenarioTemplate apply_sweep_value(const ScenarioTemplate &tpl, SweepVariable variable, double value);

// Trial t of every grid point uses the same user draw (seed derived from
// (spec.seed, t) only), so curves differ only through the swept variable.
// Work is split over `threads` workers; output order and content do not
// depend on the thread count. Per-trial failures are recorded, not thrown.
SweepTable run_sweep(const SweepSpec &spec, const ScenarioTemplate &base, unsigned threads = 1,
                     const std::function<void(std::size_t done, std::size_t total)> &progress = {});

} // namespace hmimo
