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
#include "hmimo/geometry.hpp"
#include "hmimo/pattern.hpp"
#include "hmimo/sweep.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hmimo
{

// Run configuration as read from JSON. Powers are kept in dBm here; they are
// converted to watts by to_template / to_sweep_spec.
struct RunConfig
{
    struct ArraySection
    {
        std::size_t n_antennas = 800;
        double frequency_hz = 30e9;
        std::optional<double> radius; // default N lambda / (4 pi)

        bool operator==(const ArraySection &) const = default;
    } array;

    struct ScenarioSection
    {
        std::size_t n_du = 3;
        std::size_t n_eu = 2;
        double du_range = 20.0;
        double eu_range = 3.0;
        double transmit_power_dbm = 20.0;
        double noise_power_dbm = -94.0;
        double energy_floor_dbm = -15.0;
        std::size_t n_paths = 6;
        double tx_gain_dbi = 10.0;
        double rx_gain_dbi = 25.0;
        double nlos_ratio = 0.1;
        double scatterer_min_range = 1.0;

        bool operator==(const ScenarioSection &) const = default;
    } scenario;

    struct HardwareSection
    {
        std::size_t n_rf = 4;
        double gamma = 5.0;
        std::optional<double> beta; // default 2 pi / lambda
        ControlKind mode = ControlKind::LorentzianPhase;
        bool scaled = true;
        bool global_search = false;

        bool operator==(const HardwareSection &) const = default;
    } hardware;

    struct SolverSection
    {
        double tolerance = 1e-4;
        int max_iterations = 200;
        double energy_slack_db = 0.5;
        BinaryScaleRule binary_rule = BinaryScaleRule::Mean;
        bool printed_lorentzian_scale = false;

        bool operator==(const SolverSection &) const = default;
    } solver;

    struct PatternUser
    {
        PolarPoint position;
        bool energy = false;

        bool operator==(const PatternUser &) const = default;
    };

    struct PatternSection
    {
        std::string array_type = "circular"; // or "linear"
        std::size_t linear_antennas = 256;
        Plane plane = Plane::Horizontal;
        Axis axis1{-12.0, 12.0, 97};
        Axis axis2{-12.0, 12.0, 97};
        double fixed = 0.0;
        std::vector<PatternUser> users{{PolarPoint{10.0, 1.5707963267948966, 0.0}, false}};
        std::string scheme = "fd_asy";

        bool operator==(const PatternSection &) const = default;
    } pattern;

    struct ResolveSection
    {
        std::string source = "random"; // random | pairs | file | n_sweep
        int random_pairs = 1000;
        double min_range = 3.0;
        double max_range = 50.0;
        std::vector<std::array<double, 6>> pairs;
        std::string pairs_file;
        std::vector<std::size_t> n_values;
        std::array<double, 6> sweep_pair{15.0, 1.5707963267948966, 0.0, 20.0, 0.5235987755982988,
                                         1.0471975511965976};

        bool operator==(const ResolveSection &) const = default;
    } resolve;

    struct SweepSection
    {
        SweepVariable variable = SweepVariable::RfChains;
        std::vector<double> grid{1, 2, 3, 4, 5, 6, 7, 8}; // dBm for power variables
        std::vector<Scheme> schemes{Scheme::FdAsy, Scheme::Phase, Scheme::PhaseScaling};
        int trials = 20;
        bool per_trial = false;

        bool operator==(const SweepSection &) const = default;
    } sweep;

    std::uint64_t seed = 1;

    bool operator==(const RunConfig &) const = default;
};

// Throws ConfigError naming the offending key path (e.g. "array.n_antennas").
RunConfig parse_config(std::string_view json_text);

// Canonical JSON document; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig &config);

// Range and consistency checks; throws ConfigError.
void validate_config(const RunConfig &config);

// 64-bit FNV-1a of the canonical document.
std::uint64_t config_hash(const RunConfig &config);

double wavelength(const RunConfig &config);
ScenarioTemplate to_template(const RunConfig &config);
SweepSpec to_sweep_spec(const RunConfig &config);
ControlMode control_mode(const RunConfig &config);
SolverOptions solver_options(const RunConfig &config);

std::string_view to_string(Plane p);

} // namespace hmimo
