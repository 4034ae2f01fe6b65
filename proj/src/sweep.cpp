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

#include "hmimo/sweep.hpp"

#include "hmimo/errors.hpp"
#include "hmimo/rng.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace hmimo
{

namespace
{
struct SchemeName
{
    Scheme scheme;
    std::string_view name;
};

constexpr SchemeName scheme_names[] = {
    {Scheme::FdAsy, "fd_asy"},
    {Scheme::FdMf, "fd_mf"},
    {Scheme::Amplitude, "amplitude"},
    {Scheme::AmplitudeScaling, "amplitude_scaling"},
    {Scheme::Binary, "binary"},
    {Scheme::BinaryScaling, "binary_scaling"},
    {Scheme::Phase, "phase"},
    {Scheme::PhaseScaling, "phase_scaling"},
    {Scheme::PhaseGlobal, "phase_global"},
};

struct VariableName
{
    SweepVariable variable;
    std::string_view name;
};

constexpr VariableName variable_names[] = {
    {SweepVariable::RfChains, "rf_chains"},
    {SweepVariable::TransmitPower, "transmit_power"},
    {SweepVariable::EnergyFloor, "energy_floor"},
    {SweepVariable::NAntennas, "n_antennas"},
    {SweepVariable::Gamma, "gamma"},
};

std::size_t positive_count(double value, const char *what)
{
    if (!(value >= 1.0) || value != std::floor(value) || value > 1e9)
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return static_cast<std::size_t>(value);
}
} // namespace

std::string_view to_string(Scheme s)
{
    for (const auto &e : scheme_names)
        if (e.scheme == s)
            return e.name;
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (const auto &e : scheme_names)
        if (e.name == name)
            return e.scheme;
    return std::nullopt;
}

std::string_view to_string(SweepVariable v)
{
    for (const auto &e : variable_names)
        if (e.variable == v)
            return e.name;
    return "?";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name)
{
    for (const auto &e : variable_names)
        if (e.name == name)
            return e.variable;
    return std::nullopt;
}

CircularArray make_array(const ScenarioTemplate &tpl)
{
    if (tpl.radius > 0.0)
        return CircularArray(tpl.n_antennas, tpl.wavelength, tpl.radius);
    return CircularArray::half_wavelength(tpl.n_antennas, tpl.wavelength);
}

PropagationMatrix make_propagation(const ScenarioTemplate &tpl, const CircularArray &array)
{
    return propagation_matrix(array, tpl.n_rf, tpl.gamma, tpl.beta.value_or(array.wavenumber()));
}

Scenario draw_scenario(const ScenarioTemplate &tpl, const CircularArray &array, std::uint64_t seed)
{
    Scenario s;
    s.transmit_power = tpl.transmit_power;
    s.noise_power = tpl.noise_power;
    s.energy_floor = tpl.energy_floor;

    auto draw = [&](std::uint64_t group, std::size_t index, double range) {
        const std::uint64_t user_seed = derive_seed(seed, {group, index});
        Rng rng(user_seed);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const PolarPoint p{range, std::numbers::pi / 2.0, angle(rng)};
        return generate_channel(array, p, tpl.n_paths, tpl.channel, derive_seed(user_seed, {1}));
    };
    for (std::size_t k = 0; k < tpl.n_du; ++k)
        s.du_channels.push_back(draw(0, k, tpl.du_range));
    for (std::size_t l = 0; l < tpl.n_eu; ++l)
        s.eu_channels.push_back(draw(1, l, tpl.eu_range));
    return s;
}

SolveReport solve_scheme(Scheme scheme, const Scenario &scenario, const PropagationMatrix &P,
                         const SolverOptions &opts)
{
    auto unit_report = [&](const CVec &f) {
        const double n = f.norm();
        if (!(n > 0.0))
            throw DegenerateBeam("solve_scheme: zero beam");
        return evaluate_beam(scenario, f / n, opts.energy_slack_db);
    };

    SolverOptions o = opts;
    ControlMode mode;
    switch (scheme)
    {
    case Scheme::FdAsy:
        return unit_report(fd_asymptotic(scenario));
    case Scheme::FdMf:
        return unit_report(mf_baseline(scenario));
    case Scheme::Amplitude:
        mode = {ControlKind::AmplitudeOnly, false};
        break;
    case Scheme::AmplitudeScaling:
        mode = {ControlKind::AmplitudeOnly, true};
        break;
    case Scheme::Binary:
        mode = {ControlKind::BinaryAmplitude, false};
        break;
    case Scheme::BinaryScaling:
        mode = {ControlKind::BinaryAmplitude, true};
        break;
    case Scheme::Phase:
        mode = {ControlKind::LorentzianPhase, false};
        break;
    case Scheme::PhaseScaling:
        mode = {ControlKind::LorentzianPhase, true};
        break;
    case Scheme::PhaseGlobal:
        mode = {ControlKind::LorentzianPhase, true};
        o.lorentzian_rule = LorentzianScaleRule::GlobalSearch;
        break;
    }
    return alternating_optimize(scenario, P, mode, o).report;
}

void SweepSpec::validate() const
{
    if (grid.empty())
        throw std::invalid_argument("SweepSpec: grid must not be empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] >= grid[i - 1]))
            throw std::invalid_argument("SweepSpec: grid must be sorted ascending");
    if (schemes.empty())
        throw std::invalid_argument("SweepSpec: at least one scheme required");
    if (trials < 1)
        throw std::invalid_argument("SweepSpec: trials must be at least 1");
}

ScenarioTemplate apply_sweep_value(const ScenarioTemplate &tpl, SweepVariable variable, double value)
{
    ScenarioTemplate out = tpl;
    switch (variable)
    {
    case SweepVariable::RfChains:
        out.n_rf = positive_count(value, "rf_chains");
        break;
    case SweepVariable::TransmitPower:
        out.transmit_power = value;
        break;
    case SweepVariable::EnergyFloor:
        out.energy_floor = value;
        break;
    case SweepVariable::NAntennas:
        out.n_antennas = positive_count(value, "n_antennas");
        break;
    case SweepVariable::Gamma:
        out.gamma = value;
        break;
    }
    return out;
}

SweepTable run_sweep(const SweepSpec &spec, const ScenarioTemplate &base, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)> &progress)
{
    spec.validate();
    const std::size_t n_grid = spec.grid.size();
    const std::size_t n_scheme = spec.schemes.size();
    const auto n_trial = static_cast<std::size_t>(spec.trials);

    std::vector<ScenarioTemplate> templates;
    std::vector<CircularArray> arrays;
    std::vector<PropagationMatrix> props;
    for (double v : spec.grid)
    {
        templates.push_back(apply_sweep_value(base, spec.variable, v));
        arrays.push_back(make_array(templates.back()));
        props.push_back(make_propagation(templates.back(), arrays.back()));
    }

    // Trial t draws from (seed, t) only: common random numbers across the grid.
    std::vector<Scenario> scenarios(n_grid * n_trial);
    for (std::size_t g = 0; g < n_grid; ++g)
        for (std::size_t t = 0; t < n_trial; ++t)
            scenarios[g * n_trial + t] = draw_scenario(templates[g], arrays[g], derive_seed(spec.seed, {t}));

    const std::size_t total = n_grid * n_scheme * n_trial;
    std::vector<TrialRow> rows(total);
    std::atomic<std::size_t> next{0};
    std::size_t done = 0;
    std::mutex progress_mutex;

    auto worker = [&] {
        for (;;)
        {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total)
                return;
            const std::size_t g = idx / (n_scheme * n_trial);
            const std::size_t s = (idx / n_trial) % n_scheme;
            const std::size_t t = idx % n_trial;
            TrialRow &row = rows[idx];
            row.grid_index = g;
            row.value = spec.grid[g];
            row.scheme = spec.schemes[s];
            row.trial = static_cast<int>(t);
            try
            {
                row.report = solve_scheme(row.scheme, scenarios[g * n_trial + t], props[g], templates[g].solver);
                row.ok = true;
            }
            catch (const std::exception &e)
            {
                row.ok = false;
                row.error = e.what();
            }
            if (progress)
            {
                std::lock_guard lock(progress_mutex);
                progress(++done, total);
            }
        }
    };

    const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (n_threads == 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }

    SweepTable table;
    table.trials = rows;
    for (std::size_t g = 0; g < n_grid; ++g)
        for (std::size_t s = 0; s < n_scheme; ++s)
        {
            SweepRow agg;
            agg.value = spec.grid[g];
            agg.scheme = spec.schemes[s];
            agg.trials = spec.trials;
            double rate = 0.0, energy = 0.0, feasible = 0.0;
            for (std::size_t t = 0; t < n_trial; ++t)
            {
                const TrialRow &r = rows[(g * n_scheme + s) * n_trial + t];
                if (!r.ok)
                    continue;
                ++agg.successes;
                rate += r.report.min_rate;
                double e = 0.0;
                for (double v : r.report.per_eu_energy)
                    e += v;
                if (!r.report.per_eu_energy.empty())
                    e /= static_cast<double>(r.report.per_eu_energy.size());
                energy += e;
                feasible += r.report.feasible ? 1.0 : 0.0;
            }
            if (agg.successes > 0)
            {
                const double n = agg.successes;
                agg.mean_min_rate = rate / n;
                agg.mean_eu_energy = energy / n;
            }
            else
            {
                agg.mean_min_rate = std::numeric_limits<double>::quiet_NaN();
                agg.mean_eu_energy = std::numeric_limits<double>::quiet_NaN();
            }
            agg.feasible_fraction = feasible / static_cast<double>(spec.trials);
            table.rows.push_back(agg);
        }
    return table;
}

} // namespace hmimo
