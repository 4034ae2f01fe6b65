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

#include "hmimo/solver.hpp"

#include "hmimo/errors.hpp"
#include "hmimo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace hmimo
{

namespace
{
AnalogBeamformer initial_analog(const ControlMode &mode, Eigen::Index n)
{
    AnalogBeamformer q;
    q.mode = mode;
    q.scale_a = 1.0;
    if (mode.kind == ControlKind::LorentzianPhase)
        q.q = CVec::Constant(n, cd(0.5, 0.5));
    else
        q.q = CVec::Ones(n);
    return q;
}

std::optional<AnalogBeamformer> analog_candidate(const CVec &x, const ControlMode &mode, const SolverOptions &opts)
{
    try
    {
        switch (mode.kind)
        {
        case ControlKind::AmplitudeOnly:
            return analog_amplitude(x, mode.scaled);
        case ControlKind::BinaryAmplitude:
            return analog_binary(x, mode.scaled, opts.binary_rule);
        case ControlKind::LorentzianPhase:
            return analog_lorentzian(x, mode.scaled, opts.lorentzian_rule);
        }
    }
    catch (const DegenerateAnalog &)
    {
    }
    return std::nullopt;
}

double residual(const CVec &f, const CVec &q, const CVec &pb)
{
    return (f - q.cwiseProduct(pb)).norm();
}
} // namespace

SolveReport evaluate_beam(const Scenario &scenario, const CVec &f_eff, double energy_slack_db)
{
    SolveReport rep;
    rep.min_rate = std::numeric_limits<double>::infinity();
    for (const auto &h : scenario.du_channels)
    {
        const double r = du_rate(h, f_eff, scenario.transmit_power, scenario.noise_power);
        rep.per_du_rates.push_back(r);
        rep.min_rate = std::min(rep.min_rate, r);
    }
    if (rep.per_du_rates.empty())
        rep.min_rate = 0.0;
    const double floor = scenario.energy_floor * std::pow(10.0, -energy_slack_db / 10.0);
    rep.feasible = true;
    for (const auto &h : scenario.eu_channels)
    {
        const double e = eu_energy(h, f_eff, scenario.transmit_power);
        rep.per_eu_energy.push_back(e);
        if (e < floor)
            rep.feasible = false;
    }
    rep.converged = true;
    return rep;
}

HybridSolution alternating_optimize(const Scenario &scenario, const PropagationMatrix &P, const ControlMode &mode,
                                    const SolverOptions &opts)
{
    scenario.validate();
    if (static_cast<std::size_t>(P.matrix.rows()) != scenario.n_antennas())
        throw std::invalid_argument("alternating_optimize: propagation matrix does not match the channels");
    if (opts.max_iterations < 1)
        throw std::invalid_argument("alternating_optimize: max_iterations must be positive");

    const CVec f = fd_asymptotic(scenario);

    AnalogBeamformer analog = initial_analog(mode, f.size());
    DigitalBeamformer digital{CVec::Zero(P.matrix.cols())};
    bool have_digital = false;

    std::vector<double> history;
    double last = std::numeric_limits<double>::infinity();

    struct Iterate
    {
        AnalogBeamformer analog;
        DigitalBeamformer digital;
        SolveReport report;
    };
    std::optional<Iterate> best;
    double prev_rate = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    int it = 0;

    for (it = 1; it <= opts.max_iterations; ++it)
    {
        // digital half-update
        DigitalBeamformer ls = digital_ls_update(P, analog, f);
        CVec pb = P.matrix * ls.b;
        double e = residual(f, analog.q, pb);
        if (have_digital && e > last)
        {
            ls = digital;
            pb = P.matrix * ls.b;
            e = last;
        }
        digital = ls;
        have_digital = true;
        history.push_back(e);
        last = e;

        // analog half-update
        const CVec x = analog_target(P, digital, f);
        std::optional<AnalogBeamformer> cand = analog_candidate(x, mode, opts);
        double ec = cand ? residual(f, cand->q, pb) : std::numeric_limits<double>::infinity();
        if (!(ec <= last))
        {
            AnalogBeamformer fixed = analog;
            fixed.q = project(mode.kind, x, analog.scale_a);
            const double ef = residual(f, fixed.q, pb);
            if (ef <= last && fixed.q.cwiseAbs().maxCoeff() > 0.0)
            {
                cand = std::move(fixed);
                ec = ef;
            }
            else
            {
                cand = analog;
                ec = last;
            }
        }
        analog = std::move(*cand);
        history.push_back(ec);
        last = ec;

        DigitalBeamformer unit;
        try
        {
            unit = normalize_digital(digital, analog, P);
        }
        catch (const DegenerateBeam &)
        {
            continue;
        }
        SolveReport rep = evaluate_beam(scenario, effective_beam(analog, P, unit), opts.energy_slack_db);
        const double rate = rep.min_rate;
        if (!best || rate > best->report.min_rate)
            best = Iterate{analog, unit, std::move(rep)};
        if (!std::isnan(prev_rate) && std::abs(rate - prev_rate) < opts.rate_tolerance)
        {
            converged = true;
            best = Iterate{analog, unit, evaluate_beam(scenario, effective_beam(analog, P, unit), opts.energy_slack_db)};
            break;
        }
        prev_rate = rate;
    }
    if (!best)
        throw DegenerateBeam("alternating_optimize: no iterate produced a non-zero beam");

    auto [q_out, b_out] = descale(best->analog, best->digital);
    HybridSolution sol{std::move(q_out), std::move(b_out), std::move(best->report)};
    sol.report.residual_history = std::move(history);
    sol.report.iterations = std::min(it, opts.max_iterations);
    sol.report.converged = converged;
    if (!converged)
        sol.report.warning = "no convergence within " + std::to_string(opts.max_iterations) +
                             " iterations; returning the best iterate";
    return sol;
}

} // namespace hmimo
