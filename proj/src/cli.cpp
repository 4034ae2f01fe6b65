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

#include "hmimo/cli.hpp"

#include "hmimo/bessel.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/metrics.hpp"
#include "hmimo/resolution.hpp"
#include "hmimo/rng.hpp"
#include "hmimo/solver.hpp"
#include "hmimo/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace hmimo
{

namespace
{
constexpr double pi = std::numbers::pi;

std::string csv_field(std::string s)
{
    for (char &ch : s)
        if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r')
            ch = ch == ',' ? ';' : ' ';
    return s;
}

std::string num(double v)
{
    return format_number(v);
}

std::string num(std::size_t v)
{
    return std::to_string(v);
}

std::string num(int v)
{
    return std::to_string(v);
}

std::string flag(bool b)
{
    return b ? "1" : "0";
}

std::string hex64(std::uint64_t v)
{
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

CircularArray circular_array(const RunConfig &c)
{
    const double lambda = wavelength(c);
    if (c.array.radius)
        return CircularArray(c.array.n_antennas, lambda, *c.array.radius);
    return CircularArray::half_wavelength(c.array.n_antennas, lambda);
}

// ---- pattern ---------------------------------------------------------------

CVec pattern_beam(const RunConfig &c, const Scenario &scenario, Scheme scheme, const PropagationMatrix *P)
{
    if (scheme == Scheme::FdAsy)
    {
        const CVec f = fd_asymptotic(scenario);
        return f / f.norm();
    }
    if (scheme == Scheme::FdMf)
        return mf_baseline(scenario);
    if (!P)
        throw ConfigError("pattern.scheme", "hybrid schemes need the circular array");

    ControlMode mode;
    SolverOptions opts = solver_options(c);
    switch (scheme)
    {
    case Scheme::Amplitude:
    case Scheme::AmplitudeScaling:
        mode.kind = ControlKind::AmplitudeOnly;
        break;
    case Scheme::Binary:
    case Scheme::BinaryScaling:
        mode.kind = ControlKind::BinaryAmplitude;
        break;
    default:
        mode.kind = ControlKind::LorentzianPhase;
        break;
    }
    mode.scaled = scheme == Scheme::AmplitudeScaling || scheme == Scheme::BinaryScaling ||
                  scheme == Scheme::PhaseScaling || scheme == Scheme::PhaseGlobal;
    if (scheme == Scheme::PhaseGlobal)
        opts.lorentzian_rule = LorentzianScaleRule::GlobalSearch;
    const HybridSolution sol = alternating_optimize(scenario, *P, mode, opts);
    return effective_beam(sol.analog, *P, sol.digital);
}

ExecResult run_pattern(const RunConfig &c)
{
    const auto &pa = c.pattern;
    const double lambda = wavelength(c);
    const Scheme scheme = *parse_scheme(pa.scheme);
    ChannelGenConfig gen;
    gen.tx_gain_dbi = c.scenario.tx_gain_dbi;
    gen.rx_gain_dbi = c.scenario.rx_gain_dbi;

    Scenario scenario;
    scenario.transmit_power = units::dbm_to_watts(c.scenario.transmit_power_dbm);
    scenario.noise_power = units::dbm_to_watts(c.scenario.noise_power_dbm);
    scenario.energy_floor = units::dbm_to_watts(c.scenario.energy_floor_dbm);

    PlaneSpec spec{pa.plane, pa.axis1, pa.axis2, pa.fixed};
    BeamPatternGrid grid;
    if (pa.array_type == "linear")
    {
        const LinearArray array(pa.linear_antennas, lambda / 2.0, lambda);
        for (const auto &u : pa.users)
        {
            auto ch = linear_los_channel(array, u.position, los_amplitude(gen, lambda, u.position.r));
            (u.energy ? scenario.eu_channels : scenario.du_channels).push_back(std::move(ch));
        }
        grid = linear_array_pattern(array, pattern_beam(c, scenario, scheme, nullptr), spec);
    }
    else
    {
        const CircularArray array = circular_array(c);
        for (const auto &u : pa.users)
        {
            auto ch = assemble_channel(array, {los_amplitude(gen, lambda, u.position.r), u.position});
            (u.energy ? scenario.eu_channels : scenario.du_channels).push_back(std::move(ch));
        }
        const PropagationMatrix P =
            propagation_matrix(array, c.hardware.n_rf, c.hardware.gamma, c.hardware.beta.value_or(array.wavenumber()));
        grid = beam_pattern(array, pattern_beam(c, scenario, scheme, &P), spec);
    }

    ExecResult res;
    auto &t = res.table;
    t.metadata.emplace_back("plane", std::string(to_string(pa.plane)));
    t.metadata.emplace_back("array_type", pa.array_type);
    t.metadata.emplace_back("scheme", pa.scheme);
    t.header = {"axis1", "axis2", "value"};
    for (std::size_t i = 0; i < grid.axis1_samples.size(); ++i)
        for (std::size_t j = 0; j < grid.axis2_samples.size(); ++j)
            t.add_row({num(grid.axis1_samples[i]), num(grid.axis2_samples[j]),
                       num(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))});
    return res;
}

// ---- resolve ---------------------------------------------------------------

std::vector<std::array<double, 6>> read_pair_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("resolve.pairs_file", "cannot open '" + path + "'");
    std::vector<std::array<double, 6>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::array<double, 6> pair{};
        std::size_t pos = 0;
        bool ok = true;
        for (int k = 0; k < 6 && ok; ++k)
        {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == ',' || line[pos] == '\t'))
                ++pos;
            const char *begin = line.data() + pos;
            const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), pair[static_cast<std::size_t>(k)]);
            ok = ec == std::errc() && std::isfinite(pair[static_cast<std::size_t>(k)]);
            pos = static_cast<std::size_t>(ptr - line.data());
        }
        if (!ok)
        {
            if (out.empty() && lineno == 1)
                continue; // header line
            throw ConfigError("resolve.pairs_file", path + ":" + std::to_string(lineno) + ": expected six numbers");
        }
        if (!(pair[0] > 0.0) || !(pair[3] > 0.0))
            throw ConfigError("resolve.pairs_file", path + ":" + std::to_string(lineno) + ": ranges must be positive");
        out.push_back(pair);
    }
    return out;
}

ExecResult run_resolve(const RunConfig &c)
{
    const auto &re = c.resolve;
    const double lambda = wavelength(c);

    ExecResult res;
    auto &t = res.table;
    t.header = {"index", "n_antennas", "r1", "theta1", "phi1", "r2", "theta2", "phi2",
                "exact", "closed_form", "upper_bound", "abs_error", "terms", "outside_fresnel"};

    auto emit = [&](std::size_t index, const CircularArray &array, const std::array<double, 6> &v) {
        const PolarPoint p1{v[0], v[1], v[2]};
        const PolarPoint p2{v[3], v[4], v[5]};
        const double exact = resolution_exact(array, p1, p2);
        const ClosedFormResult cf = resolution_closed_form(array, p1, p2);
        const double bound = resolution_upper_bound(resolution_params(array, p1, p2));
        t.add_row({num(index), num(array.size()), num(v[0]), num(v[1]), num(v[2]), num(v[3]), num(v[4]), num(v[5]),
                   num(exact), num(cf.value), num(bound), num(std::abs(cf.value - exact)), num(cf.terms),
                   flag(cf.outside_fresnel)});
    };

    if (re.source == "n_sweep")
    {
        std::vector<std::size_t> ns = re.n_values;
        if (ns.empty())
            for (std::size_t n = 100; n <= 3200; n += 100)
                ns.push_back(n);
        for (std::size_t i = 0; i < ns.size(); ++i)
            emit(i, CircularArray::half_wavelength(ns[i], lambda), re.sweep_pair);
    }
    else
    {
        const CircularArray array = circular_array(c);
        std::vector<std::array<double, 6>> pairs;
        if (re.source == "pairs")
            pairs = re.pairs;
        else if (re.source == "file")
            pairs = read_pair_file(re.pairs_file);
        else
        {
            Rng rng(derive_seed(c.seed, {0x7265736fULL}));
            std::uniform_real_distribution<double> range(re.min_range, re.max_range);
            std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
            std::uniform_real_distribution<double> azimuth(0.0, 2.0 * pi);
            for (int i = 0; i < re.random_pairs; ++i)
            {
                std::array<double, 6> v{};
                for (int k = 0; k < 2; ++k)
                {
                    v[3 * k] = range(rng);
                    v[3 * k + 1] = std::acos(cos_theta(rng));
                    v[3 * k + 2] = azimuth(rng);
                }
                pairs.push_back(v);
            }
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            emit(i, array, pairs[i]);

        const ConventionCheck check = check_phase_convention(array, 64, c.seed);
        t.metadata.emplace_back("phase_check_full_quadrant_max_error", num(check.full_quadrant_max_error));
        t.metadata.emplace_back("phase_check_principal_value_max_error", num(check.principal_value_max_error));
        t.metadata.emplace_back("phase_check_best", std::string(to_string(check.best)));
    }
    t.metadata.emplace_back("source", re.source);
    return res;
}

// ---- solve -----------------------------------------------------------------

ExecResult run_solve(const RunConfig &c)
{
    const ScenarioTemplate tpl = to_template(c);
    const CircularArray array = make_array(tpl);
    const PropagationMatrix P = make_propagation(tpl, array);
    const Scenario scenario = draw_scenario(tpl, array, derive_seed(c.seed, {0}));
    const HybridSolution sol = alternating_optimize(scenario, P, control_mode(c), solver_options(c));
    const SolveReport &r = sol.report;

    ExecResult res;
    auto &t = res.table;
    const ControlMode mode = control_mode(c);
    t.metadata.emplace_back("mode", std::string(to_string(mode.kind)));
    t.metadata.emplace_back("scaled", flag(mode.scaled));
    if (!r.warning.empty())
        t.metadata.emplace_back("warning", r.warning);
    t.header = {"quantity", "index", "value"};
    t.add_row({"min_rate", "0", num(r.min_rate)});
    for (std::size_t k = 0; k < r.per_du_rates.size(); ++k)
        t.add_row({"du_rate", num(k), num(r.per_du_rates[k])});
    for (std::size_t l = 0; l < r.per_eu_energy.size(); ++l)
        t.add_row({"eu_energy", num(l), num(r.per_eu_energy[l])});
    t.add_row({"iterations", "0", num(r.iterations)});
    t.add_row({"converged", "0", flag(r.converged)});
    t.add_row({"feasible", "0", flag(r.feasible)});
    for (std::size_t i = 0; i < r.residual_history.size(); ++i)
        t.add_row({"residual", num(i), num(r.residual_history[i])});
    return res;
}

// ---- sweep -----------------------------------------------------------------

ExecResult run_sweep_command(const RunConfig &c, const ExecOptions &options)
{
    const SweepSpec spec = to_sweep_spec(c);
    std::function<void(std::size_t, std::size_t)> progress;
    if (options.progress)
        progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\rrows " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
        };
    const SweepTable table = run_sweep(spec, to_template(c), options.threads, progress);

    ExecResult res;
    auto &t = res.table;
    const std::string var(to_string(spec.variable));
    t.metadata.emplace_back("variable", var);
    t.metadata.emplace_back("trials", num(spec.trials));
    const bool power = spec.variable == SweepVariable::TransmitPower || spec.variable == SweepVariable::EnergyFloor;
    t.metadata.emplace_back("value_unit", power ? "dBm" : "1");

    auto value_of = [&](std::size_t grid_index) { return num(c.sweep.grid[grid_index]); };
    auto grid_index_of = [&](double v) {
        for (std::size_t i = 0; i < spec.grid.size(); ++i)
            if (spec.grid[i] == v)
                return i;
        return std::size_t{0};
    };

    if (c.sweep.per_trial)
    {
        t.header = {"variable", "value", "scheme", "trial", "ok", "min_rate", "mean_eu_energy",
                    "feasible", "iterations", "converged", "error"};
        for (const auto &r : table.trials)
        {
            double e = 0.0;
            for (double v : r.report.per_eu_energy)
                e += v;
            if (!r.report.per_eu_energy.empty())
                e /= static_cast<double>(r.report.per_eu_energy.size());
            t.add_row({var, value_of(r.grid_index), std::string(to_string(r.scheme)), num(r.trial), flag(r.ok),
                       r.ok ? num(r.report.min_rate) : "nan", r.ok ? num(e) : "nan", flag(r.ok && r.report.feasible),
                       num(r.report.iterations), flag(r.ok && r.report.converged), csv_field(r.error)});
        }
    }
    else
    {
        t.header = {"variable", "value", "scheme", "mean_min_rate", "mean_eu_energy",
                    "feasible_fraction", "successes", "trials"};
        for (const auto &r : table.rows)
            t.add_row({var, value_of(grid_index_of(r.value)), std::string(to_string(r.scheme)), num(r.mean_min_rate),
                       num(r.mean_eu_energy), num(r.feasible_fraction), num(r.successes), num(r.trials)});
    }
    return res;
}

// ---- validate --------------------------------------------------------------

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

Check check_steering_norm(const CircularArray &array, Rng &rng)
{
    std::uniform_real_distribution<double> range(0.5, 100.0), polar(0.0, pi), az(0.0, 2.0 * pi);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
        worst = std::max(worst, std::abs(steering_vector(array, {range(rng), polar(rng), az(rng)}).norm() - 1.0));
    return {"steering_norm", worst < 1e-12, "max |norm-1| = " + num(worst)};
}

Check check_bessel(Rng &rng)
{
    std::uniform_real_distribution<double> arg(0.0, 200.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const double x = arg(rng);
        const auto seq = bessel_j_sequence(x, 60);
        for (int n = 0; n <= 60; ++n)
            worst = std::max(worst, std::abs(seq[static_cast<std::size_t>(n)] - std::cyl_bessel_j(double(n), x)));
    }
    return {"bessel_reference", worst < 1e-10, "max abs deviation = " + num(worst)};
}

Check check_convention(const CircularArray &array, std::uint64_t seed)
{
    const ConventionCheck cc = check_phase_convention(array, 64, seed);
    return {"phase_convention", cc.best == PhaseConvention::FullQuadrant,
            "full_quadrant max error " + num(cc.full_quadrant_max_error) + "; principal_value max error " +
                num(cc.principal_value_max_error)};
}

Check check_truncation(const CircularArray &array, Rng &rng)
{
    const double lo = std::max(2.0 * array.fresnel_lower_bound(), 5.0);
    std::uniform_real_distribution<double> range(lo, 4.0 * lo), polar(0.0, pi), az(0.0, 2.0 * pi);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const PolarPoint p1{range(rng), polar(rng), az(rng)};
        const PolarPoint p2{range(rng), polar(rng), az(rng)};
        const double tol = 1e-8;
        const double a = resolution_closed_form(array, p1, p2, {tol, 0}).value;
        const double b = resolution_closed_form(array, p1, p2, {tol / 2.0, 0}).value;
        worst = std::max(worst, std::abs(a - b));
        ok = ok && std::abs(a - b) < tol;
    }
    return {"series_truncation", ok, "max change on halving tolerance = " + num(worst)};
}

// Gram-Schmidt orthogonalized channels with distinct norms.
Scenario orthogonal_scenario(std::size_t n, std::size_t k, std::size_t l, Rng &rng, double pt, double e0)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<CVec> basis;
    Scenario s;
    s.transmit_power = pt;
    s.noise_power = 1e-12;
    s.energy_floor = e0;
    for (std::size_t u = 0; u < k + l; ++u)
    {
        CVec v(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < v.size(); ++i)
            v(i) = cd(g(rng), g(rng));
        for (const auto &b : basis)
            v -= b.dot(v) * b;
        v.normalize();
        basis.push_back(v);
        Channel ch;
        ch.vector = (1e-3 * (1.0 + 0.5 * static_cast<double>(u))) * v;
        (u < k ? s.du_channels : s.eu_channels).push_back(std::move(ch));
    }
    return s;
}

Check check_proposition(Rng &rng)
{
    const Scenario s = orthogonal_scenario(64, 3, 2, rng, 10.0, 1e-6);
    const CVec f = fd_asymptotic(s);
    double rate_spread = 0.0, energy_err = 0.0;
    const double r0 = du_rate(s.du_channels[0], f, s.transmit_power, s.noise_power);
    for (const auto &h : s.du_channels)
        rate_spread = std::max(rate_spread, std::abs(du_rate(h, f, s.transmit_power, s.noise_power) - r0) / r0);
    for (const auto &h : s.eu_channels)
        energy_err = std::max(energy_err, std::abs(eu_energy(h, f, s.transmit_power) - s.energy_floor) / s.energy_floor);
    const double norm_err = std::abs(f.norm() - 1.0);
    return {"fd_orthogonal_identities", rate_spread < 1e-9 && energy_err < 1e-9 && norm_err < 1e-9,
            "rate spread " + num(rate_spread) + "; energy error " + num(energy_err) + "; norm error " + num(norm_err)};
}

Check check_descale(const RunConfig &c)
{
    ScenarioTemplate tpl = to_template(c);
    tpl.n_antennas = 64;
    tpl.n_rf = std::min<std::size_t>(tpl.n_rf, 4);
    tpl.energy_floor = 0.0;
    const CircularArray array = make_array(tpl);
    const PropagationMatrix P = make_propagation(tpl, array);
    const Scenario s = draw_scenario(tpl, array, derive_seed(c.seed, {0x64657363ULL}));
    const HybridSolution sol = alternating_optimize(s, P, {ControlKind::LorentzianPhase, true}, tpl.solver);
    AnalogBeamformer scaled = sol.analog;
    const double a = 3.0;
    scaled.q *= a;
    scaled.scale_a = a;
    const DigitalBeamformer b_scaled{sol.digital.b / a};
    const auto [q1, b1] = descale(scaled, b_scaled);
    const CVec before = effective_beam(scaled, P, b_scaled);
    const CVec after = effective_beam(q1, P, b1);
    const double diff = (before - after).norm() / before.norm();
    const bool member = satisfies_constraints(q1) && satisfies_constraints(sol.analog);
    return {"descale_invariance", diff < 1e-12 && member, "relative beam change " + num(diff)};
}

Check check_fresnel(const CircularArray &array)
{
    // Error should fall by about 8x per doubling of r.
    double prev = 0.0;
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 6; ++i)
    {
        const double r = 20.0 * array.radius() * std::pow(2.0, i);
        const PolarPoint p{r, 1.0, 0.3};
        double worst = 0.0;
        for (std::size_t n = 0; n < array.size(); n += std::max<std::size_t>(1, array.size() / 64))
            worst = std::max(worst, std::abs(fresnel_distance(array, p, n) - exact_distance(array, p, n)) /
                                        exact_distance(array, p, n));
        if (i > 0 && prev > 1e-14)
            ok = ok && worst < prev / 4.0;
        prev = worst;
        detail += (i ? "; " : "") + num(worst);
    }
    return {"fresnel_convergence", ok, "relative errors " + detail};
}

ExecResult run_validate(const RunConfig &c)
{
    const CircularArray array = circular_array(c);
    Rng rng(derive_seed(c.seed, {0x76616c69ULL}));
    std::vector<Check> checks;
    checks.push_back(check_steering_norm(array, rng));
    checks.push_back(check_bessel(rng));
    checks.push_back(check_convention(array, c.seed));
    checks.push_back(check_truncation(array, rng));
    checks.push_back(check_fresnel(array));
    checks.push_back(check_proposition(rng));
    checks.push_back(check_descale(c));

    ExecResult res;
    auto &t = res.table;
    t.header = {"check", "passed", "detail"};
    int passed = 0;
    for (const auto &ch : checks)
    {
        passed += ch.passed ? 1 : 0;
        t.add_row({ch.name, flag(ch.passed), csv_field(ch.detail)});
    }
    t.metadata.emplace_back("passed", std::to_string(passed) + "/" + std::to_string(checks.size()));
    res.message = std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed";
    res.exit_code = passed == static_cast<int>(checks.size()) ? 0 : 1;
    return res;
}
} // namespace

void OutputTable::add_row(std::vector<std::string> row)
{
    if (!header.empty() && row.size() != header.size())
        throw std::logic_error("OutputTable: row width does not match header");
    rows.push_back(std::move(row));
}

void OutputTable::write_csv(std::ostream &out) const
{
    for (const auto &[key, value] : metadata)
        out << "# " << key << ": " << value << '\n';
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto &row : rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string_view to_string(Command c)
{
    switch (c)
    {
    case Command::Pattern:
        return "pattern";
    case Command::Resolve:
        return "resolve";
    case Command::Solve:
        return "solve";
    case Command::Sweep:
        return "sweep";
    case Command::Validate:
        return "validate";
    }
    return "?";
}

ExecResult execute(Command command, const RunConfig &config, const ExecOptions &options)
{
    ExecResult res;
    try
    {
        validate_config(config);
        switch (command)
        {
        case Command::Pattern:
            res = run_pattern(config);
            break;
        case Command::Resolve:
            res = run_resolve(config);
            break;
        case Command::Solve:
            res = run_solve(config);
            break;
        case Command::Sweep:
            res = run_sweep_command(config, options);
            break;
        case Command::Validate:
            res = run_validate(config);
            break;
        }
    }
    catch (const ConfigError &e)
    {
        res = {};
        res.exit_code = 2;
        res.message = e.what();
    }
    catch (const std::exception &e)
    {
        res = {};
        res.exit_code = 1;
        res.message = e.what();
    }

    std::vector<std::pair<std::string, std::string>> meta{
        {"hmimo_version", std::string(version)},
        {"command", std::string(to_string(command))},
        {"seed", std::to_string(config.seed)},
        {"config_hash", hex64(config_hash(config))},
        {"phase_convention", std::string(to_string(PhaseConvention::FullQuadrant))},
    };
    if (res.exit_code != 0 && !res.message.empty())
        meta.emplace_back("error", csv_field(res.message));
    meta.insert(meta.end(), res.table.metadata.begin(), res.table.metadata.end());
    res.table.metadata = std::move(meta);
    return res;
}

} // namespace hmimo
