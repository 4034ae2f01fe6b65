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

#include "hmimo/config.hpp"

#include "hmimo/errors.hpp"
#include "hmimo/units.hpp"

#include <json.hpp>

#include <cmath>
#include <initializer_list>
#include <limits>

namespace hmimo
{

using nlohmann::json;

namespace
{
std::string join(const std::string &path, const std::string &key)
{
    return path.empty() ? key : path + "." + key;
}

void only_keys(const json &obj, const std::string &path, std::initializer_list<const char *> keys)
{
    if (!obj.is_object())
        throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const char *k : keys)
            known = known || item.key() == k;
        if (!known)
            throw ConfigError(join(path, item.key()), "unknown key");
    }
}

double as_double(const json &v, const std::string &path)
{
    if (!v.is_number())
        throw ConfigError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ConfigError(path, "must be finite");
    return d;
}

std::int64_t as_int(const json &v, const std::string &path)
{
    if (v.is_number_integer())
        return v.get<std::int64_t>();
    if (v.is_number_float())
    {
        const double d = v.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15)
            return static_cast<std::int64_t>(d);
    }
    throw ConfigError(path, "expected an integer");
}

std::size_t as_count(const json &v, const std::string &path)
{
    const auto i = as_int(v, path);
    if (i < 0)
        throw ConfigError(path, "must be non-negative");
    return static_cast<std::size_t>(i);
}

std::string as_string(const json &v, const std::string &path)
{
    if (!v.is_string())
        throw ConfigError(path, "expected a string");
    return v.get<std::string>();
}

bool as_bool(const json &v, const std::string &path)
{
    if (!v.is_boolean())
        throw ConfigError(path, "expected true or false");
    return v.get<bool>();
}

template <typename F>
void read(const json &obj, const std::string &path, const char *key, F &&assign)
{
    if (obj.contains(key))
        assign(obj.at(key), join(path, key));
}

const json &section(const json &root, const char *key, const json &empty)
{
    return root.contains(key) ? root.at(key) : empty;
}

ControlKind parse_kind(const std::string &s, const std::string &path)
{
    if (s == "amplitude")
        return ControlKind::AmplitudeOnly;
    if (s == "binary")
        return ControlKind::BinaryAmplitude;
    if (s == "lorentzian" || s == "phase")
        return ControlKind::LorentzianPhase;
    throw ConfigError(path, "unknown control mode '" + s + "' (amplitude, binary, lorentzian)");
}

Plane parse_plane(const std::string &s, const std::string &path)
{
    if (s == "horizontal")
        return Plane::Horizontal;
    if (s == "vertical")
        return Plane::Vertical;
    if (s == "angular")
        return Plane::Angular;
    throw ConfigError(path, "unknown plane '" + s + "' (horizontal, vertical, angular)");
}

Axis parse_axis(const json &v, const std::string &path, Axis axis)
{
    only_keys(v, path, {"min", "max", "count"});
    read(v, path, "min", [&](const json &x, const std::string &p) { axis.min = as_double(x, p); });
    read(v, path, "max", [&](const json &x, const std::string &p) { axis.max = as_double(x, p); });
    read(v, path, "count", [&](const json &x, const std::string &p) {
        const auto c = as_int(x, p);
        if (c < 1 || c > 100000)
            throw ConfigError(p, "must be in [1, 100000]");
        axis.count = static_cast<int>(c);
    });
    return axis;
}

std::array<double, 6> parse_pair(const json &v, const std::string &path)
{
    if (!v.is_array() || v.size() != 6)
        throw ConfigError(path, "expected [r1, theta1, phi1, r2, theta2, phi2]");
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = as_double(v[i], path + "[" + std::to_string(i) + "]");
    return out;
}

template <typename T, typename F>
std::vector<T> parse_list(const json &v, const std::string &path, F &&item)
{
    if (!v.is_array())
        throw ConfigError(path, "expected a list");
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(item(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void require(bool ok, const std::string &path, const std::string &what)
{
    if (!ok)
        throw ConfigError(path, what);
}

json axis_json(const Axis &a)
{
    return json{{"min", a.min}, {"max", a.max}, {"count", a.count}};
}

std::string_view kind_name(ControlKind k)
{
    return to_string(k);
}
} // namespace

std::string_view to_string(Plane p)
{
    switch (p)
    {
    case Plane::Horizontal:
        return "horizontal";
    case Plane::Vertical:
        return "vertical";
    case Plane::Angular:
        return "angular";
    }
    return "?";
}

RunConfig parse_config(std::string_view json_text)
{
    json root;
    try
    {
        const auto first = json_text.find_first_not_of(" \t\r\n");
        root = first == std::string_view::npos ? json::object() : json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
    only_keys(root, "", {"array", "scenario", "hardware", "solver", "pattern", "resolve", "sweep", "seed"});

    RunConfig c;
    const json empty = json::object();

    {
        const std::string path = "array";
        const json &s = section(root, "array", empty);
        only_keys(s, path, {"n_antennas", "frequency_hz", "radius"});
        read(s, path, "n_antennas", [&](const json &v, const std::string &p) {
            const auto n = as_int(v, p);
            require(n >= 1, p, "must be a positive integer");
            c.array.n_antennas = static_cast<std::size_t>(n);
        });
        read(s, path, "frequency_hz", [&](const json &v, const std::string &p) { c.array.frequency_hz = as_double(v, p); });
        read(s, path, "radius", [&](const json &v, const std::string &p) {
            if (!v.is_null())
                c.array.radius = as_double(v, p);
        });
    }
    {
        const std::string path = "scenario";
        const json &s = section(root, "scenario", empty);
        auto &sc = c.scenario;
        only_keys(s, path,
                  {"n_du", "n_eu", "du_range", "eu_range", "transmit_power_dbm", "noise_power_dbm",
                   "energy_floor_dbm", "n_paths", "tx_gain_dbi", "rx_gain_dbi", "nlos_ratio",
                   "scatterer_min_range"});
        read(s, path, "n_du", [&](const json &v, const std::string &p) { sc.n_du = as_count(v, p); });
        read(s, path, "n_eu", [&](const json &v, const std::string &p) { sc.n_eu = as_count(v, p); });
        read(s, path, "du_range", [&](const json &v, const std::string &p) { sc.du_range = as_double(v, p); });
        read(s, path, "eu_range", [&](const json &v, const std::string &p) { sc.eu_range = as_double(v, p); });
        read(s, path, "transmit_power_dbm", [&](const json &v, const std::string &p) { sc.transmit_power_dbm = as_double(v, p); });
        read(s, path, "noise_power_dbm", [&](const json &v, const std::string &p) { sc.noise_power_dbm = as_double(v, p); });
        read(s, path, "energy_floor_dbm", [&](const json &v, const std::string &p) { sc.energy_floor_dbm = as_double(v, p); });
        read(s, path, "n_paths", [&](const json &v, const std::string &p) { sc.n_paths = as_count(v, p); });
        read(s, path, "tx_gain_dbi", [&](const json &v, const std::string &p) { sc.tx_gain_dbi = as_double(v, p); });
        read(s, path, "rx_gain_dbi", [&](const json &v, const std::string &p) { sc.rx_gain_dbi = as_double(v, p); });
        read(s, path, "nlos_ratio", [&](const json &v, const std::string &p) { sc.nlos_ratio = as_double(v, p); });
        read(s, path, "scatterer_min_range", [&](const json &v, const std::string &p) { sc.scatterer_min_range = as_double(v, p); });
    }
    {
        const std::string path = "hardware";
        const json &s = section(root, "hardware", empty);
        auto &hw = c.hardware;
        only_keys(s, path, {"n_rf", "gamma", "beta", "mode", "scaled", "global_search"});
        read(s, path, "n_rf", [&](const json &v, const std::string &p) { hw.n_rf = as_count(v, p); });
        read(s, path, "gamma", [&](const json &v, const std::string &p) { hw.gamma = as_double(v, p); });
        read(s, path, "beta", [&](const json &v, const std::string &p) {
            if (!v.is_null())
                hw.beta = as_double(v, p);
        });
        read(s, path, "mode", [&](const json &v, const std::string &p) { hw.mode = parse_kind(as_string(v, p), p); });
        read(s, path, "scaled", [&](const json &v, const std::string &p) { hw.scaled = as_bool(v, p); });
        read(s, path, "global_search", [&](const json &v, const std::string &p) { hw.global_search = as_bool(v, p); });
    }
    {
        const std::string path = "solver";
        const json &s = section(root, "solver", empty);
        auto &so = c.solver;
        only_keys(s, path, {"tolerance", "max_iterations", "energy_slack_db", "binary_rule", "printed_lorentzian_scale"});
        read(s, path, "tolerance", [&](const json &v, const std::string &p) { so.tolerance = as_double(v, p); });
        read(s, path, "max_iterations", [&](const json &v, const std::string &p) {
            const auto n = as_int(v, p);
            require(n >= 1 && n <= 1000000, p, "must be in [1, 1000000]");
            so.max_iterations = static_cast<int>(n);
        });
        read(s, path, "energy_slack_db", [&](const json &v, const std::string &p) { so.energy_slack_db = as_double(v, p); });
        read(s, path, "binary_rule", [&](const json &v, const std::string &p) {
            const auto r = as_string(v, p);
            require(r == "mean" || r == "median", p, "expected 'mean' or 'median'");
            so.binary_rule = r == "median" ? BinaryScaleRule::Median : BinaryScaleRule::Mean;
        });
        read(s, path, "printed_lorentzian_scale", [&](const json &v, const std::string &p) { so.printed_lorentzian_scale = as_bool(v, p); });
    }
    {
        const std::string path = "pattern";
        const json &s = section(root, "pattern", empty);
        auto &pa = c.pattern;
        only_keys(s, path, {"array_type", "linear_antennas", "plane", "axis1", "axis2", "fixed", "users", "scheme"});
        read(s, path, "array_type", [&](const json &v, const std::string &p) { pa.array_type = as_string(v, p); });
        read(s, path, "linear_antennas", [&](const json &v, const std::string &p) { pa.linear_antennas = as_count(v, p); });
        read(s, path, "plane", [&](const json &v, const std::string &p) { pa.plane = parse_plane(as_string(v, p), p); });
        read(s, path, "axis1", [&](const json &v, const std::string &p) { pa.axis1 = parse_axis(v, p, pa.axis1); });
        read(s, path, "axis2", [&](const json &v, const std::string &p) { pa.axis2 = parse_axis(v, p, pa.axis2); });
        read(s, path, "fixed", [&](const json &v, const std::string &p) { pa.fixed = as_double(v, p); });
        read(s, path, "scheme", [&](const json &v, const std::string &p) { pa.scheme = as_string(v, p); });
        read(s, path, "users", [&](const json &v, const std::string &p) {
            pa.users = parse_list<RunConfig::PatternUser>(v, p, [](const json &u, const std::string &up) {
                only_keys(u, up, {"r", "theta", "phi", "role"});
                RunConfig::PatternUser out;
                read(u, up, "r", [&](const json &x, const std::string &xp) { out.position.r = as_double(x, xp); });
                read(u, up, "theta", [&](const json &x, const std::string &xp) { out.position.theta = as_double(x, xp); });
                read(u, up, "phi", [&](const json &x, const std::string &xp) { out.position.phi = as_double(x, xp); });
                read(u, up, "role", [&](const json &x, const std::string &xp) {
                    const auto role = as_string(x, xp);
                    require(role == "du" || role == "eu", xp, "expected 'du' or 'eu'");
                    out.energy = role == "eu";
                });
                return out;
            });
        });
    }
    {
        const std::string path = "resolve";
        const json &s = section(root, "resolve", empty);
        auto &re = c.resolve;
        only_keys(s, path, {"source", "random_pairs", "min_range", "max_range", "pairs", "pairs_file", "n_values", "sweep_pair"});
        read(s, path, "source", [&](const json &v, const std::string &p) { re.source = as_string(v, p); });
        read(s, path, "random_pairs", [&](const json &v, const std::string &p) {
            const auto n = as_int(v, p);
            require(n >= 1 && n <= 100000000, p, "must be a positive integer");
            re.random_pairs = static_cast<int>(n);
        });
        read(s, path, "min_range", [&](const json &v, const std::string &p) { re.min_range = as_double(v, p); });
        read(s, path, "max_range", [&](const json &v, const std::string &p) { re.max_range = as_double(v, p); });
        read(s, path, "pairs", [&](const json &v, const std::string &p) {
            re.pairs = parse_list<std::array<double, 6>>(v, p, parse_pair);
        });
        read(s, path, "pairs_file", [&](const json &v, const std::string &p) { re.pairs_file = as_string(v, p); });
        read(s, path, "n_values", [&](const json &v, const std::string &p) {
            re.n_values = parse_list<std::size_t>(v, p, as_count);
        });
        read(s, path, "sweep_pair", [&](const json &v, const std::string &p) { re.sweep_pair = parse_pair(v, p); });
    }
    {
        const std::string path = "sweep";
        const json &s = section(root, "sweep", empty);
        auto &sw = c.sweep;
        only_keys(s, path, {"variable", "grid", "schemes", "trials", "per_trial"});
        read(s, path, "variable", [&](const json &v, const std::string &p) {
            const auto name = as_string(v, p);
            const auto var = parse_sweep_variable(name);
            require(var.has_value(), p, "unknown sweep variable '" + name + "'");
            sw.variable = *var;
        });
        read(s, path, "grid", [&](const json &v, const std::string &p) { sw.grid = parse_list<double>(v, p, as_double); });
        read(s, path, "schemes", [&](const json &v, const std::string &p) {
            sw.schemes = parse_list<Scheme>(v, p, [](const json &x, const std::string &xp) {
                const auto name = as_string(x, xp);
                const auto sch = parse_scheme(name);
                require(sch.has_value(), xp, "unknown scheme '" + name + "'");
                return *sch;
            });
        });
        read(s, path, "trials", [&](const json &v, const std::string &p) {
            const auto n = as_int(v, p);
            require(n >= 1 && n <= 1000000, p, "must be a positive integer");
            sw.trials = static_cast<int>(n);
        });
        read(s, path, "per_trial", [&](const json &v, const std::string &p) { sw.per_trial = as_bool(v, p); });
    }
    read(root, "", "seed", [&](const json &v, const std::string &p) {
        if (v.is_number_unsigned())
            c.seed = v.get<std::uint64_t>();
        else
        {
            const auto i = as_int(v, p);
            require(i >= 0, p, "must be non-negative");
            c.seed = static_cast<std::uint64_t>(i);
        }
    });

    validate_config(c);
    return c;
}

void validate_config(const RunConfig &c)
{
    require(c.array.n_antennas >= 1 && c.array.n_antennas <= 1000000, "array.n_antennas", "must be in [1, 1000000]");
    require(c.array.frequency_hz > 0.0, "array.frequency_hz", "must be positive");
    if (c.array.radius)
        require(*c.array.radius > 0.0, "array.radius", "must be positive");

    const auto &s = c.scenario;
    require(s.n_du >= 1 && s.n_du <= 10000, "scenario.n_du", "must be in [1, 10000]");
    require(s.n_eu <= 10000, "scenario.n_eu", "must be at most 10000");
    require(s.du_range > 0.0, "scenario.du_range", "must be positive");
    require(s.eu_range > 0.0, "scenario.eu_range", "must be positive");
    require(s.n_paths <= 100000, "scenario.n_paths", "must be at most 100000");
    require(s.nlos_ratio >= 0.0, "scenario.nlos_ratio", "must be non-negative");
    require(s.scatterer_min_range > 0.0, "scenario.scatterer_min_range", "must be positive");
    for (auto [v, p] : {std::pair{s.transmit_power_dbm, "scenario.transmit_power_dbm"},
                        std::pair{s.noise_power_dbm, "scenario.noise_power_dbm"},
                        std::pair{s.energy_floor_dbm, "scenario.energy_floor_dbm"}})
        require(std::abs(v) < 300.0, p, "outside [-300, 300] dBm");

    const auto &h = c.hardware;
    require(h.n_rf >= 1 && h.n_rf <= c.array.n_antennas, "hardware.n_rf", "must be in [1, n_antennas]");
    require(h.gamma >= 0.0, "hardware.gamma", "must be non-negative");

    const auto &so = c.solver;
    require(so.tolerance > 0.0, "solver.tolerance", "must be positive");
    require(so.energy_slack_db >= 0.0, "solver.energy_slack_db", "must be non-negative");

    const auto &pa = c.pattern;
    require(pa.array_type == "circular" || pa.array_type == "linear", "pattern.array_type",
            "expected 'circular' or 'linear'");
    require(pa.linear_antennas >= 1 && pa.linear_antennas <= 1000000, "pattern.linear_antennas", "must be in [1, 1000000]");
    require(!pa.users.empty(), "pattern.users", "at least one user required");
    for (std::size_t i = 0; i < pa.users.size(); ++i)
        require(pa.users[i].position.r > 0.0, "pattern.users[" + std::to_string(i) + "].r", "must be positive");
    require(parse_scheme(pa.scheme).has_value(), "pattern.scheme", "unknown scheme '" + pa.scheme + "'");
    require(static_cast<double>(pa.axis1.count) * pa.axis2.count <= 4e6, "pattern.axis2.count", "grid larger than 4e6 cells");

    const auto &re = c.resolve;
    require(re.source == "random" || re.source == "pairs" || re.source == "file" || re.source == "n_sweep",
            "resolve.source", "expected random, pairs, file or n_sweep");
    require(re.min_range > 0.0, "resolve.min_range", "must be positive");
    require(re.max_range >= re.min_range, "resolve.max_range", "must be at least min_range");
    for (std::size_t i = 0; i < re.pairs.size(); ++i)
        require(re.pairs[i][0] > 0.0 && re.pairs[i][3] > 0.0, "resolve.pairs[" + std::to_string(i) + "]",
                "ranges must be positive");
    require(re.sweep_pair[0] > 0.0 && re.sweep_pair[3] > 0.0, "resolve.sweep_pair", "ranges must be positive");
    for (std::size_t i = 0; i < re.n_values.size(); ++i)
        require(re.n_values[i] >= 1 && re.n_values[i] <= 1000000, "resolve.n_values[" + std::to_string(i) + "]",
                "must be in [1, 1000000]");
    if (re.source == "file")
        require(!re.pairs_file.empty(), "resolve.pairs_file", "required when source is 'file'");
    if (re.source == "pairs")
        require(!re.pairs.empty(), "resolve.pairs", "required when source is 'pairs'");

    const auto &sw = c.sweep;
    require(!sw.grid.empty(), "sweep.grid", "must not be empty");
    for (std::size_t i = 1; i < sw.grid.size(); ++i)
        require(sw.grid[i] >= sw.grid[i - 1], "sweep.grid", "must be sorted ascending");
    require(!sw.schemes.empty(), "sweep.schemes", "must not be empty");
    for (std::size_t i = 0; i < sw.grid.size(); ++i)
    {
        const double v = sw.grid[i];
        const std::string p = "sweep.grid[" + std::to_string(i) + "]";
        switch (sw.variable)
        {
        case SweepVariable::RfChains:
            require(v >= 1.0 && v == std::floor(v) && v <= static_cast<double>(c.array.n_antennas), p,
                    "RF chain count must be an integer in [1, n_antennas]");
            break;
        case SweepVariable::NAntennas:
            require(v >= 1.0 && v == std::floor(v) && v <= 1e6 && v >= static_cast<double>(h.n_rf), p,
                    "antenna count must be an integer in [n_rf, 1e6]");
            break;
        case SweepVariable::Gamma:
            require(v >= 0.0, p, "must be non-negative");
            break;
        case SweepVariable::TransmitPower:
        case SweepVariable::EnergyFloor:
            require(std::abs(v) < 300.0, p, "outside [-300, 300] dBm");
            break;
        }
    }
}

std::string serialize_config(const RunConfig &c)
{
    json root;
    root["array"] = {{"n_antennas", c.array.n_antennas}, {"frequency_hz", c.array.frequency_hz}};
    if (c.array.radius)
        root["array"]["radius"] = *c.array.radius;

    const auto &s = c.scenario;
    root["scenario"] = {{"n_du", s.n_du},
                        {"n_eu", s.n_eu},
                        {"du_range", s.du_range},
                        {"eu_range", s.eu_range},
                        {"transmit_power_dbm", s.transmit_power_dbm},
                        {"noise_power_dbm", s.noise_power_dbm},
                        {"energy_floor_dbm", s.energy_floor_dbm},
                        {"n_paths", s.n_paths},
                        {"tx_gain_dbi", s.tx_gain_dbi},
                        {"rx_gain_dbi", s.rx_gain_dbi},
                        {"nlos_ratio", s.nlos_ratio},
                        {"scatterer_min_range", s.scatterer_min_range}};

    const auto &h = c.hardware;
    root["hardware"] = {{"n_rf", h.n_rf},
                        {"gamma", h.gamma},
                        {"mode", std::string(kind_name(h.mode))},
                        {"scaled", h.scaled},
                        {"global_search", h.global_search}};
    if (h.beta)
        root["hardware"]["beta"] = *h.beta;

    const auto &so = c.solver;
    root["solver"] = {{"tolerance", so.tolerance},
                      {"max_iterations", so.max_iterations},
                      {"energy_slack_db", so.energy_slack_db},
                      {"binary_rule", so.binary_rule == BinaryScaleRule::Median ? "median" : "mean"},
                      {"printed_lorentzian_scale", so.printed_lorentzian_scale}};

    const auto &pa = c.pattern;
    json users = json::array();
    for (const auto &u : pa.users)
        users.push_back({{"r", u.position.r},
                         {"theta", u.position.theta},
                         {"phi", u.position.phi},
                         {"role", u.energy ? "eu" : "du"}});
    root["pattern"] = {{"array_type", pa.array_type},
                       {"linear_antennas", pa.linear_antennas},
                       {"plane", std::string(to_string(pa.plane))},
                       {"axis1", axis_json(pa.axis1)},
                       {"axis2", axis_json(pa.axis2)},
                       {"fixed", pa.fixed},
                       {"users", users},
                       {"scheme", pa.scheme}};

    const auto &re = c.resolve;
    root["resolve"] = {{"source", re.source},
                       {"random_pairs", re.random_pairs},
                       {"min_range", re.min_range},
                       {"max_range", re.max_range},
                       {"pairs", re.pairs},
                       {"pairs_file", re.pairs_file},
                       {"n_values", re.n_values},
                       {"sweep_pair", re.sweep_pair}};

    const auto &sw = c.sweep;
    json schemes = json::array();
    for (auto sch : sw.schemes)
        schemes.push_back(std::string(to_string(sch)));
    root["sweep"] = {{"variable", std::string(to_string(sw.variable))},
                     {"grid", sw.grid},
                     {"schemes", schemes},
                     {"trials", sw.trials},
                     {"per_trial", sw.per_trial}};
    root["seed"] = c.seed;
    return root.dump(2);
}

std::uint64_t config_hash(const RunConfig &config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_config(config))
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double wavelength(const RunConfig &config)
{
    return units::wavelength_from_frequency(config.array.frequency_hz);
}

ScenarioTemplate to_template(const RunConfig &c)
{
    ScenarioTemplate t;
    t.n_antennas = c.array.n_antennas;
    t.wavelength = wavelength(c);
    t.radius = c.array.radius.value_or(0.0);
    t.n_du = c.scenario.n_du;
    t.n_eu = c.scenario.n_eu;
    t.du_range = c.scenario.du_range;
    t.eu_range = c.scenario.eu_range;
    t.transmit_power = units::dbm_to_watts(c.scenario.transmit_power_dbm);
    t.noise_power = units::dbm_to_watts(c.scenario.noise_power_dbm);
    t.energy_floor = units::dbm_to_watts(c.scenario.energy_floor_dbm);
    t.n_paths = c.scenario.n_paths;
    t.channel.tx_gain_dbi = c.scenario.tx_gain_dbi;
    t.channel.rx_gain_dbi = c.scenario.rx_gain_dbi;
    t.channel.nlos_amplitude_ratio = c.scenario.nlos_ratio;
    t.channel.scatterer_min_range = c.scenario.scatterer_min_range;
    t.n_rf = c.hardware.n_rf;
    t.gamma = c.hardware.gamma;
    t.beta = c.hardware.beta;
    t.solver = solver_options(c);
    return t;
}

SweepSpec to_sweep_spec(const RunConfig &c)
{
    SweepSpec s;
    s.variable = c.sweep.variable;
    s.schemes = c.sweep.schemes;
    s.trials = c.sweep.trials;
    s.seed = c.seed;
    const bool power = s.variable == SweepVariable::TransmitPower || s.variable == SweepVariable::EnergyFloor;
    for (double v : c.sweep.grid)
        s.grid.push_back(power ? units::dbm_to_watts(v) : v);
    return s;
}

ControlMode control_mode(const RunConfig &c)
{
    return {c.hardware.mode, c.hardware.scaled};
}

SolverOptions solver_options(const RunConfig &c)
{
    SolverOptions o;
    o.max_iterations = c.solver.max_iterations;
    o.rate_tolerance = c.solver.tolerance;
    o.energy_slack_db = c.solver.energy_slack_db;
    o.binary_rule = c.solver.binary_rule;
    if (c.hardware.global_search)
        o.lorentzian_rule = LorentzianScaleRule::GlobalSearch;
    else if (c.solver.printed_lorentzian_scale)
        o.lorentzian_rule = LorentzianScaleRule::PrintedFormula;
    return o;
}

} // namespace hmimo
