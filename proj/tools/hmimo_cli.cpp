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

// hmimo command-line front end.
//
//   hmimo <pattern|resolve|solve|sweep|validate> [--config file.json] [--seed n]
//         [--out file.csv] [--parallel n] [--mode m] [--scaled|--unscaled]
//         [--global-search]
//
// Exit codes: 0 success, 1 validation or run failure, 2 configuration error.

#include "hmimo/cli.hpp"
#include "hmimo/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace
{
std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hmimo::ConfigError("--config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near-field circular H-MIMO beamforming for data and energy multicast"};
    app.set_version_flag("--version", std::string(hmimo::version));
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    unsigned parallel = 1;
    std::optional<std::string> mode;
    std::optional<bool> scaled;
    bool global_search = false;

    app.add_option("--config", config_path, "JSON configuration file (defaults apply when omitted)");
    app.add_option("--seed", seed, "Master random seed");
    app.add_option("--out", out_path, "Output CSV path (default stdout)");
    app.add_option("--parallel", parallel, "Worker threads for sweeps (0 = hardware concurrency)");
    app.add_option("--mode", mode, "Analog control mode")->check(CLI::IsMember({"amplitude", "binary", "lorentzian"}));
    app.add_flag("--scaled,!--unscaled", scaled, "Equivalent-scaling relaxation on/off");
    app.add_flag("--global-search", global_search, "Grid-search the Lorentzian scale parameter");

    const std::pair<const char *, hmimo::Command> commands[] = {
        {"pattern", hmimo::Command::Pattern},
        {"resolve", hmimo::Command::Resolve},
        {"solve", hmimo::Command::Solve},
        {"sweep", hmimo::Command::Sweep},
        {"validate", hmimo::Command::Validate},
    };
    const char *help[] = {"Beam pattern over a plane", "Resolution function: exact, closed form and bound",
                          "Hybrid beamforming for one random scenario", "Parameter sweep over random scenarios",
                          "Built-in self-tests"};
    for (std::size_t i = 0; i < 5; ++i)
        app.add_subcommand(commands[i].first, help[i])->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    hmimo::Command command = hmimo::Command::Validate;
    for (const auto &[name, cmd] : commands)
        if (app.got_subcommand(name))
            command = cmd;

    hmimo::RunConfig config;
    try
    {
        config = hmimo::parse_config(config_path.empty() ? std::string("{}") : read_file(config_path));
        if (seed)
            config.seed = *seed;
        if (mode)
            config.hardware.mode = *mode == "amplitude" ? hmimo::ControlKind::AmplitudeOnly
                                   : *mode == "binary"  ? hmimo::ControlKind::BinaryAmplitude
                                                        : hmimo::ControlKind::LorentzianPhase;
        if (scaled)
            config.hardware.scaled = *scaled;
        if (global_search)
            config.hardware.global_search = true;
        hmimo::validate_config(config);
    }
    catch (const hmimo::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    hmimo::ExecOptions options;
    options.threads = parallel == 0 ? std::max(1u, std::thread::hardware_concurrency()) : parallel;
    options.progress = command == hmimo::Command::Sweep;
    const hmimo::ExecResult result = hmimo::execute(command, config, options);

    if (out_path.empty())
        result.table.write_csv(std::cout);
    else
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        result.table.write_csv(out);
    }
    if (!result.message.empty())
        std::cerr << result.message << '\n';
    return result.exit_code;
}
