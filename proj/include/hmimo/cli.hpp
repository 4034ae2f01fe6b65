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

#include "hmimo/config.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hmimo
{

inline constexpr std::string_view version = "0.1.0";

// Rectangular CSV table with "#"-prefixed metadata lines.
struct OutputTable
{
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    void write_csv(std::ostream &out) const;
};

// 17 significant digits, round-trip safe.
std::string format_number(double v);

enum class Command
{
    Pattern,
    Resolve,
    Solve,
    Sweep,
    Validate,
};

std::string_view to_string(Command c);

struct ExecResult
{
    OutputTable table;
    int exit_code = 0; // 0 success, 1 validation failure, 2 config error
    std::string message;
};

struct ExecOptions
{
    unsigned threads = 1;
    bool progress = false; // row counter on stderr during sweeps
};

// Runs one subcommand. Config errors inside the command (e.g. an unreadable
// pair file) come back as exit code 2; other failures as 1.
ExecResult execute(Command command, const RunConfig &config, const ExecOptions &options = {});

} // namespace hmimo
