// Copyright 2026 The opocluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPOCLUSTER_CLI_COMMANDS_H
#define OPOCLUSTER_CLI_COMMANDS_H

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "verify.h"

namespace opocluster::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
    int n = 4;
    std::optional<double> r;
    std::optional<double> epsilon;
    std::optional<double> db;
    /// "lo:hi:step", inclusive of hi.
    std::optional<std::string> r_sweep;
    std::string format;  // empty: command default
    std::string method = "analytic";
    int margin = 5;
    int n_min = 1;
    int n_max = 16;
    bool full_precision = false;
    std::vector<std::string> tolerance_overrides;
    Fault fault = Fault::kNone;
};

/// Thrown for configurations that are well-formed flags but invalid together.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_sweep(const std::string &spec);

int cmd_gmatrix(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_spectrum(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_amatrix(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_prune(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses `args` (without the program name), runs the selected subcommand and
/// returns its exit code. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace opocluster::cli

#endif
