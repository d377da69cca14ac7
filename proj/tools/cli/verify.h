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

#ifndef OPOCLUSTER_CLI_VERIFY_H
#define OPOCLUSTER_CLI_VERIFY_H

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace opocluster::cli {

struct VerifyTolerances {
    double orthogonality = 1e-10;
    double eigen_equation = 1e-10;
    double spectrum = 1e-9;
    double route = 1e-8;
    double b_forms = 1e-12;
    double symmetry = 1e-10;
    double bicolor_general = 1e-10;
    double purity = 1e-9;

    /// Applies "name=value" overrides; throws std::invalid_argument on an
    /// unknown name or unparsable value.
    void apply(const std::vector<std::string> &overrides);
};

/// Deliberate corruption for mutation-testing the suite itself.
enum class Fault { kNone, kFlipBSign };

struct Check {
    std::string name;
    int n = 0;
    bool passed = false;
    double value = 0;      // measured deviation (0 for exact checks that pass)
    double tolerance = 0;  // 0 means exact
    std::string error;     // exception text when the check threw
};

struct VerifyReport {
    int n_min = 1;
    int n_max = 16;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    int failures() const;
    nlohmann::json to_json() const;
};

VerifyReport run_verify(int n_min, int n_max, const VerifyTolerances &tol, Fault fault = Fault::kNone);

}  // namespace opocluster::cli

#endif
