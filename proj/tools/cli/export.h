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

#ifndef OPOCLUSTER_CLI_EXPORT_H
#define OPOCLUSTER_CLI_EXPORT_H

#include <ostream>
#include <string>

#include "json.hpp"
#include "opocluster/cluster.h"
#include "opocluster/lattice.h"
#include "opocluster/prune.h"

namespace opocluster::cli {

inline constexpr int kSchemaVersion = 1;
std::string tool_version();

/// Float rendering shared by every exporter: 12 significant digits, or 17
/// (round-trip exact) when `full` is set.
struct FloatFormat {
    bool full = false;

    std::string text(double x) const;
    /// Value that nlohmann::json serializes with the same digits as text().
    double json_value(double x) const;
};

/// Row-major CSV with a header row of labels 1..2n.
void write_csv(std::ostream &out, const Matrix &m, const FloatFormat &fmt);
void write_csv(std::ostream &out, const IntMatrix &m);

nlohmann::json matrix_json(const Matrix &m, const FloatFormat &fmt);

/// {"n", "epsilon", "db", "edges": [[i, j, w], ...], "stats": {...}}.
/// Vertex labels are 1-based.
nlohmann::json pruned_graph_json(const PrunedGraph &g, Structure label, const FloatFormat &fmt);

/// Undirected DOT graph. Node fill color encodes the rail (labels 1..n vs
/// n+1..2n); edges carry their weight as `label` and `w` attributes.
void write_dot(std::ostream &out, int n, const std::vector<Edge> &edges, const FloatFormat &fmt);

}  // namespace opocluster::cli

#endif
