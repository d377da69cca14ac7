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

#include "export.h"

#include <cstdio>
#include <cstdlib>

#ifndef OPOCLUSTER_VERSION
#define OPOCLUSTER_VERSION "unknown"
#endif

namespace opocluster::cli {

std::string tool_version() {
    return OPOCLUSTER_VERSION;
}

std::string FloatFormat::text(double x) const {
    char buf[40];
    std::snprintf(buf, sizeof(buf), full ? "%.17g" : "%.12g", x == 0 ? 0.0 : x);
    return buf;
}

double FloatFormat::json_value(double x) const {
    return full ? x : std::strtod(text(x).c_str(), nullptr);
}

namespace {

template <typename M, typename F>
void write_csv_impl(std::ostream &out, const M &m, F cell) {
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        out << (c ? "," : "") << c + 1;
    }
    out << "\n";
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out << (c ? "," : "") << cell(m(r, c));
        }
        out << "\n";
    }
}

}  // namespace

void write_csv(std::ostream &out, const Matrix &m, const FloatFormat &fmt) {
    write_csv_impl(out, m, [&](double x) { return fmt.text(x); });
}

void write_csv(std::ostream &out, const IntMatrix &m) {
    write_csv_impl(out, m, [](int x) { return x; });
}

nlohmann::json matrix_json(const Matrix &m, const FloatFormat &fmt) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        auto row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(fmt.json_value(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json pruned_graph_json(const PrunedGraph &g, Structure label, const FloatFormat &fmt) {
    auto edges = nlohmann::json::array();
    for (const auto &e : g.edges) {
        edges.push_back({e.i + 1, e.j + 1, fmt.json_value(e.weight)});
    }
    return {
        {"schema_version", kSchemaVersion},
        {"tool_version", tool_version()},
        {"n", g.n},
        {"epsilon", fmt.json_value(g.epsilon)},
        {"db", fmt.json_value(g.db)},
        {"edges", std::move(edges)},
        {"stats",
         {
             {"degrees", g.stats.degrees},
             {"degree_histogram", g.stats.degree_histogram},
             {"components", g.stats.components},
             {"bipartite", g.stats.bipartite},
             {"path", g.stats.is_path},
             {"label", std::string(to_string(label))},
         }},
    };
}

void write_dot(std::ostream &out, int n, const std::vector<Edge> &edges, const FloatFormat &fmt) {
    out << "graph cluster {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (int v = 1; v <= 2 * n; v++) {
        bool upper = v <= n;
        out << "  " << v << " [fillcolor=\"" << (upper ? "tomato" : "palegreen") << "\", rail=\""
            << (upper ? "+1" : "-1") << "\"];\n";
    }
    for (const auto &e : edges) {
        auto w = fmt.text(e.weight);
        out << "  " << e.i + 1 << " -- " << e.j + 1 << " [label=\"" << w << "\", w=\"" << w << "\"];\n";
    }
    out << "}\n";
}

}  // namespace opocluster::cli
