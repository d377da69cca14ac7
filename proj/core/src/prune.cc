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

#include "opocluster/prune.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "opocluster/lattice.h"

namespace opocluster {

double db_from_threshold(double epsilon) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("threshold must lie in (0, 1], got " + std::to_string(epsilon));
    }
    return -10 * std::log10(epsilon);
}

double threshold_from_db(double db) {
    return std::pow(10.0, -db / 10);
}

double threshold_from_r(double r) {
    if (!(r >= 0)) {
        throw std::invalid_argument("threshold_from_r: r must be >= 0");
    }
    return std::exp(-2 * r);
}

GraphStats graph_stats(int vertex_count, const std::vector<Edge> &edges, int n) {
    GraphStats stats;
    stats.degrees.assign(vertex_count, 0);

    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    bool cyclic = false;
    for (const auto &e : edges) {
        stats.degrees[e.i]++;
        stats.degrees[e.j]++;
        if ((e.i < n) == (e.j < n)) {
            stats.bipartite = false;
        }
        int a = find(e.i);
        int b = find(e.j);
        if (a == b) {
            cyclic = true;
        } else {
            parent[a] = b;
        }
    }
    for (int v = 0; v < vertex_count; v++) {
        if (find(v) == v) {
            stats.components++;
        }
    }

    int max_degree = stats.degrees.empty() ? 0 : *std::max_element(stats.degrees.begin(), stats.degrees.end());
    stats.degree_histogram.assign(max_degree + 1, 0);
    for (int d : stats.degrees) {
        stats.degree_histogram[d]++;
    }
    stats.is_path = !edges.empty() && !cyclic && stats.components == 1 && max_degree <= 2;
    return stats;
}

PrunedGraph prune(const ClusterAdjacency &a, double epsilon) {
    PrunedGraph out;
    out.n = a.n();
    out.epsilon = epsilon;
    out.db = db_from_threshold(epsilon);
    const Matrix &m = a.entries();
    for (int i = 0; i < a.size(); i++) {
        for (int j = i + 1; j < a.size(); j++) {
            // Ties are retained.
            if (m(i, j) != 0 && std::abs(m(i, j)) >= epsilon) {
                out.edges.push_back({i, j, m(i, j)});
            }
        }
    }
    out.stats = graph_stats(a.size(), out.edges, a.n());
    return out;
}

std::string_view to_string(Structure s) {
    switch (s) {
        case Structure::kEmpty:
            return "empty";
        case Structure::kWire:
            return "wire";
        case Structure::kLadder:
            return "ladder";
        case Structure::kMultiWire:
            return "multi-wire";
        case Structure::kDense:
            return "dense";
    }
    return "unknown";
}

Structure classify(const PrunedGraph &graph, int boundary_margin) {
    if (boundary_margin < 0 || boundary_margin >= graph.n) {
        throw std::invalid_argument("classify: margin must lie in [0, n), got " + std::to_string(boundary_margin));
    }
    const auto order = chain_order(graph.n);
    const int size = 2 * graph.n;

    // Degrees are taken in the full pruned graph so the margin cut itself does
    // not create artificial wire ends.
    std::vector<int> degrees;
    for (int pos = boundary_margin; pos < size - boundary_margin; pos++) {
        degrees.push_back(graph.stats.degrees[order[pos] - 1]);
    }
    int max_degree = *std::max_element(degrees.begin(), degrees.end());
    if (max_degree == 0) {
        return Structure::kEmpty;
    }
    if (max_degree <= 2) {
        return Structure::kWire;
    }
    long degree_three = std::count(degrees.begin(), degrees.end(), 3);
    double mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) / degrees.size();
    if (max_degree == 3) {
        // A wire with a few extra rungs stays a wire until half the sites have them.
        return 2 * degree_three >= static_cast<long>(degrees.size()) ? Structure::kLadder : Structure::kWire;
    }
    return mean < 5 ? Structure::kMultiWire : Structure::kDense;
}

}  // namespace opocluster
