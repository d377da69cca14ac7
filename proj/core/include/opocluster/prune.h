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

#ifndef OPOCLUSTER_PRUNE_H
#define OPOCLUSTER_PRUNE_H

#include <string_view>
#include <vector>

#include "opocluster/cluster.h"

namespace opocluster {

/// Squeezing level -10 log10(epsilon), reported as a positive dB magnitude.
/// Throws std::invalid_argument unless 0 < epsilon <= 1.
double db_from_threshold(double epsilon);

/// 10^(-db / 10).
double threshold_from_db(double db);

/// Noise floor exp(-2r) of a squeezed state with interaction strength r.
double threshold_from_r(double r);

struct Edge {
    int i = 0;  // 0-based, i < j
    int j = 0;
    double weight = 0;
};

struct GraphStats {
    std::vector<int> degrees;
    /// histogram[d] = number of vertices with degree d.
    std::vector<int> degree_histogram;
    int components = 0;
    bool bipartite = true;
    /// Connected, acyclic, max degree <= 2, at least one edge.
    bool is_path = false;
};

struct PrunedGraph {
    int n = 0;
    double epsilon = 1;
    double db = 0;
    std::vector<Edge> edges;  // upper triangle, row-major order
    GraphStats stats;
};

/// Keeps every entry with |A_ij| >= epsilon.
PrunedGraph prune(const ClusterAdjacency &a, double epsilon);

GraphStats graph_stats(int vertex_count, const std::vector<Edge> &edges, int n);

enum class Structure { kEmpty, kWire, kLadder, kMultiWire, kDense };
std::string_view to_string(Structure s);

/// Degree-statistics label of the subgraph induced on the chain away from
/// its ends (`boundary_margin` vertices dropped at each end of
/// chain_order). Throws std::invalid_argument when margin < 0 or margin >= n.
Structure classify(const PrunedGraph &graph, int boundary_margin = 5);

}  // namespace opocluster

#endif
