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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "cli/commands.h"
#include "cli/export.h"
#include "cli/verify.h"
#include "gtest/gtest.h"
#include "opocluster/cluster.h"
#include "opocluster/prune.h"
#include "oracles.h"

using namespace opocluster;
using namespace opocluster::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, gmatrix_csv_matches_printed_block) {
    auto res = run_cli({"gmatrix", "--n", "4", "--format", "csv"});
    ASSERT_EQ(res.code, 0);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "1,2,3,4,5,6,7,8");
    auto printed = oracles::printed_g8();
    for (int r = 0; r < 8; r++) {
        ASSERT_TRUE(std::getline(in, line));
        std::istringstream cells(line);
        std::string cell;
        for (int c = 0; c < 8; c++) {
            ASSERT_TRUE(std::getline(cells, cell, ','));
            EXPECT_EQ(std::stoi(cell), printed(r, c));
        }
    }
}

TEST(cli, spectrum_json) {
    auto res = run_cli({"spectrum", "--n", "4", "--format", "json"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    EXPECT_EQ(doc["n"], 4);
    EXPECT_EQ(doc["schema_version"], kSchemaVersion);
    EXPECT_EQ(doc["tool_version"], tool_version());
    const double expected[] = {1.8793852415718168, 1.5320888862379561, 1.0, 0.3472963553338607};
    ASSERT_EQ(doc["eigenvalues"].size(), 8u);
    for (int k = 0; k < 4; k++) {
        EXPECT_NEAR(doc["eigenvalues"][k].get<double>(), expected[k], 1e-11);
        EXPECT_NEAR(doc["eigenvalues"][4 + k].get<double>(), -expected[k], 1e-11);
    }
}

TEST(cli, amatrix_both_reports_route_deviation) {
    auto res = run_cli({"amatrix", "--n", "30", "--method", "both", "--format", "json"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    EXPECT_LE(doc["max_abs_deviation"].get<double>(), 1e-8);
    EXPECT_EQ(doc["matrix"].size(), 60u);

    auto csv = run_cli({"amatrix", "--n", "3", "--method", "both"});
    EXPECT_NE(csv.out.find("max_abs_deviation,"), std::string::npos);
}

TEST(cli, twelve_significant_digits_and_full_precision) {
    auto res = run_cli({"amatrix", "--n", "4", "--format", "csv"});
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    EXPECT_EQ(line.substr(0, line.find(',')), "0");
    EXPECT_NE(line.find("0.367267476592"), std::string::npos);

    auto full = run_cli({"amatrix", "--n", "4", "--format", "csv", "--full-precision"});
    EXPECT_NE(full.out.find("0.36726747659247"), std::string::npos);
}

TEST(cli, exports_are_deterministic) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"amatrix", "--n", "6", "--format", "json", "--method", "both"},
             {"simulate", "--n", "4", "--r-sweep", "0:2:0.5"},
             {"prune", "--n", "30", "--epsilon", "0.2"}}) {
        EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    }
}

TEST(cli, simulate_two_modes) {
    auto res = run_cli({"simulate", "--n", "1", "--r", "1"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    EXPECT_NEAR(doc["points"][0]["max_variance"].get<double>(), 0.0676676416183, 1e-12);
    EXPECT_TRUE(doc["fitted_log_slope"].is_null());
    EXPECT_TRUE(doc.contains("rotation_sign"));
}

TEST(cli, simulate_sweep_is_monotone) {
    auto res = run_cli({"simulate", "--n", "30", "--r-sweep", "0:4:0.5"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    EXPECT_EQ(doc["points"].size(), 9u);
    EXPECT_TRUE(doc["monotone"].get<bool>());
    double prev = INFINITY;
    for (const auto &p : doc["points"]) {
        double v = p["max_variance"];
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(cli, simulate_vacuum_raw_variances) {
    auto res = run_cli({"simulate", "--n", "4", "--r", "0", "--full-precision"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    auto a = a_closed(4);
    const auto &raw = doc["points"][0]["raw_variances"];
    ASSERT_EQ(raw.size(), 8u);
    for (int j = 0; j < 8; j++) {
        EXPECT_NEAR(raw[j].get<double>(), (1 + a.entries().row(j).squaredNorm()) / 2, 1e-12);
    }
}

TEST(cli, prune_db_gives_wire) {
    auto res = run_cli({"prune", "--n", "30", "--db", "2.6"});
    ASSERT_EQ(res.code, 0);
    auto doc = json::parse(res.out);
    EXPECT_EQ(doc["stats"]["label"], "wire");
    EXPECT_NEAR(doc["db"].get<double>(), 2.6, 1e-9);
    for (const auto &key : {"n", "epsilon", "db", "edges", "stats"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    for (const auto &key : {"degrees", "components", "bipartite", "label"}) {
        EXPECT_TRUE(doc["stats"].contains(key)) << key;
    }
    for (const auto &e : doc["edges"]) {
        ASSERT_EQ(e.size(), 3u);
        EXPECT_GE(std::abs(e[2].get<double>()), doc["epsilon"].get<double>());
    }
}

TEST(cli, prune_above_one_warns_and_succeeds) {
    auto res = run_cli({"prune", "--n", "30", "--epsilon", "1.1"});
    EXPECT_EQ(res.code, 0);
    EXPECT_NE(res.err.find("warning"), std::string::npos);
    auto doc = json::parse(res.out);
    EXPECT_TRUE(doc["edges"].empty());
    EXPECT_EQ(doc["stats"]["components"], 60);
    EXPECT_EQ(doc["stats"]["label"], "empty");
}

TEST(cli, prune_r_matches_epsilon) {
    auto by_r = json::parse(run_cli({"prune", "--n", "10", "--r", "0.6"}).out);
    auto by_eps = json::parse(run_cli({"prune", "--n", "10", "--epsilon", std::to_string(std::exp(-1.2))}).out);
    EXPECT_EQ(by_r["edges"], by_eps["edges"]);
    EXPECT_NEAR(by_r["r"].get<double>(), 0.6, 1e-12);
}

TEST(cli, usage_errors_exit_two) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"gmatrix", "--n", "0"}).code, 2);
    EXPECT_EQ(run_cli({"gmatrix", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"prune", "--n", "30"}).code, 2);
    EXPECT_EQ(run_cli({"prune", "--n", "30", "--r", "1", "--db", "3"}).code, 2);
    EXPECT_EQ(run_cli({"prune", "--n", "4", "--epsilon", "0.3", "--margin", "4"}).code, 2);
    EXPECT_EQ(run_cli({"simulate", "--r", "-1"}).code, 2);
    EXPECT_EQ(run_cli({"simulate", "--r-sweep", "1:0:0.5"}).code, 2);
    EXPECT_EQ(run_cli({"simulate", "--r-sweep", "nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"amatrix", "--method", "guess"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--n-min", "5", "--n-max", "2"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--tol", "bogus=1"}).code, 2);
}

TEST(cli, io_failure_exit_one) {
    EXPECT_EQ(run_cli({"gmatrix", "--out", "/nonexistent-dir/g.csv"}).code, 1);
}

TEST(cli, writes_to_file) {
    auto path = std::filesystem::temp_directory_path() / "opocluster_cli_test_g.csv";
    auto res = run_cli({"gmatrix", "--n", "2", "--out", path.string()});
    ASSERT_EQ(res.code, 0);
    EXPECT_TRUE(res.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "1,2,3,4");
    std::filesystem::remove(path);
}

TEST(cli, sweep_parsing) {
    EXPECT_EQ(parse_sweep("0:1:0.5"), (std::vector<double>{0, 0.5, 1}));
    EXPECT_EQ(parse_sweep("2:2:1").size(), 1u);
    EXPECT_EQ(parse_sweep("0:4:0.5").size(), 9u);
    EXPECT_THROW(parse_sweep("0:1"), UsageError);
    EXPECT_THROW(parse_sweep("0:1:0"), UsageError);
}

TEST(cli, dot_round_trips_through_graphviz_parser) {
    auto res = run_cli({"prune", "--n", "30", "--epsilon", "0.2", "--format", "dot"});
    ASSERT_EQ(res.code, 0);

    struct VertexProps {
        std::string id, fill, rail;
    };
    struct EdgeProps {
        std::string label, w;
    };
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, VertexProps, EdgeProps>;
    Graph parsed;
    boost::dynamic_properties dp(boost::ignore_other_properties);
    dp.property("node_id", boost::get(&VertexProps::id, parsed));
    dp.property("fillcolor", boost::get(&VertexProps::fill, parsed));
    dp.property("rail", boost::get(&VertexProps::rail, parsed));
    dp.property("label", boost::get(&EdgeProps::label, parsed));
    dp.property("w", boost::get(&EdgeProps::w, parsed));
    std::istringstream in(res.out);
    ASSERT_TRUE(boost::read_graphviz(in, parsed, dp, "node_id"));

    auto expected = prune(a_closed(30), 0.2);
    ASSERT_EQ(boost::num_vertices(parsed), 60u);
    ASSERT_EQ(boost::num_edges(parsed), expected.edges.size());

    std::map<std::pair<int, int>, double> weights;
    for (auto [it, end] = boost::edges(parsed); it != end; ++it) {
        int a = std::stoi(parsed[boost::source(*it, parsed)].id);
        int b = std::stoi(parsed[boost::target(*it, parsed)].id);
        weights[{std::min(a, b), std::max(a, b)}] = std::stod(parsed[*it].w);
        EXPECT_EQ(parsed[*it].label, parsed[*it].w);
    }
    for (const auto &e : expected.edges) {
        auto it = weights.find({e.i + 1, e.j + 1});
        ASSERT_NE(it, weights.end());
        EXPECT_NEAR(it->second, e.weight, 1e-11);
    }
    for (auto [it, end] = boost::vertices(parsed); it != end; ++it) {
        int id = std::stoi(parsed[*it].id);
        EXPECT_EQ(parsed[*it].rail, id <= 30 ? "+1" : "-1");
        EXPECT_FALSE(parsed[*it].fill.empty());
    }
}

TEST(cli, verify_default_range_passes) {
    auto res = run_cli({"verify"});
    EXPECT_EQ(res.code, 0) << res.err;
    auto doc = json::parse(res.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_EQ(doc["n_min"], 1);
    EXPECT_EQ(doc["n_max"], 16);
    EXPECT_EQ(doc["failures"], 0);
}

TEST(cli, verify_catches_injected_b_sign_flip) {
    auto res = run_cli({"verify", "--n-max", "4", "--inject-fault", "b-sign"});
    EXPECT_EQ(res.code, 1);
    auto doc = json::parse(res.out);
    bool route_failed = false;
    for (const auto &c : doc["checks"]) {
        if (c["name"] == "route_equivalence") {
            EXPECT_FALSE(c["passed"].get<bool>());
            route_failed = true;
        }
    }
    EXPECT_TRUE(route_failed);
}

TEST(cli, verify_tolerance_override_can_fail_a_check) {
    auto res = run_cli({"verify", "--n-max", "3", "--tol", "orthogonality=0", "--tol", "route=0"});
    EXPECT_EQ(res.code, 1);
}

TEST(cli, verify_up_to_thirty) {
    auto report = run_verify(1, 30, VerifyTolerances{});
    EXPECT_TRUE(report.passed());
    EXPECT_LT(report.seconds, 60);
}
