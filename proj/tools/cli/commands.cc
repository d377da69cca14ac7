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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "export.h"
#include "opocluster/cluster.h"
#include "opocluster/eigensolver.h"
#include "opocluster/gaussian.h"
#include "opocluster/lattice.h"
#include "opocluster/prune.h"
#include "opocluster/spectral.h"

namespace opocluster::cli {

namespace {

nlohmann::json header(const char *kind, int n) {
    return {{"schema_version", kSchemaVersion}, {"tool_version", tool_version()}, {"kind", kind}, {"n", n}};
}

void require_n(const RunConfig &config) {
    if (config.n < 1) {
        throw UsageError("--n must be >= 1");
    }
}

std::string format_or(const RunConfig &config, const char *fallback, std::initializer_list<const char *> allowed) {
    std::string f = config.format.empty() ? fallback : config.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw UsageError("format '" + f + "' is not supported by this command");
}

std::vector<Edge> edges_of(const Matrix &m) {
    std::vector<Edge> edges;
    for (int i = 0; i < m.rows(); i++) {
        for (int j = i + 1; j < m.cols(); j++) {
            if (m(i, j) != 0) {
                edges.push_back({i, j, m(i, j)});
            }
        }
    }
    return edges;
}

}  // namespace

std::vector<double> parse_sweep(const std::string &spec) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
        throw UsageError("--r-sweep must look like lo:hi:step, got '" + spec + "'");
    }
    if (!(lo >= 0 && hi >= lo && step > 0)) {
        throw UsageError("--r-sweep needs 0 <= lo <= hi and step > 0");
    }
    std::vector<double> values;
    const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; i++) {
        values.push_back(lo + i * step);
    }
    return values;
}

int cmd_gmatrix(const RunConfig &config, std::ostream &out, std::ostream &) {
    require_n(config);
    auto fmt = format_or(config, "csv", {"csv", "json", "dot"});
    auto g = build_g(config.n);
    if (fmt == "csv") {
        write_csv(out, g.entries());
    } else if (fmt == "json") {
        auto doc = header("gmatrix", config.n);
        doc["chain_order"] = chain_order(config.n);
        doc["matrix"] = nlohmann::json::array();
        for (int r = 0; r < g.size(); r++) {
            std::vector<int> row;
            for (int c = 0; c < g.size(); c++) {
                row.push_back(g(r, c));
            }
            doc["matrix"].push_back(row);
        }
        out << doc.dump(2) << "\n";
    } else {
        write_dot(out, config.n, edges_of(g.as_real()), FloatFormat{config.full_precision});
    }
    return kOk;
}

int cmd_spectrum(const RunConfig &config, std::ostream &out, std::ostream &) {
    require_n(config);
    auto fmt_name = format_or(config, "json", {"json", "csv"});
    FloatFormat fmt{config.full_precision};
    const int n = config.n;
    auto lambda = analytic_eigenvalues(n);
    auto eig = numeric_eig(build_g(n).as_real());

    std::vector<double> analytic;
    for (double l : lambda) {
        analytic.push_back(l);
    }
    for (double l : lambda) {
        analytic.push_back(-l);
    }
    std::vector<double> numeric;
    double worst = 0;
    for (int k = 0; k < n; k++) {
        numeric.push_back(eig.values[k]);
    }
    for (int k = 0; k < n; k++) {
        numeric.push_back(eig.values[2 * n - 1 - k]);
    }
    for (int i = 0; i < 2 * n; i++) {
        worst = std::max(worst, std::abs(numeric[i] - analytic[i]));
    }

    if (fmt_name == "csv") {
        out << "k,sign,analytic,numeric\n";
        for (int i = 0; i < 2 * n; i++) {
            out << i % n + 1 << "," << (i < n ? "+" : "-") << "," << fmt.text(analytic[i]) << ","
                << fmt.text(numeric[i]) << "\n";
        }
        return kOk;
    }
    auto doc = header("spectrum", n);
    auto to_json = [&](const std::vector<double> &xs) {
        auto arr = nlohmann::json::array();
        for (double x : xs) {
            arr.push_back(fmt.json_value(x));
        }
        return arr;
    };
    doc["eigenvalues"] = to_json(analytic);
    doc["numeric_eigenvalues"] = to_json(numeric);
    doc["max_abs_error"] = fmt.json_value(worst);
    doc["lambda_min"] = fmt.json_value(lambda_min(n));
    out << doc.dump(2) << "\n";
    return kOk;
}

int cmd_amatrix(const RunConfig &config, std::ostream &out, std::ostream &) {
    require_n(config);
    auto fmt_name = format_or(config, "csv", {"csv", "json", "dot"});
    if (config.method != "analytic" && config.method != "numeric" && config.method != "both") {
        throw UsageError("--method must be analytic, numeric or both");
    }
    FloatFormat fmt{config.full_precision};
    const int n = config.n;

    std::optional<ClusterAdjacency> closed, general;
    if (config.method != "numeric") {
        closed = a_closed(n);
    }
    if (config.method != "analytic") {
        general = a_general(build_g(n));
    }
    const Matrix &a = closed ? closed->entries() : general->entries();
    std::optional<double> deviation;
    if (closed && general) {
        deviation = max_abs_diff(closed->entries(), general->entries());
    }

    if (fmt_name == "csv") {
        write_csv(out, a, fmt);
        if (deviation) {
            out << "max_abs_deviation," << fmt.text(*deviation) << "\n";
        }
    } else if (fmt_name == "json") {
        auto doc = header("amatrix", n);
        doc["method"] = config.method;
        doc["matrix"] = matrix_json(a, fmt);
        if (deviation) {
            doc["max_abs_deviation"] = fmt.json_value(*deviation);
        }
        out << doc.dump(2) << "\n";
    } else {
        write_dot(out, n, edges_of(a), fmt);
    }
    return kOk;
}

int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &) {
    require_n(config);
    format_or(config, "json", {"json"});
    if (config.r && config.r_sweep) {
        throw UsageError("give either --r or --r-sweep, not both");
    }
    std::vector<double> rs;
    if (config.r_sweep) {
        rs = parse_sweep(*config.r_sweep);
    } else {
        double r = config.r.value_or(1.0);
        if (!(r >= 0)) {
            throw UsageError("--r must be >= 0");
        }
        rs.push_back(r);
    }
    FloatFormat fmt{config.full_precision};
    auto decay = decay_report(config.n, rs);

    auto doc = header("simulate", config.n);
    doc["rotation_sign"] = decay.rotation_sign;
    doc["r_values"] = nlohmann::json::array();
    doc["points"] = nlohmann::json::array();
    for (const auto &p : decay.points) {
        doc["r_values"].push_back(fmt.json_value(p.r));
        auto vars = nlohmann::json::array();
        auto raw = nlohmann::json::array();
        for (size_t i = 0; i < p.variances.size(); i++) {
            vars.push_back(fmt.json_value(p.variances[i]));
            raw.push_back(fmt.json_value(p.raw_variances[i]));
        }
        doc["points"].push_back({{"r", fmt.json_value(p.r)},
                                 {"max_variance", fmt.json_value(p.max_variance())},
                                 {"variances", std::move(vars)},
                                 {"raw_variances", std::move(raw)},
                                 {"monotone_ok", p.monotone_ok}});
    }
    doc["monotone"] = decay.monotone;
    doc["fitted_log_slope"] =
        decay.fitted_log_slope ? nlohmann::json(fmt.json_value(*decay.fitted_log_slope)) : nlohmann::json(nullptr);
    doc["expected_log_slope"] = fmt.json_value(decay.expected_log_slope);
    doc["lambda_min"] = fmt.json_value(lambda_min(config.n));
    out << doc.dump(2) << "\n";
    return kOk;
}

int cmd_prune(const RunConfig &config, std::ostream &out, std::ostream &err) {
    require_n(config);
    auto fmt_name = format_or(config, "json", {"json", "dot"});
    int given = !!config.r + !!config.epsilon + !!config.db;
    if (given != 1) {
        throw UsageError("prune needs exactly one of --r, --epsilon, --db");
    }
    double epsilon = config.epsilon ? *config.epsilon
                     : config.db    ? threshold_from_db(*config.db)
                                    : threshold_from_r(*config.r);
    if (!(epsilon > 0)) {
        throw UsageError("threshold must be positive");
    }
    if (config.margin < 0 || config.margin >= config.n) {
        throw UsageError("--margin must lie in [0, n)");
    }

    auto a = a_closed(config.n);
    PrunedGraph graph;
    if (epsilon > 1) {
        err << "warning: threshold " << epsilon << " exceeds 1; no edge is observable, writing an empty graph\n";
        graph.n = config.n;
        graph.epsilon = epsilon;
        graph.db = -10 * std::log10(epsilon);
        graph.stats = graph_stats(a.size(), {}, config.n);
    } else {
        graph = prune(a, epsilon);
    }
    auto label = classify(graph, config.margin);
    FloatFormat fmt{config.full_precision};
    if (fmt_name == "json") {
        auto doc = pruned_graph_json(graph, label, fmt);
        doc["margin"] = config.margin;
        if (config.r) {
            doc["r"] = fmt.json_value(*config.r);
        }
        out << doc.dump(2) << "\n";
    } else {
        write_dot(out, config.n, graph.edges, fmt);
    }
    return kOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
    VerifyTolerances tol;
    tol.apply(config.tolerance_overrides);
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw UsageError("need 1 <= --n-min <= --n-max");
    }
    auto report = run_verify(config.n_min, config.n_max, tol, config.fault);
    out << report.to_json().dump(2) << "\n";
    if (!report.passed()) {
        for (const auto &c : report.checks) {
            if (!c.passed) {
                err << "FAIL " << c.name << " n=" << c.n << " value=" << c.value << " tol=" << c.tolerance
                    << (c.error.empty() ? "" : " error=" + c.error) << "\n";
            }
        }
        return kFailure;
    }
    return kOk;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cluster-state graphs of a dual-pumped spatiotemporal OPO", "opocluster"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    RunConfig config;
    std::string out_path;
    std::string fault_name = "none";

    auto add_common = [&](CLI::App *sub, bool with_n = true) {
        if (with_n) {
            sub->add_option("--n", config.n, "Half the number of modes (2n modes total)")->capture_default_str();
        }
        sub->add_option("--out", out_path, "Write to this file instead of stdout");
        sub->add_flag("--full-precision", config.full_precision, "17 significant digits instead of 12");
    };
    auto add_format = [&](CLI::App *sub, std::vector<std::string> choices) {
        sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember(choices));
    };

    using Command = std::function<int(const RunConfig &, std::ostream &, std::ostream &)>;
    std::vector<std::pair<CLI::App *, Command>> commands;

    auto *gm = app.add_subcommand("gmatrix", "H-graph coupling matrix G");
    add_common(gm);
    add_format(gm, {"csv", "json", "dot"});
    commands.emplace_back(gm, cmd_gmatrix);

    auto *sp = app.add_subcommand("spectrum", "Eigenvalues of G, analytic and numeric");
    add_common(sp);
    add_format(sp, {"json", "csv"});
    commands.emplace_back(sp, cmd_spectrum);

    auto *am = app.add_subcommand("amatrix", "Cluster-graph adjacency matrix A");
    add_common(am);
    add_format(am, {"csv", "json", "dot"});
    am->add_option("--method", config.method, "analytic, numeric or both")
        ->check(CLI::IsMember({"analytic", "numeric", "both"}))
        ->capture_default_str();
    commands.emplace_back(am, cmd_amatrix);

    auto *sim = app.add_subcommand("simulate", "Nullifier variances of the evolved Gaussian state");
    add_common(sim);
    add_format(sim, {"json"});
    sim->add_option("--r", config.r, "Squeezing parameter r = xi t");
    sim->add_option("--r-sweep", config.r_sweep, "Sweep lo:hi:step");
    commands.emplace_back(sim, cmd_simulate);

    auto *pr = app.add_subcommand("prune", "Threshold A and classify the surviving graph");
    add_common(pr);
    add_format(pr, {"json", "dot"});
    pr->add_option("--r", config.r, "Threshold exp(-2r)");
    pr->add_option("--epsilon", config.epsilon, "Edge-weight threshold");
    pr->add_option("--db", config.db, "Squeezing level in dB (positive magnitude)");
    pr->add_option("--margin", config.margin, "Chain-end vertices excluded from classification")
        ->capture_default_str();
    commands.emplace_back(pr, cmd_prune);

    auto *ver = app.add_subcommand("verify", "Run the structural invariant suite");
    add_common(ver, false);
    ver->add_option("--n-min", config.n_min)->capture_default_str();
    ver->add_option("--n-max", config.n_max)->capture_default_str();
    ver->add_option("--tol", config.tolerance_overrides, "Tolerance override name=value");
    ver->add_option("--inject-fault", fault_name, "Corrupt a stage to test the suite: none, b-sign")
        ->check(CLI::IsMember({"none", "b-sign"}));
    commands.emplace_back(ver, cmd_verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << tool_version() << "\n";
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (fault_name == "b-sign") {
        config.fault = Fault::kFlipBSign;
    }

    for (auto &[sub, command] : commands) {
        if (!sub->parsed()) {
            continue;
        }
        try {
            if (out_path.empty()) {
                return command(config, out, err);
            }
            std::ostringstream buffer;
            int code = command(config, buffer, err);
            std::ofstream file(out_path, std::ios::binary);
            if (!(file << buffer.str()) || !file.flush()) {
                err << "error: cannot write " << out_path << "\n";
                return kFailure;
            }
            return code;
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return kFailure;
        }
    }
    return kUsage;
}

}  // namespace opocluster::cli
