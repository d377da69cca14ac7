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

#include "verify.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "export.h"
#include "opocluster/cluster.h"
#include "opocluster/eigensolver.h"
#include "opocluster/gaussian.h"
#include "opocluster/lattice.h"
#include "opocluster/spectral.h"

namespace opocluster::cli {

void VerifyTolerances::apply(const std::vector<std::string> &overrides) {
    const std::map<std::string, double *> fields{
        {"orthogonality", &orthogonality}, {"eigen_equation", &eigen_equation}, {"spectrum", &spectrum},
        {"route", &route},                 {"b_forms", &b_forms},               {"symmetry", &symmetry},
        {"bicolor_general", &bicolor_general}, {"purity", &purity},
    };
    for (const auto &item : overrides) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("tolerance override must look like name=value: " + item);
        }
        auto it = fields.find(item.substr(0, eq));
        if (it == fields.end()) {
            throw std::invalid_argument("unknown tolerance: " + item.substr(0, eq));
        }
        size_t used = 0;
        double value = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1 || !(value >= 0)) {
            throw std::invalid_argument("bad tolerance value: " + item);
        }
        *it->second = value;
    }
}

bool VerifyReport::passed() const {
    return failures() == 0;
}

int VerifyReport::failures() const {
    int count = 0;
    for (const auto &c : checks) {
        count += !c.passed;
    }
    return count;
}

nlohmann::json VerifyReport::to_json() const {
    auto list = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json item{{"name", c.name}, {"n", c.n}, {"passed", c.passed}, {"value", c.value},
                            {"tolerance", c.tolerance}};
        if (!c.error.empty()) {
            item["error"] = c.error;
        }
        list.push_back(std::move(item));
    }
    return {
        {"schema_version", kSchemaVersion},
        {"tool_version", tool_version()},
        {"n_min", n_min},
        {"n_max", n_max},
        {"passed", passed()},
        {"checks_run", checks.size()},
        {"failures", failures()},
        {"seconds", seconds},
        {"checks", std::move(list)},
    };
}

namespace {

// Runs `measure` and compares against `tolerance`; a throw becomes a failed check.
void record(VerifyReport &report, const std::string &name, int n, double tolerance,
            const std::function<double()> &measure) {
    Check c{name, n, false, 0, tolerance, {}};
    try {
        c.value = measure();
        c.passed = std::isfinite(c.value) && c.value <= tolerance;
    } catch (const std::exception &e) {
        c.error = e.what();
        c.value = INFINITY;
    }
    report.checks.push_back(std::move(c));
}

double exact(bool ok) {
    return ok ? 0 : 1;
}

}  // namespace

VerifyReport run_verify(int n_min, int n_max, const VerifyTolerances &tol, Fault fault) {
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("verify: need 1 <= n-min <= n-max");
    }
    auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.n_min = n_min;
    report.n_max = n_max;

    for (int n = n_min; n <= n_max; n++) {
        const auto g = build_g(n);
        const Matrix gr = g.as_real();
        const int size = 2 * n;

        auto closed_b = [&]() -> Matrix {
            Matrix b = b_matrix(n);
            return fault == Fault::kFlipBSign ? Matrix(-b) : b;
        };
        auto closed_a = [&]() { return a_from_b(closed_b()); };

        record(report, "g_path_structure", n, 0, [&] {
            const auto &e = g.entries();
            auto deg = e.rowwise().sum();
            bool ok = e == e.transpose() && e.diagonal().sum() == 0 && e.topLeftCorner(n, n).sum() == 0 &&
                      e.bottomRightCorner(n, n).sum() == 0 && deg.maxCoeff() <= 2 &&
                      (deg.array() == 1).count() == 2 && e.sum() == 2 * (size - 1);
            return exact(ok);
        });
        record(report, "spectrum_matches_formula", n, tol.spectrum, [&] {
            auto eig = numeric_eig(gr);
            auto lambda = analytic_eigenvalues(n);
            double worst = 0;
            for (int k = 0; k < n; k++) {
                worst = std::max(worst, std::abs(eig.values[k] - lambda[k]));
                worst = std::max(worst, std::abs(eig.values[size - 1 - k] + lambda[k]));
            }
            return worst;
        });
        record(report, "s_m_st_equals_m_prime", n, 0, [&] {
            IntMatrix s = s_matrix(n);
            return exact(s * m_matrix(n) * s.transpose() == m_prime(n));
        });
        record(report, "g_commutes_with_mirror", n, 0, [&] {
            IntMatrix mirror = mirror_matrix(n);
            return exact(g.entries() * mirror == mirror * g.entries());
        });

        const auto sd = build_v(n);
        record(report, "v_orthogonal", n, tol.orthogonality,
               [&] { return max_abs_diff(sd.v.transpose() * sd.v, Matrix::Identity(size, size)); });
        record(report, "g_v_equals_v_d", n, tol.eigen_equation, [&] { return max_abs_diff(gr * sd.v, sd.v * sd.d()); });

        record(report, "b_closed_vs_sum", n, tol.b_forms, [&] { return max_abs_diff(closed_b(), b_matrix_sum(n)); });
        record(report, "a_closed_bicolorable", n, 0, [&] {
            auto a = closed_a();
            return a.entries().topLeftCorner(n, n).cwiseAbs().maxCoeff() +
                   a.entries().bottomRightCorner(n, n).cwiseAbs().maxCoeff();
        });
        record(report, "a_symmetric", n, tol.symmetry, [&] {
            auto a = closed_a();
            return max_abs_diff(a.entries(), a.entries().transpose());
        });
        record(report, "a_general_bicolorable", n, tol.bicolor_general, [&] {
            auto a = a_general(g);
            return std::max(a.entries().topLeftCorner(n, n).cwiseAbs().maxCoeff(),
                            a.entries().bottomRightCorner(n, n).cwiseAbs().maxCoeff());
        });
        record(report, "route_equivalence", n, tol.route,
               [&] { return max_abs_diff(a_general(g).entries(), closed_a().entries()); });

        for (double r : {0.5, 1.0}) {
            record(report, "purity_r" + std::string(r == 0.5 ? "0.5" : "1"), n, tol.purity, [&] {
                auto state = evolve(n, r);
                return max_abs_diff(4 * state.sigma_q * state.sigma_p, Matrix::Identity(size, size));
            });
        }
        record(report, "nullifiers_squeezed_r1", n, 0, [&] {
            auto a = closed_a();
            auto state = evolve(n, 1.0);
            double best = INFINITY;
            int passing = 0;
            for (int sign : {1, -1}) {
                double worst = nullifier_report(a, state, sign).max_variance();
                best = std::min(best, worst);
                passing += worst < 0.5;
            }
            // Exactly one rotation sign must squeeze every nullifier below vacuum.
            return passing == 1 ? 0.0 : std::max(best - 0.5, 1.0);
        });
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace opocluster::cli
