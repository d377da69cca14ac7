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

#include "opocluster/gaussian.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "opocluster/eigensolver.h"
#include "opocluster/lattice.h"
#include "opocluster/spectral.h"

namespace opocluster {

namespace {

Matrix expm_from(const EigenPairs &eig, double s) {
    Vector scaled = (eig.values * s).array().exp();
    Matrix out = eig.vectors * scaled.asDiagonal() * eig.vectors.transpose();
    return (out + out.transpose()) / 2;
}

CovarianceState evolve_from(const EigenPairs &eig, int n, double r) {
    CovarianceState state;
    state.n = n;
    state.r = r;
    state.sigma_q = expm_from(eig, 2 * r) / 2;
    state.sigma_p = expm_from(eig, -2 * r) / 2;
    return state;
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("rotation sign must be +1 or -1, got " + std::to_string(sign));
    }
}

}  // namespace

Matrix sym_expm(const Matrix &m, double s) {
    return expm_from(numeric_eig(m), s);
}

CovarianceState evolve(int n, double r) {
    require_positive_n(n, "evolve");
    if (!(r >= 0)) {
        throw std::invalid_argument("evolve: r must be >= 0");
    }
    return evolve_from(numeric_eig(build_g(n).as_real()), n, r);
}

Matrix nullifier_covariance(const ClusterAdjacency &a, const CovarianceState &state, int sign) {
    require_sign(sign);
    const int n = a.n();
    if (state.n != n || state.sigma_p.rows() != 2 * n || state.sigma_q.rows() != 2 * n) {
        throw std::invalid_argument("nullifier_covariance: adjacency and state disagree on n");
    }
    const Matrix a0 = a.a0();
    const Matrix id = Matrix::Identity(n, n);

    // Upper rail: P_u - sign * sum_b A0_ub P_b.
    Matrix upper(n, 2 * n);
    upper << id, -sign * a0;
    // Lower rail: -sign * Q_b - sum_u A0_ub Q_u.
    Matrix lower(n, 2 * n);
    lower << -a0.transpose(), -sign * id;

    Matrix cov = Matrix::Zero(2 * n, 2 * n);
    cov.topLeftCorner(n, n) = upper * state.sigma_p * upper.transpose();
    cov.bottomRightCorner(n, n) = lower * state.sigma_q * lower.transpose();
    return cov;
}

Vector nullifier_norms(const ClusterAdjacency &a) {
    return (a.entries().rowwise().squaredNorm().array() + 1).matrix();
}

double NullifierReport::max_variance() const {
    return variances.empty() ? 0 : *std::max_element(variances.begin(), variances.end());
}

NullifierReport nullifier_report(const ClusterAdjacency &a, const CovarianceState &state, int sign) {
    Matrix cov = nullifier_covariance(a, state, sign);
    Vector norms = nullifier_norms(a);
    NullifierReport report;
    report.r = state.r;
    report.rotation_sign = sign;
    for (Eigen::Index i = 0; i < cov.rows(); i++) {
        report.raw_variances.push_back(cov(i, i));
        report.variances.push_back(cov(i, i) / norms[i]);
    }
    return report;
}

int resolve_convention(int n) {
    const auto a = a_closed(n);
    const auto state = evolve(n, 1.0);
    int passing = 0;
    int chosen = 0;
    for (int sign : {1, -1}) {
        if (nullifier_report(a, state, sign).max_variance() < 0.5) {
            passing++;
            chosen = sign;
        }
    }
    if (passing != 1) {
        throw ConventionError("resolve_convention: " + std::to_string(passing) +
                              " rotation signs squeeze every nullifier at r=1 for n=" + std::to_string(n) +
                              "; expected exactly one");
    }
    return chosen;
}

DecayReport decay_report(int n, std::span<const double> r_values) {
    require_positive_n(n, "decay_report");
    for (size_t i = 0; i < r_values.size(); i++) {
        if (!(r_values[i] >= 0) || (i > 0 && !(r_values[i] > r_values[i - 1]))) {
            throw std::invalid_argument("decay_report: r values must be nonnegative and strictly increasing");
        }
    }

    DecayReport out;
    out.n = n;
    out.rotation_sign = resolve_convention(n);
    out.expected_log_slope = -2 * lambda_min(n);

    const auto a = a_closed(n);
    const auto eig = numeric_eig(build_g(n).as_real());
    for (double r : r_values) {
        auto report = nullifier_report(a, evolve_from(eig, n, r), out.rotation_sign);
        if (!out.points.empty()) {
            const auto &prev = out.points.back().variances;
            for (size_t i = 0; i < prev.size(); i++) {
                if (report.variances[i] > prev[i]) {
                    report.monotone_ok = false;
                }
            }
        }
        out.monotone = out.monotone && report.monotone_ok;
        out.points.push_back(std::move(report));
    }

    if (out.points.size() >= 2) {
        double mean_r = 0;
        double mean_y = 0;
        for (const auto &p : out.points) {
            mean_r += p.r;
            mean_y += std::log(p.max_variance());
        }
        mean_r /= out.points.size();
        mean_y /= out.points.size();
        double sxy = 0;
        double sxx = 0;
        for (const auto &p : out.points) {
            sxy += (p.r - mean_r) * (std::log(p.max_variance()) - mean_y);
            sxx += (p.r - mean_r) * (p.r - mean_r);
        }
        out.fitted_log_slope = sxy / sxx;
    }
    return out;
}

}  // namespace opocluster
