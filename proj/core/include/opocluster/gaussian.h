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

#ifndef OPOCLUSTER_GAUSSIAN_H
#define OPOCLUSTER_GAUSSIAN_H

#include <optional>
#include <span>
#include <vector>

#include "opocluster/cluster.h"
#include "opocluster/matrix.h"

namespace opocluster {

/// exp(s * m) for symmetric `m`, through numeric_eig.
Matrix sym_expm(const Matrix &m, double s);

/// Quadrature covariance of the chain after interaction strength r = xi * t,
/// with hbar = 1 and vacuum variance 1/2. Q and P sectors are uncorrelated.
struct CovarianceState {
    int n = 0;
    double r = 0;
    Matrix sigma_q;  // exp(2 G r) / 2
    Matrix sigma_p;  // exp(-2 G r) / 2
};

/// Heisenberg evolution Q(t) = exp(G r) Q(0), P(t) = exp(-G r) P(0) of the
/// vacuum. Throws std::invalid_argument for r < 0.
CovarianceState evolve(int n, double r);

/// Cov(P' - A Q') where the lower rail (labels n+1..2n) is Fourier rotated,
/// Q'_b = sign * P_b and P'_b = -sign * Q_b. Rows 1..n are P combinations,
/// rows n+1..2n are Q combinations.
Matrix nullifier_covariance(const ClusterAdjacency &a, const CovarianceState &state, int sign);

/// Squared norm of every nullifier's coefficient vector, 1 + sum_k A_jk^2.
Vector nullifier_norms(const ClusterAdjacency &a);

struct NullifierReport {
    double r = 0;
    /// Variance of each unit-normalized nullifier; vacuum is 1/2.
    std::vector<double> variances;
    /// Diagonal of nullifier_covariance.
    std::vector<double> raw_variances;
    int rotation_sign = 1;
    /// Every variance is no larger than at the previous r of a series.
    bool monotone_ok = true;

    double max_variance() const;
};

NullifierReport nullifier_report(const ClusterAdjacency &a, const CovarianceState &state, int sign);

struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Picks the rotation sign whose nullifiers are all squeezed at r = 1 for
/// a_closed(n). Throws ConventionError unless exactly one sign passes.
int resolve_convention(int n);

struct DecayReport {
    int n = 0;
    int rotation_sign = 1;
    std::vector<NullifierReport> points;
    bool monotone = true;
    /// Least-squares slope of log(max variance) against r. Needs two points.
    std::optional<double> fitted_log_slope;
    /// -2 * lambda_min(n).
    double expected_log_slope = 0;
};

/// Nullifier reports along `r_values` (strictly increasing, nonnegative).
DecayReport decay_report(int n, std::span<const double> r_values);

}  // namespace opocluster

#endif
