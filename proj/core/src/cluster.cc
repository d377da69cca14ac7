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

#include "opocluster/cluster.h"

#include <cmath>
#include <numbers>
#include <string>

#include "opocluster/eigensolver.h"
#include "opocluster/spectral.h"

namespace opocluster {

ClusterAdjacency::ClusterAdjacency(int n, Matrix entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.rows() != 2 * n || entries_.cols() != 2 * n) {
        throw std::invalid_argument("ClusterAdjacency: expected a " + std::to_string(2 * n) + "x" +
                                    std::to_string(2 * n) + " matrix");
    }
}

Matrix b_matrix_sum(int n) {
    require_positive_n(n, "b_matrix_sum");
    const double step = std::numbers::pi / (2 * n + 1);
    Matrix b = Matrix::Zero(n, n);
    for (int i = 1; i <= n; i++) {
        for (int j = 1; j <= n; j++) {
            double sum = 0;
            for (int k = 1; k <= n; k++) {
                double sign = (k % 2 == 0) ? 1 : -1;
                sum += sign * std::sin(k * (2 * i - 1) * step) * std::sin(k * (2 * j - 1) * step);
            }
            b(i - 1, j - 1) = 4.0 / (1 + 2 * n) * sum;
        }
    }
    return b;
}

Matrix b_matrix(int n) {
    require_positive_n(n, "b_matrix");
    const double step = std::numbers::pi / (1 + 2 * n);
    Matrix b(n, n);
    for (int i = 1; i <= n; i++) {
        for (int j = 1; j <= n; j++) {
            double sign = ((i + j + n) % 2 == 0) ? 1 : -1;
            b(i - 1, j - 1) = sign / (1 + 2 * n) * (1 / std::cos((i - j) * step) + 1 / std::cos((i + j - 1) * step));
        }
    }
    double deviation = max_abs_diff(b, b_matrix_sum(n));
    if (deviation > 1e-10) {
        throw std::logic_error("b_matrix: closed and summed forms differ by " + std::to_string(deviation));
    }
    return b;
}

ClusterAdjacency a_from_b(const Matrix &b) {
    if (b.rows() != b.cols() || b.rows() < 1) {
        throw std::invalid_argument("a_from_b: B must be square and non-empty");
    }
    const int n = static_cast<int>(b.rows());
    const Matrix s = s_matrix(n).cast<double>();
    const Matrix j = j_matrix(n).cast<double>();
    Matrix a = Matrix::Zero(2 * n, 2 * n);
    a.topRightCorner(n, n) = s.transpose() * b.transpose() * s * j;
    a.bottomLeftCorner(n, n) = j * s.transpose() * b * s;
    return ClusterAdjacency(n, std::move(a));
}

ClusterAdjacency a_closed(int n) {
    return a_from_b(b_matrix(n));
}

ClusterAdjacency a_general(const Matrix &g, SignConvention convention) {
    if (g.rows() % 2 != 0 || g.rows() == 0) {
        throw std::invalid_argument("a_general: G must have even, nonzero dimension");
    }
    const int n = static_cast<int>(g.rows() / 2);
    auto eig = numeric_eig(g);

    // Descending order puts the positive block first already; check the split.
    if (!(eig.values[n - 1] > 0 && eig.values[n] < 0)) {
        throw DegenerateBasisError("a_general: spectrum does not split into " + std::to_string(n) +
                                   " positive and negative eigenvalues; use the structured build_v basis");
    }
    Matrix v = eig.vectors;
    if (convention == SignConvention::kPaper) {
        v.leftCols(n).swap(v.rightCols(n));
    }
    const Matrix v12 = v.topRightCorner(n, n);
    const Matrix v22 = v.bottomRightCorner(n, n);

    // A0 = -V12 V22^{-1}  <=>  V22^T A0^T = -V12^T.
    Eigen::PartialPivLU<Matrix> lu(v22.transpose());
    double rcond = lu.rcond();
    if (!(rcond > 1e-12)) {
        throw DegenerateBasisError("a_general: V22 condition number ~" + std::to_string(1 / rcond) +
                                   " exceeds 1e12; re-run with the structured build_v basis");
    }
    Matrix a0 = -lu.solve(v12.transpose()).transpose();

    Matrix a = Matrix::Zero(2 * n, 2 * n);
    a.topRightCorner(n, n) = a0;
    a.bottomLeftCorner(n, n) = a0.transpose();
    return ClusterAdjacency(n, std::move(a));
}

ClusterAdjacency a_general(const CouplingMatrix &g, SignConvention convention) {
    return a_general(g.as_real(), convention);
}

}  // namespace opocluster
