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

#include "opocluster/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace opocluster {

namespace {

double off_diagonal_mass(const Matrix &a) {
    double sum = 0;
    for (Eigen::Index q = 1; q < a.cols(); q++) {
        for (Eigen::Index p = 0; p < q; p++) {
            sum += a(p, q) * a(p, q);
        }
    }
    return 2 * sum;
}

// Zeroes a(p, q) with one plane rotation and accumulates it into v.
void rotate(Matrix &a, Matrix &v, Eigen::Index p, Eigen::Index q) {
    double apq = a(p, q);
    double theta = (a(q, q) - a(p, p)) / (2 * apq);
    double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0;
    a(q, p) = 0;
    for (Eigen::Index k = 0; k < a.rows(); k++) {
        if (k == p || k == q) {
            continue;
        }
        double akp = a(k, p);
        double akq = a(k, q);
        a(k, p) = a(p, k) = c * akp - s * akq;
        a(k, q) = a(q, k) = s * akp + c * akq;
    }
    for (Eigen::Index k = 0; k < v.rows(); k++) {
        double vkp = v(k, p);
        double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigenPairs numeric_eig(const Matrix &symmetric, int max_sweeps) {
    require_symmetric(symmetric, 1e-12, "numeric_eig");
    const Eigen::Index dim = symmetric.rows();

    Matrix a = (symmetric + symmetric.transpose()) / 2;
    Matrix v = Matrix::Identity(dim, dim);
    const double scale = a.squaredNorm();

    int sweep = 0;
    while (off_diagonal_mass(a) > 1e-30 * scale) {
        if (sweep == max_sweeps) {
            throw ConvergenceError("numeric_eig: no convergence after " + std::to_string(max_sweeps) + " sweeps");
        }
        for (Eigen::Index p = 0; p < dim; p++) {
            for (Eigen::Index q = p + 1; q < dim; q++) {
                // Entries below the smallest representable rotation effect are already converged.
                if (std::abs(a(p, q)) > 1e-300) {
                    rotate(a, v, p, q);
                }
            }
        }
        sweep++;
    }

    std::vector<Eigen::Index> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

    EigenPairs out;
    out.sweeps = sweep;
    out.values.resize(dim);
    out.vectors.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        out.values[i] = a(order[i], order[i]);
        Vector col = v.col(order[i]);
        for (Eigen::Index k = 0; k < dim; k++) {
            if (std::abs(col[k]) > 1e-12) {
                if (col[k] < 0) {
                    col = -col;
                }
                break;
            }
        }
        out.vectors.col(i) = col;
    }
    return out;
}

}  // namespace opocluster
