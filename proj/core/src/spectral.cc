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

#include "opocluster/spectral.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opocluster {

std::vector<double> analytic_eigenvalues(int n) {
    require_positive_n(n, "analytic_eigenvalues");
    std::vector<double> out;
    out.reserve(n);
    for (int k = 1; k <= n; k++) {
        out.push_back(2 * std::abs(std::cos(k * std::numbers::pi / (2 * n + 1))));
    }
    return out;
}

double lambda_min(int n) {
    require_positive_n(n, "lambda_min");
    return 2 * std::sin(std::numbers::pi / (2.0 * (2 * n + 1)));
}

Vector half_chain_eigenvector(int n, int k) {
    require_positive_n(n, "half_chain_eigenvector");
    if (k < 1 || k > n) {
        throw std::invalid_argument("half_chain_eigenvector: k=" + std::to_string(k) + " outside 1.." +
                                    std::to_string(n));
    }
    const double norm = 2 / std::sqrt(2.0 * n + 1);
    Vector v(n);
    for (int j = 1; j <= n; j++) {
        v[j - 1] = norm * std::sin(k * (2 * j - 1) * std::numbers::pi / (2 * n + 1));
    }
    return v;
}

IntMatrix m_prime(int n) {
    require_positive_n(n, "m_prime");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; i++) {
        m(i, i) = (i == 0) ? 1 : 2;
        if (i + 1 < n) {
            m(i, i + 1) = 1;
            m(i + 1, i) = 1;
        }
    }
    return m;
}

IntMatrix m_matrix(int n) {
    IntMatrix q = build_g(n).q_block();
    return q * q.transpose();
}

IntMatrix s_matrix(int n) {
    require_positive_n(n, "s_matrix");
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 1; i <= n; i++) {
        int col = (2 * i - 1 <= n) ? 2 * i - 1 : 2 * n + 2 - 2 * i;
        s(i - 1, col - 1) = 1;
    }
    return s;
}

IntMatrix j_matrix(int n) {
    require_positive_n(n, "j_matrix");
    IntMatrix j = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; i++) {
        j(i, n - 1 - i) = 1;
    }
    return j;
}

IntMatrix mirror_matrix(int n) {
    IntMatrix j = j_matrix(n);
    IntMatrix out = IntMatrix::Zero(2 * n, 2 * n);
    out.topRightCorner(n, n) = j;
    out.bottomLeftCorner(n, n) = j;
    return out;
}

Matrix SpectralDecomposition::d() const {
    Vector diag(eigenvalues.size());
    for (size_t i = 0; i < eigenvalues.size(); i++) {
        diag[i] = eigenvalues[i];
    }
    return diag.asDiagonal();
}

SpectralDecomposition build_v(int n) {
    require_positive_n(n, "build_v");
    const Matrix g = build_g(n).as_real();
    const Matrix s = s_matrix(n).cast<double>();
    const Matrix j = j_matrix(n).cast<double>();
    const auto lambda = analytic_eigenvalues(n);

    Matrix v11(n, n);
    for (int k = 1; k <= n; k++) {
        v11.col(k - 1) = s.transpose() * half_chain_eigenvector(n, k);
    }
    Vector l(n);
    for (int k = 1; k <= n; k++) {
        l[k - 1] = (k % 2 == 0) ? 1 : -1;
    }
    const Matrix jv11l = j * v11 * l.asDiagonal();

    Matrix assembled(2 * n, 2 * n);
    assembled << v11, v11, jv11l, -jv11l;
    assembled /= std::sqrt(2.0);

    SpectralDecomposition out;
    out.n = n;
    out.v.resize(2 * n, 2 * n);
    out.eigenvalues.resize(2 * n);
    out.constructed_signs.resize(2 * n);
    out.claimed_signs.resize(2 * n);

    for (int col = 0; col < 2 * n; col++) {
        const int k = col % n + 1;
        // Column k of the first block is symmetric under the mirror when
        // L_kk = +1 (k even); the second block carries the opposite parity.
        const bool symmetric = (k % 2 == 0) == (col < n);
        const int parity_claim = (k % 2 == 0) ? 1 : -1;  // (-1)^k
        out.claimed_signs[col] = symmetric ? parity_claim : -parity_claim;

        Vector x = assembled.col(col);
        double rayleigh = x.dot(g * x);
        double target = lambda[k - 1];
        if (std::abs(std::abs(rayleigh) - target) > 1e-8) {
            throw std::logic_error("build_v: Rayleigh quotient " + std::to_string(rayleigh) + " for k=" +
                                   std::to_string(k) + " is not +-" + std::to_string(target));
        }
        int sign = rayleigh > 0 ? 1 : -1;
        out.constructed_signs[col] = sign;
        if (sign != out.claimed_signs[col]) {
            out.parity_discrepancies.push_back(col + 1);
        }

        int dest = (sign > 0) ? k - 1 : n + k - 1;
        out.v.col(dest) = x;
        out.eigenvalues[dest] = sign * target;
    }

    const Matrix mirror = mirror_matrix(n).cast<double>();
    out.mirror_parity.resize(2 * n);
    for (int col = 0; col < 2 * n; col++) {
        out.mirror_parity[col] = out.v.col(col).dot(mirror * out.v.col(col)) > 0 ? 1 : -1;
    }
    return out;
}

}  // namespace opocluster
