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

#include "gtest/gtest.h"
#include "opocluster/spectral.h"
#include "oracles.h"

using namespace opocluster;

TEST(cluster, b_two_modes) {
    Matrix b = b_matrix(1);
    EXPECT_NEAR(b(0, 0), -1.0, 1e-15);
}

TEST(cluster, b_eight_modes_corner) {
    // (-1)^(1+1+4) / 9 * (1 + sec(pi/9)).
    EXPECT_NEAR(b_matrix(4)(0, 0), 0.2293530858306569, 1e-15);
}

TEST(cluster, b_closed_and_sum_forms_agree) {
    for (int n = 1; n <= 30; n++) {
        EXPECT_LE(max_abs_diff(b_matrix(n), b_matrix_sum(n)), 1e-12) << "n=" << n;
    }
}

TEST(cluster, b_sum_is_eigenvector_outer_product) {
    // B = sum_k (-1)^k v_k v_k^T; a -4/(1+2n) prefactor on the sine sum would give -B.
    for (int n : {1, 2, 5, 9}) {
        Matrix outer = Matrix::Zero(n, n);
        for (int k = 1; k <= n; k++) {
            Vector v = half_chain_eigenvector(n, k);
            outer += (k % 2 == 0 ? 1.0 : -1.0) * v * v.transpose();
        }
        EXPECT_LE(max_abs_diff(outer, b_matrix(n)), 1e-12);
        EXPECT_LE(max_abs_diff(-outer, -b_matrix_sum(n)), 1e-12);
    }
}

TEST(cluster, a_closed_two_modes) {
    Matrix expected(2, 2);
    expected << 0, -1, -1, 0;
    EXPECT_LE(max_abs_diff(a_closed(1).entries(), expected), 1e-15);
}

TEST(cluster, a_closed_eight_modes_matches_frozen_lapack_value) {
    EXPECT_LE(max_abs_diff(a_closed(4).a0(), oracles::frozen_a0_n4()), 1e-12);
}

TEST(cluster, a_closed_invariants_property) {
    for (int n = 1; n <= 40; n++) {
        auto a = a_closed(n);
        const Matrix &e = a.entries();
        EXPECT_LE(max_abs_diff(e, e.transpose()), 1e-10);
        EXPECT_EQ(e.topLeftCorner(n, n).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ(e.bottomRightCorner(n, n).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(cluster, a_closed_equals_eigenvector_form) {
    // V11 L V11^T J with V11 = S^T (v_1 .. v_n).
    for (int n : {1, 3, 4, 10}) {
        const Matrix s = s_matrix(n).cast<double>();
        const Matrix j = j_matrix(n).cast<double>();
        Matrix w(n, n);
        Vector l(n);
        for (int k = 1; k <= n; k++) {
            w.col(k - 1) = half_chain_eigenvector(n, k);
            l[k - 1] = k % 2 == 0 ? 1 : -1;
        }
        Matrix v11 = s.transpose() * w;
        EXPECT_LE(max_abs_diff(v11 * l.asDiagonal() * v11.transpose() * j, a_closed(n).a0()), 1e-12);
    }
}

TEST(cluster, a_general_two_modes) {
    Matrix expected(2, 2);
    expected << 0, -1, -1, 0;
    EXPECT_LE(max_abs_diff(a_general(build_g(1)).entries(), expected), 1e-12);
    EXPECT_LE(max_abs_diff(a_general(build_g(1), SignConvention::kPositiveFirst).entries(), -expected), 1e-12);
}

TEST(cluster, route_equivalence) {
    for (int n = 1; n <= 30; n++) {
        auto general = a_general(build_g(n));
        EXPECT_LE(max_abs_diff(general.entries(), a_closed(n).entries()), 1e-8) << "n=" << n;
        const Matrix &e = general.entries();
        EXPECT_LE(e.topLeftCorner(n, n).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE(e.bottomRightCorner(n, n).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE(max_abs_diff(e, e.transpose()), 1e-10);
    }
}

TEST(cluster, a_general_from_structured_basis_agrees) {
    // Same split, but with the analytic eigenvectors instead of Jacobi's.
    for (int n : {2, 5, 12}) {
        auto sd = build_v(n);
        // Swapping blocks makes V12 = v11 and V22 = v21; v21^T v21 = I/2.
        Matrix a0 = -2 * sd.v11() * sd.v21().transpose();
        Matrix via_solve = -sd.v11() * sd.v21().inverse();
        EXPECT_LE(max_abs_diff(a0, a_closed(n).a0()), 1e-10);
        EXPECT_LE(max_abs_diff(via_solve, a_closed(n).a0()), 1e-10);
    }
}

TEST(cluster, a_general_rejects_degenerate_input) {
    EXPECT_THROW(a_general(Matrix::Zero(4, 4)), DegenerateBasisError);
    EXPECT_THROW(a_general(Matrix::Zero(3, 3)), std::invalid_argument);
}

TEST(cluster, weight_range_sixty_modes) {
    auto a = a_closed(30);
    double lo = 1e300;
    double hi = 0;
    for (int i = 0; i < 60; i++) {
        for (int j = 0; j < 60; j++) {
            double w = std::abs(a(i, j));
            if (w > 0) {
                lo = std::min(lo, w);
                hi = std::max(hi, w);
            }
        }
    }
    EXPECT_GE(lo, 1e-5);
    EXPECT_LE(lo, 1e-3);
    EXPECT_GE(hi, 0.3);
    EXPECT_LE(hi, 3);
}

TEST(cluster, skew_diagonals_dominate) {
    const int n = 30;
    Matrix a0 = a_closed(n).a0();
    for (int i = 0; i < n; i++) {
        Eigen::Index j;
        a0.row(i).cwiseAbs().maxCoeff(&j);
        int anti = (i + 1) + (static_cast<int>(j) + 1);
        EXPECT_TRUE(anti == n || anti == n + 2) << "row " << i + 1 << " peaks at column " << j + 1;
    }
}

TEST(cluster, not_an_involution) {
    for (int n : {1, 2, 4, 30}) {
        IntMatrix g = build_g(n).entries();
        bool involution = (g * g == IntMatrix::Identity(2 * n, 2 * n));
        EXPECT_EQ(involution, n == 1) << "n=" << n;
    }
    // Only the two-mode chain is an involution, and there A = -G.
    EXPECT_LE(max_abs_diff(a_closed(1).entries(), -build_g(1).as_real()), 1e-15);
    EXPECT_GT(max_abs_diff(a_closed(4).entries(), build_g(4).as_real()), 0.1);
}
