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

#ifndef OPOCLUSTER_SPECTRAL_H
#define OPOCLUSTER_SPECTRAL_H

#include <vector>

#include "opocluster/lattice.h"
#include "opocluster/matrix.h"

namespace opocluster {

/// lambda_k = 2|cos(k pi / (2n + 1))| for k = 1..n, descending.
std::vector<double> analytic_eigenvalues(int n);

/// Smallest positive eigenvalue of the H graph, 2 sin(pi / (2(2n + 1))).
double lambda_min(int n);

/// Unit eigenvector of m_prime(n) with eigenvalue lambda_k^2:
/// (v_k)_j = 2 / sqrt(2n + 1) * sin(k (2j - 1) pi / (2n + 1)).
Vector half_chain_eigenvector(int n, int k);

/// Tridiagonal reduction of Q Q^T: diagonal (1, 2, ..., 2), off-diagonals 1.
IntMatrix m_prime(int n);

/// Q Q^T for the upper-rail block of build_g(n).
IntMatrix m_matrix(int n);

/// Permutation with S(i, 2i - 1) = 1 while 2i - 1 <= n and
/// S(i, 2n + 2 - 2i) = 1 otherwise, so that S M S^T = M'.
IntMatrix s_matrix(int n);

/// Anti-diagonal identity, J(i, n + 1 - i) = 1.
IntMatrix j_matrix(int n);

/// [[0, J], [J, 0]]; commutes with build_g(n).
IntMatrix mirror_matrix(int n);

/// Analytic eigensystem of G with the positive block first.
struct SpectralDecomposition {
    int n = 0;
    /// (lambda_1..lambda_n, -lambda_1..-lambda_n).
    std::vector<double> eigenvalues;
    /// Orthogonal, G V = V diag(eigenvalues).
    Matrix v;

    /// For the 2n columns in the order they are first assembled
    /// (1/sqrt2)[[V11, V11], [J V11 L, -J V11 L]], the sign of the eigenvalue
    /// measured by Rayleigh quotient against G ...
    std::vector<int> constructed_signs;
    /// ... and the sign the parity rule (-1)^k for symmetric, (-1)^(k+1) for
    /// antisymmetric vectors predicts for the same column.
    std::vector<int> claimed_signs;
    /// 1-based column indices where the two disagree.
    std::vector<int> parity_discrepancies;
    /// Symmetry of each column of `v` under mirror_matrix: +1 or -1.
    std::vector<int> mirror_parity;

    Matrix v11() const { return v.topLeftCorner(n, n); }
    Matrix v12() const { return v.topRightCorner(n, n); }
    Matrix v21() const { return v.bottomLeftCorner(n, n); }
    Matrix v22() const { return v.bottomRightCorner(n, n); }
    Matrix d() const;
};

/// Assembles V from the half-chain eigenvectors, measures the sign of every
/// column and reorders so the positive block comes first. Throws
/// std::logic_error when a Rayleigh quotient is farther than 1e-8 from
/// +-lambda_k.
SpectralDecomposition build_v(int n);

}  // namespace opocluster

#endif
