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

#ifndef OPOCLUSTER_CLUSTER_H
#define OPOCLUSTER_CLUSTER_H

#include <stdexcept>

#include "opocluster/lattice.h"
#include "opocluster/matrix.h"

namespace opocluster {

/// Raised when the negative-block eigenvector matrix cannot be inverted
/// reliably.
struct DegenerateBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weighted adjacency matrix of the canonical cluster graph. Both diagonal
/// n x n blocks are zero; the graph is bicolored by the two OAM rails.
class ClusterAdjacency {
   public:
    ClusterAdjacency(int n, Matrix entries);

    int n() const { return n_; }
    int size() const { return 2 * n_; }
    const Matrix &entries() const { return entries_; }
    /// Upper-right block A0.
    Matrix a0() const { return entries_.topRightCorner(n_, n_); }

    double operator()(int row, int col) const { return entries_(row, col); }

   private:
    int n_;
    Matrix entries_;
};

/// Closed form
///   B_ij = (-1)^(i+j+n) / (1 + 2n) * [sec((i-j) pi / (1+2n)) + sec((i+j-1) pi / (1+2n))].
/// Cross-checked against b_matrix_sum; throws std::logic_error if the two
/// disagree by more than 1e-10 anywhere.
Matrix b_matrix(int n);

/// Sum over the half-chain eigenvectors, B = sum_k (-1)^k v_k v_k^T, i.e.
///   B_ij = 4 / (1 + 2n) * sum_k (-1)^k sin(k(2i-1)pi/(2n+1)) sin(k(2j-1)pi/(2n+1)).
/// This is the sign for which S^T B^T S J = V11 L V11^T J holds; a -4 prefactor
/// yields exactly -B.
Matrix b_matrix_sum(int n);

/// A = [[0, S^T B^T S J], [J S^T B S, 0]] for an arbitrary n x n `b`.
ClusterAdjacency a_from_b(const Matrix &b);

ClusterAdjacency a_closed(int n);

/// Which eigenvalue block of V fills the first n columns before splitting.
///
/// kPaper puts the negative block first. That is the arrangement the
/// symmetric/antisymmetric parity labels yield in practice for the chain
/// labeling of build_g, and it reproduces a_closed exactly. kPositiveFirst
/// is the textbook ordering and returns -a_closed.
enum class SignConvention { kPaper, kPositiveFirst };

/// General route: diagonalize `g` with numeric_eig, split into eigenvalue
/// blocks, and return A0 = -V12 V22^{-1} via an LU solve (no explicit
/// inverse). Throws DegenerateBasisError when V22 has condition number above
/// 1e12 or `g` does not split into n positive and n negative eigenvalues.
ClusterAdjacency a_general(const Matrix &g, SignConvention convention = SignConvention::kPaper);
ClusterAdjacency a_general(const CouplingMatrix &g, SignConvention convention = SignConvention::kPaper);

}  // namespace opocluster

#endif
