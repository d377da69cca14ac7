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

#ifndef OPOCLUSTER_LATTICE_H
#define OPOCLUSTER_LATTICE_H

#include <compare>
#include <iosfwd>
#include <vector>

#include "opocluster/matrix.h"

namespace opocluster {

/// Label of one downconverted qumode: frequency offset from the carrier in
/// units of the free spectral range, and the signed orbital angular momentum
/// of its Laguerre-Gaussian transverse mode.
struct ModeIndex {
    int freq_offset = 0;
    int oam = 1;
    int oam_order = 1;

    auto operator<=>(const ModeIndex &) const = default;
};
std::ostream &operator<<(std::ostream &out, const ModeIndex &mode);

/// The two pumps sit at 2w - FSR and 2w + FSR.
enum class Pump : int { kLower = -1, kUpper = 1 };

struct Coupling {
    ModeIndex first;   // always on the oam = +1 rail
    ModeIndex second;  // always on the oam = -1 rail
    Pump pump;
};

/// True when a pair of modes may be created by `pump`: frequencies add up to
/// the pump offset and the OAM numbers cancel.
bool conserves(const ModeIndex &a, const ModeIndex &b, Pump pump);

/// Every coupled pair of a contiguous 2n-mode chain, in chain order.
///
/// Upper-rail offsets run n-1, n-3, ..., -(n-1) so the chain is centered on
/// the carrier. Pump +1 couples (f, +1) with (1 - f, -1), pump -1 couples
/// (f, +1) with (-1 - f, -1). The result alternates pumps and is a single
/// path of 2n - 1 edges.
std::vector<Coupling> physical_couplings(int n);

/// The physical modes of the chain, in walk order.
std::vector<ModeIndex> physical_chain(int n);

/// Vertex sequence (1-based labels 1..2n) of the coupling path.
///
/// Labels 1..n are the upper rail, n+1..2n the lower rail. Upper labels are
/// visited odd ascending then even descending; the k-th lower label is
/// n + (n + 1 - upper[n - k]), which makes the label swap u <-> 2n + 1 - u
/// an automorphism of the path. At n = 4 this gives (1,7,3,5,4,6,2,8).
std::vector<int> chain_order(int n);

/// Symmetric 0/1 adjacency matrix of the H graph.
class CouplingMatrix {
   public:
    explicit CouplingMatrix(int n);

    int n() const { return n_; }
    int size() const { return 2 * n_; }
    const IntMatrix &entries() const { return entries_; }
    Matrix as_real() const { return entries_.cast<double>(); }
    /// Upper-right n x n block (rows: upper rail, columns: lower rail).
    IntMatrix q_block() const { return entries_.topRightCorner(n_, n_); }

    int operator()(int row, int col) const { return entries_(row, col); }

   private:
    int n_;
    IntMatrix entries_;
};

CouplingMatrix build_g(int n);

}  // namespace opocluster

#endif
