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

#ifndef OPOCLUSTER_EIGENSOLVER_H
#define OPOCLUSTER_EIGENSOLVER_H

#include <stdexcept>

#include "opocluster/matrix.h"

namespace opocluster {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenPairs {
    Vector values;   // descending
    Matrix vectors;  // column i pairs with values[i]
    int sweeps = 0;
};

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Columns are ordered by descending eigenvalue and each is sign-normalized
/// so its first component with magnitude above 1e-12 is positive, which makes
/// the output bit-reproducible for a given input. Throws std::invalid_argument
/// for non-symmetric input (tolerance 1e-12) and ConvergenceError when the
/// off-diagonal mass has not vanished after `max_sweeps`.
EigenPairs numeric_eig(const Matrix &symmetric, int max_sweeps = 64);

}  // namespace opocluster

#endif
