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

#ifndef OPOCLUSTER_MATRIX_H
#define OPOCLUSTER_MATRIX_H

#include <Eigen/Dense>

namespace opocluster {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

/// Largest absolute entry of `a - b`. Shapes must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Throws std::invalid_argument unless `m` is square and symmetric to `tol`.
void require_symmetric(const Matrix &m, double tol, const char *what);

/// Throws std::invalid_argument when n < 1.
void require_positive_n(int n, const char *what);

}  // namespace opocluster

#endif
