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

#include "opocluster/matrix.h"

#include <stdexcept>
#include <string>

namespace opocluster {

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

void require_symmetric(const Matrix &m, double tol, const char *what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix is not square");
    }
    if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument(std::string(what) + ": matrix is not symmetric");
    }
}

void require_positive_n(int n, const char *what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
    }
}

}  // namespace opocluster
