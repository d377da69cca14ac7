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

#include "opocluster/lattice.h"

#include <ostream>

namespace opocluster {

std::ostream &operator<<(std::ostream &out, const ModeIndex &mode) {
    return out << "(" << mode.freq_offset << "," << (mode.oam > 0 ? "+" : "") << mode.oam << ")";
}

bool conserves(const ModeIndex &a, const ModeIndex &b, Pump pump) {
    return a.freq_offset + b.freq_offset == static_cast<int>(pump) && a.oam + b.oam == 0;
}

std::vector<ModeIndex> physical_chain(int n) {
    require_positive_n(n, "physical_chain");
    std::vector<ModeIndex> chain;
    chain.reserve(2 * n);
    int upper = n - 1;
    for (int i = 0; i < n; i++) {
        ModeIndex up{upper, +1, 1};
        ModeIndex down{static_cast<int>(Pump::kUpper) - upper, -1, 1};
        chain.push_back(up);
        chain.push_back(down);
        // The lower-frequency pump links `down` to the next upper-rail mode.
        upper = static_cast<int>(Pump::kLower) - down.freq_offset;
    }
    return chain;
}

std::vector<Coupling> physical_couplings(int n) {
    auto chain = physical_chain(n);
    std::vector<Coupling> out;
    out.reserve(chain.size() - 1);
    for (size_t k = 0; k + 1 < chain.size(); k++) {
        const auto &a = chain[k];
        const auto &b = chain[k + 1];
        Pump pump = (k % 2 == 0) ? Pump::kUpper : Pump::kLower;
        if (a.oam > 0) {
            out.push_back({a, b, pump});
        } else {
            out.push_back({b, a, pump});
        }
    }
    return out;
}

std::vector<int> chain_order(int n) {
    require_positive_n(n, "chain_order");
    std::vector<int> upper;
    upper.reserve(n);
    for (int u = 1; u <= n; u += 2) {
        upper.push_back(u);
    }
    for (int u = (n % 2 == 0) ? n : n - 1; u >= 2; u -= 2) {
        upper.push_back(u);
    }

    std::vector<int> seq;
    seq.reserve(2 * n);
    for (int k = 1; k <= n; k++) {
        int lower = n + 1 - upper[n - k];
        seq.push_back(upper[k - 1]);
        seq.push_back(n + lower);
    }
    return seq;
}

CouplingMatrix::CouplingMatrix(int n) : n_(n), entries_(IntMatrix::Zero(2 * n, 2 * n)) {
    auto seq = chain_order(n);
    for (size_t k = 0; k + 1 < seq.size(); k++) {
        int a = seq[k] - 1;
        int b = seq[k + 1] - 1;
        entries_(a, b) = 1;
        entries_(b, a) = 1;
    }
}

CouplingMatrix build_g(int n) {
    require_positive_n(n, "build_g");
    return CouplingMatrix(n);
}

}  // namespace opocluster
