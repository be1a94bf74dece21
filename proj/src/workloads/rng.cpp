// Copyright 2026 The smoothheap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smoothheap/workloads/rng.hpp"

#include <cmath>
#include <numbers>

namespace smoothheap::workloads {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    // Rejection on the top of the range keeps the result exactly uniform.
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
        const std::uint64_t x = (*this)();
        if (x < limit) return x % bound;
    }
}

double SplitMix64::normal() noexcept {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace smoothheap::workloads
