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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace smoothheap::bench {

struct SelftestOptions {
    std::size_t operations = 100000;  // per heap variant
    std::size_t trace_delete_mins = 10000;
    std::size_t trace_max_nodes = 10000;
    std::uint64_t seed = 1;
};

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Differential run of every heap variant against the reference queue,
/// the traced-link sweep in both linking modes, and the exhaustive
/// treapify sweep.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& options);

/// One "PASS name: detail" / "FAIL ..." line per check; true if all pass.
bool report_selftest(std::ostream& os, const std::vector<SelftestCheck>& checks);

}  // namespace smoothheap::bench
