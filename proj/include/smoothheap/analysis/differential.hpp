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

/** \file

  Randomized differential testing of every heap variant against OracleQueue.

  A run drives up to `max_heaps` live heaps of one variant with a random mix
  of make-heap, insert, find-min, delete-min, meld, decrease-key and delete
  over small keys (so duplicates are common), mirroring every step in one
  OracleQueue per heap.  After every operation the checker compares the
  minimum, the buffer bound of buffered variants and, for pairing variants,
  the comparisons-equal-links property of each delete-min.
 */

#pragma once

#include "smoothheap/heap_core.hpp"
#include "smoothheap/pairing_heap.hpp"
#include "smoothheap/smooth_heap.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace smoothheap::analysis {

struct HeapVariant {
    std::string name;
    bool pairing = false;
    PairingMode pairing_mode = PairingMode::kMultiTree;
    HeapConfig config{};
    TieBreak tie_break = TieBreak::kPosition;
};

/// Smooth and slim under every decrease-key and delete policy (plus a
/// node-id tie-break sample), and the three pairing modes.
std::vector<HeapVariant> all_heap_variants();

struct DifferentialOptions {
    std::size_t operations = 10000;
    std::size_t max_heaps = 8;
    std::int64_t key_range = 1000;
    std::uint64_t seed = 1;
    std::size_t validate_every = 0;  // full structural check period; 0 = never
};

struct DifferentialResult {
    bool ok = true;
    std::string failure;  // first failure, if any
    std::size_t operations = 0;
    std::size_t delete_mins = 0;
    std::size_t max_live_nodes = 0;
    std::size_t buffer_checks = 0;         // buffered variants only
    std::size_t pairing_rounds_checked = 0;  // pairing variants only
};

DifferentialResult run_differential(const HeapVariant& variant, const DifferentialOptions& options);

}  // namespace smoothheap::analysis
