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

#include "smoothheap/heap_core.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace smoothheap::analysis {

/// Treapifies fresh nodes with the given keys and checks the traced tree
/// against the reference treap, the link and comparison counts, and the
/// child placement of the linking mode.  Returns "" on success.
std::string check_treapify_round(std::span<const std::int64_t> keys, Linking linking,
                                 TieBreak tie = TieBreak::kPosition);

struct SweepResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// Every permutation of 1..k for k <= max_distinct, and every sequence of
/// length <= max_dup_length over {1..alphabet}, in both linking modes.
SweepResult exhaustive_treapify_sweep(std::size_t max_distinct = 8, std::size_t max_dup_length = 6,
                                      std::int64_t alphabet = 3);

struct LinkTraceResult {
    std::size_t delete_mins = 0;
    std::size_t failures = 0;
    std::size_t max_roots = 0;  // largest root list combined
    std::size_t max_heap_size = 0;
};

/// Random inserts, decrease-keys and delete-mins on one heap of at most
/// `max_nodes` nodes; every delete-min's link trace is checked.
LinkTraceResult link_trace_sweep(Linking linking, std::size_t delete_mins, std::size_t max_nodes, std::uint64_t seed);

}  // namespace smoothheap::analysis
