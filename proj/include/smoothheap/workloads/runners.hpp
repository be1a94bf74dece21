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
#include "smoothheap/workloads/generators.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smoothheap::workloads {

enum class HeapKind : std::uint8_t { kSmooth, kSlim, kPairing, kPairingClassic, kPairingPure };

/// "smooth", "slim", "pairing" (multi-tree), "pairing-classic", "pairing-pure".
std::string_view heap_kind_name(HeapKind kind) noexcept;
std::optional<HeapKind> parse_heap_kind(std::string_view name) noexcept;
bool is_pairing(HeapKind kind) noexcept;

struct SortStats {
    Counters counters;
    std::uint64_t delete_mins = 0;
    std::uint64_t combined_roots = 0;  // sum of roots entering each consolidation
    std::uint64_t consolidations = 0;  // consolidations with at least one root
    std::uint64_t max_comparisons_per_link_round = 0;
    bool comparisons_equal_links_each_round = true;
};

class InvariantFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Loads the permutation as a root list (no links), performs n delete-mins
/// and checks the output is 1..n ascending.  Counters cover the whole run.
SortStats run_sorting(HeapKind kind, const Permutation& perm);

/// Same, for arbitrary keys with duplicates; returns the popped keys.
std::vector<std::int64_t> sort_keys(HeapKind kind, const std::vector<std::int64_t>& keys, Counters* counters = nullptr);

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

struct DijkstraResult {
    std::vector<std::int64_t> distances;
    Counters counters;  // delete-min calls only
};

/// Dijkstra with lazy insertion at the end of the root list and the simple
/// decrease-key.  Counters accumulate only inside delete-min.
DijkstraResult run_dijkstra(HeapKind kind, const WeightedGraph& g, std::uint32_t source);

}  // namespace smoothheap::workloads
