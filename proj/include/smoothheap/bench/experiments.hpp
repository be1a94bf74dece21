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

#include "smoothheap/bench/results.hpp"
#include "smoothheap/workloads/runners.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smoothheap::bench {

enum class SortFamily : std::uint8_t { kUniform, kSeparable, kLocalized, kBlocks };
enum class GraphFamily : std::uint8_t { kErdosRenyi, kRegular };

std::optional<SortFamily> parse_sort_family(std::string_view name) noexcept;
std::optional<GraphFamily> parse_graph_family(std::string_view name) noexcept;
std::string_view family_name(SortFamily f) noexcept;   // "uniform", ...
std::string_view family_name(GraphFamily f) noexcept;  // "er", "regular"
std::string experiment_name(SortFamily f);             // "sort-uniform", ...
std::string experiment_name(GraphFamily f);            // "dijkstra-er", ...

std::size_t default_trials(SortFamily f) noexcept;
inline constexpr std::size_t kDefaultDijkstraTrials = 10;
inline constexpr std::uint32_t kDefaultDegree = 10;

/// Parameter list used when none is given: {0.15} for localized, {2000}
/// for blocks, {0} otherwise.
std::vector<double> default_params(SortFamily f);

std::vector<workloads::HeapKind> all_heap_kinds();

struct SortBenchOptions {
    SortFamily family = SortFamily::kUniform;
    std::vector<workloads::HeapKind> heaps;
    std::vector<std::uint64_t> sizes;
    std::vector<double> params;  // epsilon (localized) or B (blocks); ignored otherwise
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

/// Trial t uses seed + t; every heap sorts the same input.  Rows come back
/// in canonical order.
std::vector<ResultRow> run_sort_bench(const SortBenchOptions& options);

struct DijkstraBenchOptions {
    GraphFamily family = GraphFamily::kErdosRenyi;
    std::vector<workloads::HeapKind> heaps;
    std::vector<std::uint64_t> sizes;
    std::vector<double> probabilities{1.0};  // Erdos-Renyi only
    std::uint32_t degree = kDefaultDegree;   // regular only
    std::size_t trials = kDefaultDijkstraTrials;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

/// Single-source from vertex 0; counters cover delete-min only.  Regular
/// graph rows carry param 0.
std::vector<ResultRow> run_dijkstra_bench(const DijkstraBenchOptions& options);

}  // namespace smoothheap::bench
