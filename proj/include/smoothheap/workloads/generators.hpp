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

  Seeded input families for the sorting and shortest-path experiments.
  Every generator is a pure function of its parameters and seed.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace smoothheap::workloads {

/// A bijection on 1..n, stored in sequence order.
struct Permutation {
    std::vector<std::uint32_t> elements;

    std::size_t size() const noexcept { return elements.size(); }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

bool is_permutation(const Permutation& p);

Permutation gen_uniform(std::size_t n, std::uint64_t seed);

/// Reverse with probability 1/2, then recurse on the halves
/// (first half floor(n/2) long).
Permutation gen_separable(std::size_t n, std::uint64_t seed);

/// Element i is drawn from Normal(i, (epsilon * n)^2); the output gives each
/// position's rank among the drawn values (ties by position).
Permutation gen_localized(std::size_t n, double epsilon, std::uint64_t seed);

struct SortedBlocks {
    Permutation permutation;
    std::vector<std::size_t> block_starts;  // ascending, first is 0
};

/// A uniform permutation whose consecutive blocks (lengths uniform in
/// [1, max_block], last one truncated) are each sorted ascending.
SortedBlocks gen_sorted_blocks_with_boundaries(std::size_t n, std::size_t max_block, std::uint64_t seed);
Permutation gen_sorted_blocks(std::size_t n, std::size_t max_block, std::uint64_t seed);

/// True if `p` contains the pattern given as a permutation of 1..k.
bool contains_pattern(const Permutation& p, const std::vector<std::uint32_t>& pattern);

inline constexpr std::uint32_t kMinWeight = 1;
inline constexpr std::uint32_t kMaxWeight = 10000;

struct Edge {
    std::uint32_t to = 0;
    std::uint32_t weight = 0;
};

/// Undirected simple graph; every edge appears in both adjacency lists.
struct WeightedGraph {
    std::uint32_t n = 0;
    std::vector<std::vector<Edge>> adjacency;

    std::size_t edge_count() const noexcept;
};

class InfeasibleParametersError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

WeightedGraph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

/// Random simple d-regular graph (Steger-Wormald pairing with restarts).
WeightedGraph gen_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

/// One integer per line.
void write_permutation(std::ostream& os, const Permutation& p);
/// "n m" header, then "u v w" per undirected edge with u < v (0-based).
void write_graph(std::ostream& os, const WeightedGraph& g);

}  // namespace smoothheap::workloads
