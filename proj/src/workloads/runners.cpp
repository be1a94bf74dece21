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

#include "smoothheap/workloads/runners.hpp"

#include "smoothheap/pairing_heap.hpp"
#include "smoothheap/smooth_heap.hpp"

#include <array>
#include <utility>

namespace smoothheap::workloads {

namespace {

using Collection = HeapCollection<std::int64_t>;

constexpr std::array<std::pair<HeapKind, std::string_view>, 5> kNames{{
    {HeapKind::kSmooth, "smooth"},
    {HeapKind::kSlim, "slim"},
    {HeapKind::kPairing, "pairing"},
    {HeapKind::kPairingClassic, "pairing-classic"},
    {HeapKind::kPairingPure, "pairing-pure"},
}};

PairingMode pairing_mode(HeapKind kind) {
    switch (kind) {
        case HeapKind::kPairingClassic: return PairingMode::kClassicSingleTree;
        case HeapKind::kPairingPure: return PairingMode::kPure;
        default: return PairingMode::kMultiTree;
    }
}

// Calls f with a freshly constructed heap of the requested kind.
template <class F>
decltype(auto) with_heap(HeapKind kind, Collection& c, F&& f) {
    if (is_pairing(kind)) {
        PairingHeap<std::int64_t> h(c, pairing_mode(kind));
        return f(h);
    }
    SmoothHeap<std::int64_t> h(c, kind == HeapKind::kSmooth ? smooth_config() : slim_config());
    return f(h);
}

}  // namespace

std::string_view heap_kind_name(HeapKind kind) noexcept {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<HeapKind> parse_heap_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool is_pairing(HeapKind kind) noexcept {
    return kind == HeapKind::kPairing || kind == HeapKind::kPairingClassic || kind == HeapKind::kPairingPure;
}

SortStats run_sorting(HeapKind kind, const Permutation& perm) {
    Collection c;
    SortStats stats;
    with_heap(kind, c, [&](auto& heap) {
        std::vector<NodeHandle> nodes;
        nodes.reserve(perm.size());
        for (std::uint32_t v : perm.elements) nodes.push_back(c.create(v));

        auto account = [&](const Counters& before) {
            const Counters d = c.counters() - before;
            const std::size_t k = heap.last_consolidation_roots();
            if (k > 0) {
                stats.combined_roots += k;
                ++stats.consolidations;
            }
            stats.max_comparisons_per_link_round = std::max<std::uint64_t>(stats.max_comparisons_per_link_round, d.comparisons);
            if (d.comparisons != d.links) stats.comparisons_equal_links_each_round = false;
        };

        Counters before = c.counters();
        heap.load_sorting_input(nodes);
        account(before);
        for (std::uint32_t expect = 1; expect <= perm.size(); ++expect) {
            before = c.counters();
            const NodeHandle h = heap.delete_min();
            account(before);
            ++stats.delete_mins;
            if (c.key(h) != expect) throw InvariantFailure("sorting produced out-of-order output");
        }
        if (!heap.empty()) throw InvariantFailure("heap not empty after sorting");
    });
    stats.counters = c.counters();
    return stats;
}

std::vector<std::int64_t> sort_keys(HeapKind kind, const std::vector<std::int64_t>& keys, Counters* counters) {
    Collection c;
    std::vector<std::int64_t> out;
    out.reserve(keys.size());
    with_heap(kind, c, [&](auto& heap) {
        std::vector<NodeHandle> nodes;
        nodes.reserve(keys.size());
        for (std::int64_t k : keys) nodes.push_back(c.create(k));
        heap.load_sorting_input(nodes);
        while (!heap.empty()) out.push_back(c.key(heap.delete_min()));
    });
    if (counters != nullptr) *counters = c.counters();
    return out;
}

DijkstraResult run_dijkstra(HeapKind kind, const WeightedGraph& g, std::uint32_t source) {
    DijkstraResult result;
    result.distances.assign(g.n, kUnreachable);
    if (source >= g.n) return result;
    Collection c;
    with_heap(kind, c, [&](auto& heap) {
        std::vector<NodeHandle> handle(g.n);
        std::vector<std::uint32_t> vertex_of;  // node id -> vertex
        std::vector<bool> settled(g.n, false);
        auto discover = [&](std::uint32_t v, std::int64_t d) {
            handle[v] = c.create(d);
            if (vertex_of.size() <= handle[v].id) vertex_of.resize(handle[v].id + 1);
            vertex_of[handle[v].id] = v;
            heap.append(handle[v]);
        };
        discover(source, 0);
        while (!heap.empty()) {
            const Counters before = c.counters();
            const NodeHandle h = heap.delete_min();
            result.counters += c.counters() - before;
            const std::uint32_t u = vertex_of[h.id];
            const std::int64_t du = c.key(h);
            settled[u] = true;
            result.distances[u] = du;
            for (const Edge& e : g.adjacency[u]) {
                if (settled[e.to]) continue;
                const std::int64_t nd = du + e.weight;
                if (!handle[e.to]) {
                    discover(e.to, nd);
                } else if (nd < c.key(handle[e.to])) {
                    heap.decrease_key(handle[e.to], nd);
                }
            }
        }
    });
    return result;
}

}  // namespace smoothheap::workloads
