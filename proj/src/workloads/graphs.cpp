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

#include "smoothheap/workloads/generators.hpp"
#include "smoothheap/workloads/rng.hpp"

#include <algorithm>
#include <ostream>

namespace smoothheap::workloads {

namespace {

bool adjacent(const WeightedGraph& g, std::uint32_t u, std::uint32_t v) {
    const auto& a = g.adjacency[u];
    return std::any_of(a.begin(), a.end(), [v](const Edge& e) { return e.to == v; });
}

void add_edge(WeightedGraph& g, std::uint32_t u, std::uint32_t v, std::uint32_t w) {
    g.adjacency[u].push_back({v, w});
    g.adjacency[v].push_back({u, w});
}

std::uint32_t draw_weight(SplitMix64& rng) {
    return static_cast<std::uint32_t>(rng.between(kMinWeight, kMaxWeight));
}

// Whether any two remaining points could still be paired.
bool has_suitable_pair(const WeightedGraph& g, const std::vector<std::uint32_t>& points) {
    std::vector<std::uint32_t> vs(points);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!adjacent(g, vs[i], vs[j])) return true;
        }
    }
    return false;
}

}  // namespace

std::size_t WeightedGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
}

WeightedGraph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InfeasibleParametersError("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    WeightedGraph g;
    g.n = n;
    g.adjacency.resize(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (rng.unit() < p) add_edge(g, u, v, draw_weight(rng));
        }
    }
    return g;
}

WeightedGraph gen_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
    if (d >= n && !(n == 0 && d == 0)) throw InfeasibleParametersError("degree must be below the vertex count");
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) throw InfeasibleParametersError("n * d must be even");
    SplitMix64 rng(seed);
    for (;;) {
        WeightedGraph g;
        g.n = n;
        g.adjacency.resize(n);
        std::vector<std::uint32_t> points;
        points.reserve(static_cast<std::size_t>(n) * d);
        for (std::uint32_t v = 0; v < n; ++v) points.insert(points.end(), d, v);
        bool stuck = false;
        std::size_t misses = 0;
        while (!points.empty()) {
            const std::size_t i = rng.below(points.size());
            std::size_t j = rng.below(points.size() - 1);
            if (j >= i) ++j;
            const std::uint32_t u = points[i];
            const std::uint32_t v = points[j];
            if (u == v || adjacent(g, u, v)) {
                if (++misses >= 64) {
                    if (!has_suitable_pair(g, points)) {
                        stuck = true;
                        break;
                    }
                    misses = 0;
                }
                continue;
            }
            misses = 0;
            add_edge(g, u, v, draw_weight(rng));
            // Remove the larger index first so the smaller stays valid.
            for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
                points[k] = points.back();
                points.pop_back();
            }
        }
        if (!stuck) return g;
    }
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
    os << g.n << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (const Edge& e : g.adjacency[u]) {
            if (u < e.to) os << u << ' ' << e.to << ' ' << e.weight << '\n';
        }
    }
}

}  // namespace smoothheap::workloads
