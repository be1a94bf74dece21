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

#include "smoothheap/analysis/sweeps.hpp"

#include "smoothheap/analysis/checks.hpp"
#include "smoothheap/smooth_heap.hpp"
#include "smoothheap/workloads/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace smoothheap::analysis {

namespace {

std::string describe(std::span<const std::int64_t> keys, Linking linking, TieBreak tie) {
    std::ostringstream os;
    os << (linking == Linking::kStable ? "stable" : "one-sided") << (tie == TieBreak::kNodeId ? "/node-id" : "") << " [";
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << "]";
    return os.str();
}

void record(SweepResult& r, const std::string& problem) {
    ++r.cases;
    if (problem.empty()) return;
    if (r.failures++ == 0) r.first_failure = problem;
}

}  // namespace

std::string check_treapify_round(std::span<const std::int64_t> keys, Linking linking, TieBreak tie) {
    if (keys.empty()) return "empty key list";
    HeapCollection<std::int64_t> c(tie);
    std::vector<NodeId> ids;
    ids.reserve(keys.size());
    for (std::int64_t k : keys) ids.push_back(c.create(k).id);
    std::vector<LinkRecord> trace;
    c.set_trace(&trace);
    const NodeId root = treapify(c, std::span<const NodeId>(ids), linking);
    c.set_trace(nullptr);

    const std::size_t k = keys.size();
    const std::string where = describe(keys, linking, tie);
    if (c.counters().links != k - 1) return where + ": expected " + std::to_string(k - 1) + " links";
    if (c.counters().comparisons > 2 * k) return where + ": more than 2k comparisons";
    if (!check_link_trace(trace)) return where + ": a node won two links on one side";
    if (!check_treap_shape(ids, keys, trace, root, tie)) return where + ": tree differs from the reference treap";

    // Child placement: one-sided links push every loser to the front; stable
    // links push left losers to the front and right losers to the back.
    std::unordered_map<NodeId, std::vector<NodeId>> expected;
    for (const LinkRecord& r : trace) {
        auto& kids = expected[r.winner];
        if (linking == Linking::kStable && !r.loser_was_left) {
            kids.push_back(r.loser);
        } else {
            kids.insert(kids.begin(), r.loser);
        }
    }
    for (NodeId v : ids) {
        const auto it = expected.find(v);
        const std::vector<NodeId> want = it == expected.end() ? std::vector<NodeId>{} : it->second;
        if (c.children(v) != want) return where + ": child order of node " + std::to_string(v) + " is wrong";
        for (NodeId ch : want) {
            const auto& n = c.node(ch);
            const bool was_left = std::any_of(trace.begin(), trace.end(), [&](const LinkRecord& r) {
                return r.loser == ch && r.loser_was_left;
            });
            if (n.side != (was_left ? Side::kLeft : Side::kRight)) return where + ": wrong side tag";
        }
    }
    return {};
}

SweepResult exhaustive_treapify_sweep(std::size_t max_distinct, std::size_t max_dup_length, std::int64_t alphabet) {
    SweepResult result;
    for (Linking linking : {Linking::kStable, Linking::kOneSided}) {
        for (std::size_t k = 1; k <= max_distinct; ++k) {
            std::vector<std::int64_t> keys(k);
            std::iota(keys.begin(), keys.end(), 1);
            do {
                record(result, check_treapify_round(keys, linking));
            } while (std::next_permutation(keys.begin(), keys.end()));
        }
        for (TieBreak tie : {TieBreak::kPosition, TieBreak::kNodeId}) {
            for (std::size_t len = 1; len <= max_dup_length; ++len) {
                std::vector<std::int64_t> keys(len, 1);
                for (;;) {
                    record(result, check_treapify_round(keys, linking, tie));
                    // Odometer increment over {1..alphabet}^len.
                    std::size_t i = 0;
                    while (i < len && keys[i] == alphabet) keys[i++] = 1;
                    if (i == len) break;
                    ++keys[i];
                }
            }
        }
    }
    return result;
}

LinkTraceResult link_trace_sweep(Linking linking, std::size_t delete_mins, std::size_t max_nodes, std::uint64_t seed) {
    HeapCollection<std::int64_t> c;
    HeapConfig config;
    config.linking = linking;
    SmoothHeap<std::int64_t> heap(c, config);
    workloads::SplitMix64 rng(seed);
    std::vector<NodeHandle> live;
    std::unordered_map<NodeId, std::size_t> slot;
    std::vector<LinkRecord> trace;
    LinkTraceResult result;

    while (result.delete_mins < delete_mins) {
        const std::uint64_t roll = rng.below(100);
        if (heap.empty() || (heap.size() < max_nodes && roll < 60)) {
            const NodeHandle h = heap.push(static_cast<std::int64_t>(rng.below(1000000)));
            slot[h.id] = live.size();
            live.push_back(h);
        } else if (roll < 80) {
            const NodeHandle h = live[rng.below(live.size())];
            const std::int64_t k = c.key(h);
            heap.decrease_key(h, k - static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(k) + 1)));
        } else {
            trace.clear();
            c.set_trace(&trace);
            const NodeHandle h = heap.delete_min();
            c.set_trace(nullptr);
            ++result.delete_mins;
            result.max_roots = std::max(result.max_roots, heap.last_consolidation_roots());
            if (!check_link_trace(trace)) ++result.failures;
            const std::size_t i = slot[h.id];
            live[i] = live.back();
            slot[live[i].id] = i;
            live.pop_back();
            slot.erase(h.id);
            c.release(h);
        }
        result.max_heap_size = std::max(result.max_heap_size, heap.size());
    }
    return result;
}

}  // namespace smoothheap::analysis
