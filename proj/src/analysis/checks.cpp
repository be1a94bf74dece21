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

#include "smoothheap/analysis/checks.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace smoothheap::analysis {

bool check_link_trace(std::span<const LinkRecord> trace) {
    std::unordered_map<NodeId, std::pair<int, int>> wins;
    for (const LinkRecord& r : trace) {
        auto& [left, right] = wins[r.winner];
        if (r.loser_was_left) {
            if (++left > 1) return false;
        } else {
            if (++right > 1) return false;
        }
    }
    return true;
}

BinaryTree brute_force_treap(std::span<const std::int64_t> keys, TieBreak tie, std::span<const NodeId> ids) {
    const std::size_t k = keys.size();
    if (tie == TieBreak::kNodeId && ids.size() != k) throw std::invalid_argument("node-id tie-break needs one id per key");
    BinaryTree t;
    t.left.assign(k, BinaryTree::npos);
    t.right.assign(k, BinaryTree::npos);
    if (k == 0) return t;

    // Is position a preferred over position b as a subtree root?
    auto better = [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        if (tie == TieBreak::kPosition) return a > b;
        return ids[a] < ids[b];
    };

    struct Range {
        std::size_t lo;
        std::size_t hi;  // exclusive
        std::size_t parent;
        bool as_left;
    };
    std::vector<Range> work{{0, k, BinaryTree::npos, false}};
    while (!work.empty()) {
        const Range r = work.back();
        work.pop_back();
        std::size_t best = r.lo;
        for (std::size_t i = r.lo + 1; i < r.hi; ++i) {
            if (better(i, best)) best = i;
        }
        if (r.parent == BinaryTree::npos) {
            t.root = best;
        } else if (r.as_left) {
            t.left[r.parent] = best;
        } else {
            t.right[r.parent] = best;
        }
        if (best > r.lo) work.push_back({r.lo, best, best, true});
        if (best + 1 < r.hi) work.push_back({best + 1, r.hi, best, false});
    }
    return t;
}

BinaryTree tree_from_trace(std::span<const NodeId> order, std::span<const LinkRecord> trace) {
    const std::size_t k = order.size();
    std::unordered_map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) {
        if (!pos.emplace(order[i], i).second) throw std::invalid_argument("duplicate node in combining order");
    }
    BinaryTree t;
    t.left.assign(k, BinaryTree::npos);
    t.right.assign(k, BinaryTree::npos);
    std::vector<bool> lost(k, false);
    for (const LinkRecord& r : trace) {
        const auto w = pos.find(r.winner);
        const auto l = pos.find(r.loser);
        if (w == pos.end() || l == pos.end()) throw std::invalid_argument("link between nodes outside the round");
        if (lost[l->second] || lost[w->second]) throw std::invalid_argument("a node linked after losing");
        std::size_t& slot = r.loser_was_left ? t.left[w->second] : t.right[w->second];
        if (slot != BinaryTree::npos) throw std::invalid_argument("a node won two links on the same side");
        slot = l->second;
        lost[l->second] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (lost[i]) continue;
        if (t.root != BinaryTree::npos) throw std::invalid_argument("more than one survivor");
        t.root = i;
    }
    return t;
}

bool check_treap_shape(std::span<const NodeId> order, std::span<const std::int64_t> keys,
                       std::span<const LinkRecord> trace, NodeId root, TieBreak tie) {
    if (order.size() != keys.size()) throw std::invalid_argument("one key per node expected");
    if (order.empty()) return trace.empty();
    BinaryTree traced;
    try {
        traced = tree_from_trace(order, trace);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (order[traced.root] != root) return false;
    return traced == brute_force_treap(keys, tie, order);
}

}  // namespace smoothheap::analysis
