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

  Structural checkers used by tests, the self-test and the acceptance suite.
 */

#pragma once

#include "smoothheap/heap_core.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace smoothheap::analysis {

/// True iff no node wins more than one left link and one right link.
bool check_link_trace(std::span<const LinkRecord> trace);

/// Binary tree over list positions 0..k-1.
struct BinaryTree {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t root = npos;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

/// Reference treap: the root is the minimum key (on ties the rightmost
/// position, or the smallest id under TieBreak::kNodeId) and both sides
/// recurse.  `ids` is only read for TieBreak::kNodeId.
BinaryTree brute_force_treap(std::span<const std::int64_t> keys, TieBreak tie = TieBreak::kPosition,
                             std::span<const NodeId> ids = {});

/// Rebuilds the binary tree of one combining round from its link trace:
/// a left-link loser is the winner's left child, a right-link loser its
/// right child.  Throws std::invalid_argument on an inconsistent trace.
BinaryTree tree_from_trace(std::span<const NodeId> order, std::span<const LinkRecord> trace);

/// Compares the traced tree with the reference treap; `root` must be its root.
bool check_treap_shape(std::span<const NodeId> order, std::span<const std::int64_t> keys,
                       std::span<const LinkRecord> trace, NodeId root, TieBreak tie = TieBreak::kPosition);

/// Checks list wiring, places, heap order and (for stable linking) that
/// LEFT children precede RIGHT children.  Returns an empty string when the
/// forest is sound, otherwise the first problem found.
template <class Key, class Compare>
std::string validate_forest(const HeapCollection<Key, Compare>& c, NodeId first_root, bool check_sides,
                            std::size_t* node_count = nullptr) {
    std::size_t visited = 0;
    if (node_count != nullptr) *node_count = 0;
    if (first_root == kNoNode) return {};
    const std::size_t limit = c.capacity() + 1;
    std::vector<NodeId> stack;
    {
        NodeId r = first_root;
        std::size_t steps = 0;
        do {
            const auto& n = c.node(r);
            if (n.place != Place::kRoot) return "root list member " + std::to_string(r) + " is not a root";
            if (c.node(n.next).back != r) return "root list back link broken at " + std::to_string(r);
            stack.push_back(r);
            r = n.next;
            if (++steps > limit) return "root list is not circular";
        } while (r != first_root);
    }
    while (!stack.empty()) {
        const NodeId p = stack.back();
        stack.pop_back();
        ++visited;
        if (visited > limit) return "forest contains a cycle";
        const NodeId last = c.node(p).child;
        if (last == kNoNode) continue;
        const NodeId first = c.node(last).next;
        if (c.node(first).back != p) return "leftmost child of " + std::to_string(p) + " does not point back to it";
        NodeId prev = kNoNode;
        NodeId k = first;
        bool seen_right = false;
        std::size_t steps = 0;
        for (;;) {
            const auto& n = c.node(k);
            if (n.place != Place::kChild) return "child " + std::to_string(k) + " is not marked as a child";
            if (c.key_less(k, p)) return "heap order violated below " + std::to_string(p);
            if (prev != kNoNode && n.back != prev) return "sibling back link broken at " + std::to_string(k);
            if (check_sides) {
                if (n.side == Side::kRight) seen_right = true;
                if (n.side == Side::kLeft && seen_right) return "LEFT child after RIGHT child under " + std::to_string(p);
                if (n.side == Side::kNone) return "child " + std::to_string(k) + " has no side";
            }
            stack.push_back(k);
            if (k == last) break;
            prev = k;
            k = n.next;
            if (k == first || ++steps > limit) return "child list of " + std::to_string(p) + " ends before its rightmost child";
        }
    }
    if (node_count != nullptr) *node_count = visited;
    return {};
}

/// Reads every tree in root-list order as: LEFT children, node, RIGHT
/// children (each child recursively).  Stable links leave it unchanged.
template <class Key, class Compare>
std::vector<NodeId> in_order(const HeapCollection<Key, Compare>& c, NodeId first_root) {
    std::vector<NodeId> out;
    if (first_root == kNoNode) return out;
    struct Frame {
        NodeId node;
        bool expanded;
    };
    std::vector<Frame> stack;
    std::vector<NodeId> roots = c.root_list(first_root);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.push_back({*it, false});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.expanded) {
            out.push_back(f.node);
            continue;
        }
        const std::vector<NodeId> kids = c.children(f.node);
        // Pushed in reverse so they pop left to right.
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            if (c.node(*it).side != Side::kLeft) stack.push_back({*it, false});
        }
        stack.push_back({f.node, true});
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            if (c.node(*it).side == Side::kLeft) stack.push_back({*it, false});
        }
    }
    return out;
}

}  // namespace smoothheap::analysis
