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

  Potential function used to audit amortized costs of smooth and slim heaps.

  size(x) is the number of nodes in the subtree of x.  The link order of a
  node's children lists them by when they lost their link to the parent,
  latest first.  mass(x) of a child is size(x) plus the sizes of the
  siblings that follow it in link order.

  A root is worth 2 + 2 lg size.  A child is worth lg mass unless it is
  exempt: in slim mode the first two children of the list are exempt; in
  smooth mode the leftmost LEFT child and the rightmost RIGHT child are.
 */

#pragma once

#include "smoothheap/heap_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace smoothheap::analysis {

enum class PotentialMode : std::uint8_t { kSlim, kSmooth };

/// Smooth link order cannot be recovered without link stamps.
class AuditModeRequired : public std::logic_error {
  public:
    AuditModeRequired() : std::logic_error("smooth link order needs link stamps; enable audit mode") {}
};

struct PotentialSnapshot {
    double total = 0.0;
    std::unordered_map<NodeId, double> per_node;  // filled on request
    PotentialMode mode = PotentialMode::kSlim;
};

template <class Key, class Compare>
std::size_t subtree_size(const HeapCollection<Key, Compare>& c, NodeId x) {
    std::size_t n = 0;
    std::vector<NodeId> stack{x};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        ++n;
        const NodeId last = c.node(v).child;
        if (last == kNoNode) continue;
        NodeId k = last;
        do {
            k = c.node(k).next;
            stack.push_back(k);
        } while (k != last);
    }
    return n;
}

/// Children of p, latest link first.
template <class Key, class Compare>
std::vector<NodeId> link_order(const HeapCollection<Key, Compare>& c, NodeId p, PotentialMode mode) {
    std::vector<NodeId> kids = c.children(p);
    if (mode == PotentialMode::kSlim) return kids;
    std::vector<NodeId> left;
    std::vector<NodeId> right;
    for (NodeId k : kids) {
        const auto& n = c.node(k);
        if (n.link_stamp == 0) throw AuditModeRequired();
        if (n.side == Side::kLeft) {
            left.push_back(k);
        } else if (n.side == Side::kRight) {
            right.push_back(k);
        } else {
            throw std::logic_error("child without a side");
        }
    }
    std::reverse(right.begin(), right.end());
    std::vector<NodeId> out;
    out.reserve(kids.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < left.size() || j < right.size()) {
        const bool take_left =
            j == right.size() || (i < left.size() && c.node(left[i]).link_stamp > c.node(right[j]).link_stamp);
        out.push_back(take_left ? left[i++] : right[j++]);
    }
    return out;
}

/// mass of a child: its size plus the sizes of earlier-linked siblings.
template <class Key, class Compare>
std::size_t mass(const HeapCollection<Key, Compare>& c, NodeId x, PotentialMode mode) {
    if (c.node(x).place != Place::kChild) throw std::invalid_argument("mass is defined for children only");
    const std::vector<NodeId> order = link_order(c, c.parent(x), mode);
    std::size_t total = 0;
    bool seen = false;
    for (NodeId k : order) {
        if (k == x) seen = true;
        if (seen) total += subtree_size(c, k);
    }
    return total;
}

/// Computes potentials over whole forests.  Keeps scratch storage between
/// calls, so reuse one instance when auditing long sequences.
template <class Key, class Compare = std::less<Key>>
class PotentialCalculator {
  public:
    using Collection = HeapCollection<Key, Compare>;

    explicit PotentialCalculator(PotentialMode mode) : mode_(mode) {}

    PotentialMode mode() const noexcept { return mode_; }

    /// Potential of the forest whose circular root list contains `first`.
    double forest(const Collection& c, NodeId first, PotentialSnapshot* snapshot = nullptr) {
        if (first == kNoNode) return 0.0;
        double total = 0.0;
        NodeId r = first;
        do {
            total += tree(c, r, snapshot);
            r = c.node(r).next;
        } while (r != first);
        return total;
    }

    /// Potential of the tree rooted at r, r counted as a root.
    double tree(const Collection& c, NodeId r, PotentialSnapshot* snapshot = nullptr) {
        if (size_.size() < c.capacity()) size_.resize(c.capacity());
        preorder_.clear();
        stack_.assign(1, r);
        while (!stack_.empty()) {
            const NodeId v = stack_.back();
            stack_.pop_back();
            preorder_.push_back(v);
            for_each_child(c, v, [&](NodeId k) { stack_.push_back(k); });
        }
        for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
            std::uint32_t s = 1;
            for_each_child(c, *it, [&](NodeId k) { s += size_[k]; });
            size_[*it] = s;
        }
        const double root_value = 2.0 + 2.0 * std::log2(static_cast<double>(size_[r]));
        double total = root_value;
        if (snapshot != nullptr) snapshot->per_node[r] = root_value;
        for (NodeId v : preorder_) {
            if (c.node(v).child != kNoNode) total += children_value(c, v, snapshot);
        }
        return total;
    }

    /// Snapshot over several heaps' root lists.
    PotentialSnapshot snapshot(const Collection& c, std::span<const NodeId> first_roots, bool per_node = false) {
        PotentialSnapshot s;
        s.mode = mode_;
        for (NodeId f : first_roots) s.total += forest(c, f, per_node ? &s : nullptr);
        return s;
    }

  private:
    template <class F>
    static void for_each_child(const Collection& c, NodeId p, F&& f) {
        const NodeId last = c.node(p).child;
        if (last == kNoNode) return;
        NodeId k = last;
        do {
            k = c.node(k).next;
            f(k);
        } while (k != last);
    }

    double children_value(const Collection& c, NodeId p, PotentialSnapshot* snapshot) {
        const std::vector<NodeId> order = link_order(c, p, mode_);
        exempt_.clear();
        if (mode_ == PotentialMode::kSlim) {
            const NodeId first = c.leftmost_child(p);
            exempt_.push_back(first);
            exempt_.push_back(c.node(first).next);
        } else {
            // Leftmost LEFT child and rightmost RIGHT child.
            const NodeId first = c.leftmost_child(p);
            if (c.node(first).side == Side::kLeft) exempt_.push_back(first);
            const NodeId last = c.rightmost_child(p);
            if (c.node(last).side == Side::kRight) exempt_.push_back(last);
        }
        double total = 0.0;
        std::size_t suffix = 0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            suffix += size_[*it];
            const bool free = std::find(exempt_.begin(), exempt_.end(), *it) != exempt_.end();
            const double v = free ? 0.0 : std::log2(static_cast<double>(suffix));
            total += v;
            if (snapshot != nullptr) snapshot->per_node[*it] = v;
        }
        return total;
    }

    PotentialMode mode_;
    std::vector<std::uint32_t> size_;
    std::vector<NodeId> preorder_;
    std::vector<NodeId> stack_;
    std::vector<NodeId> exempt_;
};

}  // namespace smoothheap::analysis
