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

  Node storage shared by every heap variant in this library.

  Nodes live in a HeapCollection and are addressed by index.  Public handles
  carry a generation number so a handle to a released node is detectable.

  List representation (the same for every variant):

    - every sibling list and the root list is circular through `next`;
    - a parent's `child` field names its RIGHTMOST child, so the leftmost
      child is `node(child).next` and both ends are reachable in O(1);
    - `back` names the left sibling, or the parent for a leftmost child;
    - in the root list `back` names the left adjacent root (for the first
      root, the last one), so the root list is doubly linked and circular.

  A child c is leftmost iff node(c.back).next != c.
 */

#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace smoothheap {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Stable reference to a node: valid from creation until release().
struct NodeHandle {
    NodeId id = kNoNode;
    std::uint32_t generation = 0;

    explicit operator bool() const noexcept { return id != kNoNode; }
    friend bool operator==(NodeHandle, NodeHandle) = default;
};

/// Per-run tallies of logical operations.
struct Counters {
    std::uint64_t comparisons = 0;
    std::uint64_t links = 0;
    // Comparisons spent only on locating a minimum after a pure pairing pass.
    std::uint64_t aux_comparisons = 0;

    Counters& operator+=(const Counters& o) noexcept {
        comparisons += o.comparisons;
        links += o.links;
        aux_comparisons += o.aux_comparisons;
        return *this;
    }
    friend Counters operator-(Counters a, const Counters& b) noexcept {
        a.comparisons -= b.comparisons;
        a.links -= b.links;
        a.aux_comparisons -= b.aux_comparisons;
        return a;
    }
    friend bool operator==(const Counters&, const Counters&) = default;
};

enum class Side : std::uint8_t { kNone, kLeft, kRight };
enum class Ordering : std::uint8_t { kLess, kGreater };
enum class Linking : std::uint8_t { kStable, kOneSided };
enum class TieBreak : std::uint8_t { kPosition, kNodeId };
enum class Place : std::uint8_t { kFree, kDetached, kRoot, kChild, kBuffered };

template <class Key>
struct Node {
    Key key{};
    NodeId next = kNoNode;
    NodeId child = kNoNode;  // rightmost child
    NodeId back = kNoNode;
    Side side = Side::kNone;
    Place place = Place::kFree;
    bool below_all = false;  // key reads as minus infinity
    std::uint32_t generation = 0;
    std::uint64_t link_stamp = 0;  // 0: never stamped
};

/// One link as seen by the structural checkers.
struct LinkRecord {
    NodeId winner = kNoNode;
    NodeId loser = kNoNode;
    bool loser_was_left = false;

    friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

class StaleHandleError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

template <class Key, class Compare = std::less<Key>>
class HeapCollection {
  public:
    using key_type = Key;
    using NodeType = Node<Key>;

    explicit HeapCollection(TieBreak tie_break = TieBreak::kPosition, Compare comp = Compare())
        : tie_break_(tie_break), comp_(std::move(comp)) {}

    HeapCollection(const HeapCollection&) = delete;
    HeapCollection& operator=(const HeapCollection&) = delete;
    HeapCollection(HeapCollection&&) = default;
    HeapCollection& operator=(HeapCollection&&) = default;

    NodeHandle create(Key key) {
        NodeId id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
        } else {
            id = static_cast<NodeId>(nodes_.size());
            nodes_.emplace_back();
        }
        NodeType& n = nodes_[id];
        const std::uint32_t gen = n.generation;
        n = NodeType{};
        n.generation = gen;
        n.key = std::move(key);
        n.next = n.back = id;
        n.place = Place::kDetached;
        return {id, gen};
    }

    /// Returns a detached node to the free pool; its handles become stale.
    void release(NodeHandle h) {
        const NodeId id = checked(h);
        NodeType& n = nodes_[id];
        if (n.place != Place::kDetached || n.child != kNoNode) {
            throw std::logic_error("release of a node that is still in a heap");
        }
        n.place = Place::kFree;
        ++n.generation;
        free_.push_back(id);
    }

    bool contains(NodeHandle h) const noexcept {
        return h.id < nodes_.size() && nodes_[h.id].generation == h.generation &&
               nodes_[h.id].place != Place::kFree;
    }

    NodeId checked(NodeHandle h) const {
        if (!contains(h)) throw StaleHandleError("stale or foreign node handle");
        return h.id;
    }

    NodeHandle handle(NodeId id) const noexcept {
        if (id == kNoNode) return {};
        return {id, nodes_[id].generation};
    }

    const Key& key(NodeHandle h) const { return nodes_[checked(h)].key; }
    const NodeType& node(NodeId id) const noexcept { return nodes_[id]; }
    NodeType& node(NodeId id) noexcept { return nodes_[id]; }
    std::size_t capacity() const noexcept { return nodes_.size(); }

    Counters& counters() noexcept { return counters_; }
    const Counters& counters() const noexcept { return counters_; }
    TieBreak tie_break() const noexcept { return tie_break_; }
    const Compare& key_compare() const noexcept { return comp_; }

    /// Links are appended to `trace` while it is set; pass nullptr to stop.
    void set_trace(std::vector<LinkRecord>* trace) noexcept { trace_ = trace; }

    // ---- comparisons -------------------------------------------------------

    /// Plain strict order on keys (minus infinity below everything).  Counted.
    bool less(NodeId a, NodeId b) {
        ++counters_.comparisons;
        return key_less(a, b);
    }

    /// Uncounted variant for queries that must not perturb tallies.
    bool key_less(NodeId a, NodeId b) const {
        const NodeType& x = nodes_[a];
        const NodeType& y = nodes_[b];
        if (x.below_all || y.below_all) return x.below_all && !y.below_all;
        return comp_(x.key, y.key);
    }

    /// Comparison that never reports equality.  Equal keys: with positional
    /// tie-breaking the right node is smaller; otherwise the smaller id is.
    Ordering compare(NodeId a, NodeId b, bool a_left_of_b) {
        assert(a != b);
        ++counters_.comparisons;
        if (key_less(a, b)) return Ordering::kLess;
        if (key_less(b, a)) return Ordering::kGreater;
        if (tie_break_ == TieBreak::kPosition) return a_left_of_b ? Ordering::kGreater : Ordering::kLess;
        return a < b ? Ordering::kLess : Ordering::kGreater;
    }

    // ---- list structure ----------------------------------------------------

    bool is_leftmost_child(NodeId c) const noexcept {
        assert(nodes_[c].place == Place::kChild);
        return nodes_[nodes_[c].back].next != c;
    }

    bool is_rightmost_child(NodeId c) const noexcept { return is_leftmost_child(nodes_[c].next); }

    NodeId leftmost_child(NodeId p) const noexcept {
        const NodeId r = nodes_[p].child;
        return r == kNoNode ? kNoNode : nodes_[r].next;
    }

    NodeId rightmost_child(NodeId p) const noexcept { return nodes_[p].child; }

    /// Parent of a child node.  O(position) for a non-leftmost child.
    NodeId parent(NodeId c) const noexcept {
        while (!is_leftmost_child(c)) c = nodes_[c].back;
        return nodes_[c].back;
    }

    std::vector<NodeId> children(NodeId p) const {
        std::vector<NodeId> out;
        const NodeId last = nodes_[p].child;
        if (last == kNoNode) return out;
        NodeId c = nodes_[last].next;
        for (;;) {
            out.push_back(c);
            if (c == last) break;
            c = nodes_[c].next;
        }
        return out;
    }

    std::size_t child_count(NodeId p) const {
        const NodeId last = nodes_[p].child;
        if (last == kNoNode) return 0;
        std::size_t k = 1;
        for (NodeId c = nodes_[last].next; c != last; c = nodes_[c].next) ++k;
        return k;
    }

    void push_front_child(NodeId p, NodeId c, Side side) {
        const NodeId r = nodes_[p].child;
        set_child_fields(c, side);
        if (r == kNoNode) {
            make_sole_child(p, c);
        } else {
            insert_before(nodes_[r].next, c);
        }
    }

    void push_back_child(NodeId p, NodeId c, Side side) {
        const NodeId r = nodes_[p].child;
        set_child_fields(c, side);
        if (r == kNoNode) {
            make_sole_child(p, c);
        } else {
            insert_after(r, c);
        }
    }

    /// Inserts detached y immediately left of `anchor` in anchor's list; y
    /// takes anchor's place kind.  Child-list callers set y's side.
    void insert_before(NodeId anchor, NodeId y) {
        NodeType& a = nodes_[anchor];
        NodeType& n = nodes_[y];
        n.place = a.place;
        if (a.place == Place::kChild && is_leftmost_child(anchor)) {
            const NodeId p = a.back;
            const NodeId r = nodes_[p].child;
            n.back = p;
            n.next = anchor;
            nodes_[r].next = y;
            a.back = y;
            return;
        }
        const NodeId pred = a.back;
        nodes_[pred].next = y;
        n.back = pred;
        n.next = anchor;
        a.back = y;
    }

    /// Inserts detached y immediately right of `anchor` in anchor's list.
    void insert_after(NodeId anchor, NodeId y) {
        NodeType& a = nodes_[anchor];
        NodeType& n = nodes_[y];
        n.place = a.place;
        const NodeId s = a.next;
        if (a.place == Place::kChild && is_rightmost_child(anchor)) {
            const NodeId p = nodes_[s].back;  // s is the leftmost child
            a.next = y;
            n.back = anchor;
            n.next = s;
            nodes_[p].child = y;
            return;
        }
        a.next = y;
        n.back = anchor;
        n.next = s;
        nodes_[s].back = y;
    }

    /// Removes x (with its subtree) from whatever list holds it and repairs
    /// the list.  Root-list callers own the min-root bookkeeping.
    void cut_from_list(NodeId x) {
        NodeType& n = nodes_[x];
        const NodeId s = n.next;
        if (n.place == Place::kChild) {
            if (is_leftmost_child(x)) {
                const NodeId p = n.back;
                if (s == x) {
                    nodes_[p].child = kNoNode;
                } else {
                    nodes_[nodes_[p].child].next = s;
                    nodes_[s].back = p;
                }
            } else {
                const NodeId pred = n.back;
                const bool was_rightmost = is_leftmost_child(s);
                nodes_[pred].next = s;
                if (was_rightmost) {
                    nodes_[nodes_[s].back].child = pred;
                } else {
                    nodes_[s].back = pred;
                }
            }
        } else if (n.place == Place::kRoot) {
            if (s != x) {
                nodes_[n.back].next = s;
                nodes_[s].back = n.back;
            }
        }
        n.next = n.back = x;
        n.place = Place::kDetached;
    }

    /// Puts detached y into x's slot, then detaches x.  In a child list y
    /// inherits x's side and link stamp.
    void replace_in_list(NodeId x, NodeId y) {
        NodeType& n = nodes_[x];
        if (n.place == Place::kChild) {
            nodes_[y].side = n.side;
            nodes_[y].link_stamp = n.link_stamp;
        } else {
            nodes_[y].side = Side::kNone;
        }
        if (n.next == x) {
            // Sole member.
            NodeType& m = nodes_[y];
            m.place = n.place;
            if (n.place == Place::kChild) {
                const NodeId p = n.back;
                nodes_[p].child = y;
                m.next = y;
                m.back = p;
            } else {
                m.next = m.back = y;
            }
            n.next = n.back = x;
            n.place = Place::kDetached;
            return;
        }
        insert_before(x, y);
        cut_from_list(x);
    }

    /// Replaces x in its list by x's children, in order.  Returns the new
    /// members left to right.  In the root list they become roots with no
    /// side; in a sibling list they take x's side and stamp.
    std::vector<NodeId> splice_children_in_place(NodeId x) {
        std::vector<NodeId> kids = children(x);
        NodeType& n = nodes_[x];
        n.child = kNoNode;
        for (NodeId c : kids) {
            NodeType& m = nodes_[c];
            m.next = m.back = c;
            m.place = Place::kDetached;
            if (n.place == Place::kChild) {
                m.side = n.side;
                m.link_stamp = n.link_stamp;
            } else {
                m.side = Side::kNone;
            }
            insert_before(x, c);
        }
        cut_from_list(x);
        return kids;
    }

    /// Detaches all children of p and returns them left to right.
    std::vector<NodeId> take_children(NodeId p) {
        std::vector<NodeId> kids = children(p);
        nodes_[p].child = kNoNode;
        for (NodeId c : kids) {
            nodes_[c].place = Place::kDetached;
            nodes_[c].next = nodes_[c].back = c;
        }
        return kids;
    }

    // ---- linking -----------------------------------------------------------

    /// Makes `loser` a child of `winner` when the outcome is already known.
    /// The loser must not be in any list.  Counts one link.
    void attach(NodeId winner, NodeId loser, bool loser_was_left, Linking linking, bool stamp) {
        const Side side = loser_was_left ? Side::kLeft : Side::kRight;
        if (linking == Linking::kStable && !loser_was_left) {
            push_back_child(winner, loser, side);
        } else {
            push_front_child(winner, loser, side);
        }
        if (stamp) nodes_[loser].link_stamp = ++stamp_clock_;
        ++counters_.links;
        if (trace_ != nullptr) trace_->push_back({winner, loser, loser_was_left});
    }

    /// Links two adjacent list members, `left` immediately left of `right`.
    /// The loser leaves the list and becomes the winner's child.
    NodeId link(NodeId left, NodeId right, Linking linking, bool stamp = false) {
        assert(nodes_[left].next == right && nodes_[right].back == left);
        const bool left_wins = compare(left, right, true) == Ordering::kLess;
        const NodeId winner = left_wins ? left : right;
        const NodeId loser = left_wins ? right : left;
        cut_from_list(loser);
        attach(winner, loser, !left_wins, linking, stamp);
        return winner;
    }

    NodeId link_one_sided(NodeId left, NodeId right, bool stamp = false) {
        return link(left, right, Linking::kOneSided, stamp);
    }

    NodeId link_stable(NodeId left, NodeId right, bool stamp = false) {
        return link(left, right, Linking::kStable, stamp);
    }

    // ---- root lists --------------------------------------------------------

    /// Turns a detached node into a singleton root list.
    void make_singleton_root(NodeId x) {
        NodeType& n = nodes_[x];
        n.next = n.back = x;
        n.place = Place::kRoot;
        n.side = Side::kNone;
    }

    /// Catenates two circular root lists given their first members; the
    /// combined list starts at `a`.
    void catenate_roots(NodeId a, NodeId b) {
        const NodeId a_last = nodes_[a].back;
        const NodeId b_last = nodes_[b].back;
        nodes_[a_last].next = b;
        nodes_[b].back = a_last;
        nodes_[b_last].next = a;
        nodes_[a].back = b_last;
    }

    /// Members of the circular root list starting at `first`.
    std::vector<NodeId> root_list(NodeId first) const {
        std::vector<NodeId> out;
        if (first == kNoNode) return out;
        NodeId r = first;
        do {
            out.push_back(r);
            r = nodes_[r].next;
        } while (r != first);
        return out;
    }

    /// Appends the members of the root list starting at `first` to `out`
    /// and detaches them.  Linking code relies on detached nodes pointing
    /// to themselves.
    void take_root_list(NodeId first, std::vector<NodeId>& out) {
        if (first == kNoNode) return;
        const std::size_t from = out.size();
        NodeId r = first;
        do {
            out.push_back(r);
            r = nodes_[r].next;
        } while (r != first);
        for (std::size_t i = from; i < out.size(); ++i) {
            NodeType& n = nodes_[out[i]];
            n.next = n.back = out[i];
            n.place = Place::kDetached;
            n.side = Side::kNone;
        }
    }

    /// Builds a circular root list from detached nodes, in order.
    void build_root_list(std::span<const NodeId> roots) {
        const std::size_t k = roots.size();
        for (std::size_t i = 0; i < k; ++i) {
            NodeType& n = nodes_[roots[i]];
            n.place = Place::kRoot;
            n.side = Side::kNone;
            n.next = roots[(i + 1) % k];
            n.back = roots[(i + k - 1) % k];
        }
    }

  private:
    void set_child_fields(NodeId c, Side side) {
        nodes_[c].place = Place::kChild;
        nodes_[c].side = side;
    }

    void make_sole_child(NodeId p, NodeId c) {
        nodes_[p].child = c;
        nodes_[c].next = c;
        nodes_[c].back = p;
    }

    std::vector<NodeType> nodes_;
    std::vector<NodeId> free_;
    Counters counters_;
    std::vector<LinkRecord>* trace_ = nullptr;
    std::uint64_t stamp_clock_ = 0;
    TieBreak tie_break_;
    Compare comp_;
};

}  // namespace smoothheap
