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
#include "smoothheap/smooth_heap.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smoothheap {

enum class PairingMode : std::uint8_t {
    kClassicSingleTree,  // eager: one tree between operations
    kMultiTree,          // lazy insert/meld/decrease-key, two-pass delete-min
    kPure,               // lazy, delete-min does a single pairing pass
};

/// One-sided link of two detached roots, `left` standing left of `right`.
template <class Key, class Compare>
NodeId link_detached(HeapCollection<Key, Compare>& c, NodeId left, NodeId right) {
    if (c.compare(left, right, true) == Ordering::kLess) {
        c.attach(left, right, false, Linking::kOneSided, false);
        return left;
    }
    c.attach(right, left, true, Linking::kOneSided, false);
    return right;
}

/// Classic two-pass combining: pair adjacent roots left to right, then link
/// the pair winners right to left.  k-1 one-sided links for k roots.
template <class Key, class Compare>
NodeId two_pass_combine(HeapCollection<Key, Compare>& c, std::span<const NodeId> roots) {
    if (roots.empty()) throw std::invalid_argument("two-pass combine of an empty root list");
    std::vector<NodeId> winners;
    winners.reserve(roots.size() / 2 + 1);
    std::size_t i = 0;
    for (; i + 1 < roots.size(); i += 2) winners.push_back(link_detached(c, roots[i], roots[i + 1]));
    if (i < roots.size()) winners.push_back(roots[i]);
    NodeId acc = winners.back();
    for (std::size_t j = winners.size() - 1; j-- > 0;) acc = link_detached(c, winners[j], acc);
    return acc;
}

template <class Key, class Compare = std::less<Key>>
class PairingHeap {
  public:
    using Collection = HeapCollection<Key, Compare>;

    PairingHeap(Collection& collection, PairingMode mode) : c_(&collection), mode_(mode) {}

    PairingHeap(const PairingHeap&) = delete;
    PairingHeap& operator=(const PairingHeap&) = delete;
    PairingHeap(PairingHeap&& o) noexcept { swap(o); }
    PairingHeap& operator=(PairingHeap&& o) noexcept {
        swap(o);
        return *this;
    }

    PairingMode mode() const noexcept { return mode_; }
    Collection& collection() const noexcept { return *c_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    NodeId min_root() const noexcept { return head_; }
    NodeHandle find_min() const { return c_->handle(head_); }
    std::vector<NodeId> roots() const { return c_->root_list(head_); }
    std::size_t last_consolidation_roots() const noexcept { return last_roots_; }

    void insert(NodeHandle h) {
        const NodeId x = fresh(h);
        ++size_;
        if (head_ == kNoNode) {
            c_->make_singleton_root(x);
            head_ = x;
        } else if (mode_ == PairingMode::kClassicSingleTree) {
            head_ = link_detached(*c_, head_, x);
            c_->make_singleton_root(head_);
        } else {
            add_root_at_end(x);
        }
    }

    NodeHandle push(Key key) {
        const NodeHandle h = c_->create(std::move(key));
        insert(h);
        return h;
    }

    /// Same as insert: lazy modes always add at the end of the root list.
    void append(NodeHandle h) { insert(h); }

    void meld(PairingHeap& other) {
        if (this == &other) return;
        if (mode_ != other.mode_ || c_ != other.c_) throw IncompatibleHeapsError();
        if (other.head_ != kNoNode) {
            if (head_ == kNoNode) {
                head_ = other.head_;
            } else if (mode_ == PairingMode::kClassicSingleTree) {
                head_ = link_detached(*c_, head_, other.head_);
                c_->make_singleton_root(head_);
            } else {
                c_->catenate_roots(head_, other.head_);
                if (c_->less(other.head_, head_)) head_ = other.head_;
            }
        }
        size_ += other.size_;
        other.head_ = kNoNode;
        other.size_ = 0;
    }

    NodeHandle delete_min() {
        if (size_ == 0) throw EmptyHeapError();
        const NodeId x = head_;
        std::vector<NodeId> roots = c_->take_children(x);
        const NodeId rest = c_->node(x).next;
        if (rest != x) {
            c_->cut_from_list(x);
            c_->take_root_list(rest, roots);
        }
        detach(x);
        --size_;
        last_roots_ = roots.size();
        consolidate(roots);
        return c_->handle(x);
    }

    void decrease_key(NodeHandle h, Key key) {
        const NodeId x = c_->checked(h);
        if (c_->key_compare()(c_->node(x).key, key)) throw KeyIncreaseError();
        c_->node(x).key = std::move(key);
        decreased(x);
    }

    /// Arbitrary deletion.  The eager mode combines the node's children and
    /// links the result with the root; lazy modes splice the children into
    /// the node's place.
    void erase(NodeHandle h) {
        const NodeId x = c_->checked(h);
        if (x == head_) {
            delete_min();
            return;
        }
        if (mode_ == PairingMode::kClassicSingleTree) {
            c_->cut_from_list(x);
            std::vector<NodeId> kids = c_->take_children(x);
            if (!kids.empty()) {
                const NodeId r = two_pass_combine(*c_, std::span<const NodeId>(kids));
                head_ = link_detached(*c_, head_, r);
                c_->make_singleton_root(head_);
            }
        } else {
            c_->splice_children_in_place(x);
        }
        detach(x);
        --size_;
    }

    void load_sorting_input(std::span<const NodeHandle> nodes) {
        if (size_ != 0) throw std::logic_error("sorting input requires an empty heap");
        if (nodes.empty()) return;
        std::vector<NodeId> ids;
        ids.reserve(nodes.size());
        for (NodeHandle h : nodes) ids.push_back(fresh(h));
        size_ = ids.size();
        last_roots_ = ids.size();
        consolidate(ids);
    }

  private:
    void consolidate(const std::vector<NodeId>& roots) {
        if (roots.empty()) {
            head_ = kNoNode;
            return;
        }
        if (mode_ != PairingMode::kPure) {
            head_ = two_pass_combine(*c_, std::span<const NodeId>(roots));
            c_->make_singleton_root(head_);
            return;
        }
        // Single pairing pass; the minimum among the survivors heads the list.
        std::vector<NodeId> forest;
        forest.reserve(roots.size() / 2 + 1);
        std::size_t i = 0;
        for (; i + 1 < roots.size(); i += 2) forest.push_back(link_detached(*c_, roots[i], roots[i + 1]));
        if (i < roots.size()) forest.push_back(roots[i]);
        std::size_t best = 0;
        for (std::size_t j = 1; j < forest.size(); ++j) {
            ++c_->counters().aux_comparisons;
            if (c_->key_less(forest[j], forest[best])) best = j;
        }
        c_->build_root_list(std::span<const NodeId>(forest));
        head_ = forest[best];
    }

    void decreased(NodeId x) {
        const auto& n = c_->node(x);
        if (n.place == Place::kRoot) {
            if (x != head_ && c_->less(x, head_)) head_ = x;
            return;
        }
        c_->cut_from_list(x);
        if (mode_ == PairingMode::kClassicSingleTree) {
            head_ = link_detached(*c_, head_, x);
            c_->make_singleton_root(head_);
        } else {
            add_root_at_end(x);
        }
    }

    void add_root_at_end(NodeId x) {
        c_->node(x).place = Place::kRoot;
        c_->node(x).side = Side::kNone;
        c_->insert_before(head_, x);
        if (c_->less(x, head_)) head_ = x;
    }

    NodeId fresh(NodeHandle h) const {
        const NodeId x = c_->checked(h);
        const auto& n = c_->node(x);
        if (n.place != Place::kDetached || n.next != x) throw std::logic_error("node is already in a heap");
        return x;
    }

    void detach(NodeId x) {
        auto& n = c_->node(x);
        n.next = n.back = x;
        n.place = Place::kDetached;
        n.side = Side::kNone;
        n.below_all = false;
    }

    void swap(PairingHeap& o) noexcept {
        std::swap(c_, o.c_);
        std::swap(mode_, o.mode_);
        std::swap(head_, o.head_);
        std::swap(size_, o.size_);
        std::swap(last_roots_, o.last_roots_);
    }

    Collection* c_ = nullptr;
    PairingMode mode_ = PairingMode::kMultiTree;
    NodeId head_ = kNoNode;
    std::size_t size_ = 0;
    std::size_t last_roots_ = 0;
};

}  // namespace smoothheap
