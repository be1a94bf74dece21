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

  Smooth heaps (stable linking) and slim heaps (one-sided linking).

  Both keep a forest whose roots form a circular list headed by the min-root.
  insert, meld and the simple decrease-key are lazy; delete-min removes the
  min-root, puts its children in its place and combines every root with
  leftmost locally maximum linking (see treapify()).
 */

#pragma once

#include "smoothheap/heap_core.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smoothheap {

enum class DecreaseKeyPolicy : std::uint8_t { kSimple, kBuffered };
enum class DeletePolicy : std::uint8_t { kViaDecreaseKey, kEagerLinkChildren, kLazySplice };

struct HeapConfig {
    Linking linking = Linking::kStable;
    DecreaseKeyPolicy decrease_key = DecreaseKeyPolicy::kSimple;
    DeletePolicy delete_policy = DeletePolicy::kViaDecreaseKey;
    bool audit = false;  // stamp links so link order is recoverable

    friend bool operator==(const HeapConfig&, const HeapConfig&) = default;
};

inline HeapConfig smooth_config() { return {}; }
inline HeapConfig slim_config() {
    HeapConfig c;
    c.linking = Linking::kOneSided;
    return c;
}

class EmptyHeapError : public std::out_of_range {
  public:
    EmptyHeapError() : std::out_of_range("delete-min on an empty heap") {}
};

class KeyIncreaseError : public std::invalid_argument {
  public:
    KeyIncreaseError() : std::invalid_argument("decrease-key would increase the key") {}
};

class IncompatibleHeapsError : public std::invalid_argument {
  public:
    IncompatibleHeapsError() : std::invalid_argument("cannot meld heaps with different configurations") {}
};

/// Buffer capacity for the buffered decrease-key: max(1, floor(lg n)).
inline std::size_t buffer_threshold(std::size_t n) noexcept {
    return n < 2 ? 1 : static_cast<std::size_t>(std::bit_width(n) - 1);
}

/// Leftmost locally maximum linking over detached roots given in list order.
///
/// Scans left to right keeping the scanned prefix on a stack; the prefix is
/// strictly increasing under the tie-break order, so the first node that is
/// not smaller than its right neighbour is the leftmost local maximum.  It is
/// linked with the larger of its two neighbours (the left one on ties) and
/// the scan resumes at the winner.  Uses k-1 links and at most 2(k-1)
/// comparisons for k roots; the result is the treap over list order and key.
template <class Key, class Compare>
NodeId treapify(HeapCollection<Key, Compare>& c, std::span<const NodeId> roots, Linking linking,
                bool stamp = false) {
    if (roots.empty()) throw std::invalid_argument("treapify of an empty root list");
    std::vector<NodeId> stack;
    stack.reserve(32);
    NodeId cur = roots[0];
    std::size_t i = 1;
    const std::size_t k = roots.size();
    bool cur_beats_next = false;  // cur already known >= roots[i]
    while (i < k) {
        const NodeId w = roots[i];
        if (!cur_beats_next && c.compare(cur, w, true) == Ordering::kLess) {
            stack.push_back(cur);
            cur = w;
            ++i;
            continue;
        }
        // cur is the leftmost local maximum.
        if (stack.empty()) {
            c.attach(w, cur, true, linking, stamp);
            cur = w;
            ++i;
            cur_beats_next = false;
            continue;
        }
        const NodeId u = stack.back();
        if (c.compare(w, u, false) == Ordering::kLess) {
            // u has the larger key (ties go left): right link won by u.
            c.attach(u, cur, false, linking, stamp);
            stack.pop_back();
            cur = u;
            cur_beats_next = true;
        } else {
            c.attach(w, cur, true, linking, stamp);
            cur = w;
            ++i;
            cur_beats_next = false;
        }
    }
    // Reached the rightmost root: the stack is increasing, link right to left.
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        c.attach(u, cur, false, linking, stamp);
        cur = u;
    }
    return cur;
}

/// Handle-based entry point for fresh, detached nodes.
template <class Key, class Compare>
NodeHandle treapify(HeapCollection<Key, Compare>& c, std::span<const NodeHandle> roots, Linking linking,
                    bool stamp = false) {
    std::vector<NodeId> ids;
    ids.reserve(roots.size());
    for (NodeHandle h : roots) ids.push_back(c.checked(h));
    const NodeId r = treapify(c, std::span<const NodeId>(ids), linking, stamp);
    c.make_singleton_root(r);
    return c.handle(r);
}

template <class Key, class Compare = std::less<Key>>
class SmoothHeap {
  public:
    using Collection = HeapCollection<Key, Compare>;

    SmoothHeap(Collection& collection, HeapConfig config) : c_(&collection), config_(config) {}

    SmoothHeap(const SmoothHeap&) = delete;
    SmoothHeap& operator=(const SmoothHeap&) = delete;
    SmoothHeap(SmoothHeap&& o) noexcept { swap(o); }
    SmoothHeap& operator=(SmoothHeap&& o) noexcept {
        swap(o);
        return *this;
    }

    const HeapConfig& config() const noexcept { return config_; }
    Collection& collection() const noexcept { return *c_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    NodeId min_root() const noexcept { return head_; }
    std::span<const NodeId> buffer() const noexcept { return buffer_; }
    std::size_t last_consolidation_roots() const noexcept { return last_roots_; }

    std::vector<NodeId> roots() const { return c_->root_list(head_); }

    /// Smaller of the min-root and the buffer minimum; the min-root on ties.
    NodeHandle find_min() const {
        if (buffer_min_ == kNoNode) return c_->handle(head_);
        if (head_ == kNoNode) return c_->handle(buffer_min_);
        return c_->handle(c_->key_less(buffer_min_, head_) ? buffer_min_ : head_);
    }

    /// First position when strictly smaller than the min-root, else second.
    void insert(NodeHandle h) {
        const NodeId x = fresh(h);
        ++size_;
        if (head_ == kNoNode) {
            c_->make_singleton_root(x);
            head_ = x;
            return;
        }
        c_->node(x).place = Place::kRoot;
        if (c_->less(x, head_)) {
            c_->insert_before(head_, x);
            head_ = x;
        } else {
            c_->insert_after(head_, x);
        }
    }

    NodeHandle push(Key key) {
        const NodeHandle h = c_->create(std::move(key));
        insert(h);
        return h;
    }

    /// Lazy insertion at the end of the root list.
    void append(NodeHandle h) {
        const NodeId x = fresh(h);
        ++size_;
        add_root_at_end(x);
    }

    /// Melds `other` into this heap; `other` is left empty.
    void meld(SmoothHeap& other) {
        if (this == &other) return;
        if (!(config_ == other.config_) || c_ != other.c_) throw IncompatibleHeapsError();
        if (config_.decrease_key == DecreaseKeyPolicy::kBuffered) {
            if (other.size_ > size_) {
                empty_buffer();
                std::swap(buffer_, other.buffer_);
                std::swap(buffer_min_, other.buffer_min_);
            } else {
                other.empty_buffer();
            }
        }
        if (other.head_ != kNoNode) {
            if (head_ == kNoNode) {
                head_ = other.head_;
            } else {
                c_->catenate_roots(head_, other.head_);
                if (c_->less(other.head_, head_)) head_ = other.head_;
            }
        }
        size_ += other.size_;
        other.head_ = kNoNode;
        other.size_ = 0;
        other.buffer_.clear();
        other.buffer_min_ = kNoNode;
    }

    /// Removes and returns the node find_min() reports.  The node stays
    /// allocated and detached; release it through the collection.
    NodeHandle delete_min() {
        if (size_ == 0) throw EmptyHeapError();
        if (config_.decrease_key == DecreaseKeyPolicy::kBuffered) empty_buffer();
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
        if (roots.empty()) {
            head_ = kNoNode;
        } else {
            head_ = treapify(*c_, std::span<const NodeId>(roots), config_.linking, config_.audit);
            c_->make_singleton_root(head_);
        }
        return c_->handle(x);
    }

    void decrease_key(NodeHandle h, Key key) {
        const NodeId x = c_->checked(h);
        if (c_->key_compare()(c_->node(x).key, key)) throw KeyIncreaseError();
        c_->node(x).key = std::move(key);
        decreased(x);
    }

    /// Arbitrary deletion under the configured delete policy.
    void erase(NodeHandle h) {
        const NodeId x = c_->checked(h);
        // The splicing policies only work on root-list and sibling-list slots.
        if (config_.delete_policy != DeletePolicy::kViaDecreaseKey &&
            (c_->node(x).place == Place::kBuffered || x == head_)) {
            empty_buffer();
        }
        if (x == head_ && (buffer_min_ == kNoNode || !c_->key_less(buffer_min_, head_))) {
            delete_min();
            return;
        }
        switch (config_.delete_policy) {
            case DeletePolicy::kViaDecreaseKey:
                c_->node(x).below_all = true;
                decreased(x);
                delete_min();
                return;
            case DeletePolicy::kEagerLinkChildren: {
                std::vector<NodeId> kids = c_->take_children(x);
                if (kids.empty()) {
                    c_->cut_from_list(x);
                } else {
                    const NodeId only = treapify(*c_, std::span<const NodeId>(kids), config_.linking, config_.audit);
                    c_->replace_in_list(x, only);
                }
                break;
            }
            case DeletePolicy::kLazySplice:
                c_->splice_children_in_place(x);
                break;
        }
        detach(x);
        --size_;
        if (buffer_.size() >= buffer_threshold(size_)) empty_buffer();
    }

    /// Sorts the buffered roots non-increasingly, chains them with leftmost
    /// locally maximum linking (every link a left link) and adds the
    /// surviving root to the root list.
    void empty_buffer() {
        if (buffer_.empty()) return;
        std::sort(buffer_.begin(), buffer_.end(), [this](NodeId a, NodeId b) { return buffer_before(b, a); });
        const NodeId r = treapify(*c_, std::span<const NodeId>(buffer_), config_.linking, config_.audit);
        buffer_.clear();
        buffer_min_ = kNoNode;
        add_root_at_end(r);
    }

    /// Sorting-mode entry: fresh nodes become the root list in the given
    /// order and are combined by one round of linking, as if they were the
    /// children of a deleted min-root.
    void load_sorting_input(std::span<const NodeHandle> nodes) {
        if (size_ != 0) throw std::logic_error("sorting input requires an empty heap");
        if (nodes.empty()) return;
        std::vector<NodeId> ids;
        ids.reserve(nodes.size());
        for (NodeHandle h : nodes) ids.push_back(fresh(h));
        size_ = ids.size();
        last_roots_ = ids.size();
        head_ = treapify(*c_, std::span<const NodeId>(ids), config_.linking, config_.audit);
        c_->make_singleton_root(head_);
    }

  private:
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
        n.link_stamp = 0;
    }

    void add_root_at_end(NodeId x) {
        if (head_ == kNoNode) {
            c_->make_singleton_root(x);
            head_ = x;
            return;
        }
        c_->node(x).side = Side::kNone;
        c_->node(x).place = Place::kRoot;
        c_->insert_before(head_, x);
        if (c_->less(x, head_)) head_ = x;
    }

    // Buffer order: key, then node id.
    bool buffer_before(NodeId a, NodeId b) {
        ++c_->counters().comparisons;
        if (c_->key_less(a, b)) return true;
        if (c_->key_less(b, a)) return false;
        return a < b;
    }

    void decreased(NodeId x) {
        auto& n = c_->node(x);
        if (n.place == Place::kRoot) {
            if (x != head_ && c_->less(x, head_)) head_ = x;
            return;
        }
        if (n.place == Place::kBuffered) {
            if (x != buffer_min_ && buffer_before(x, buffer_min_)) buffer_min_ = x;
            return;
        }
        if (config_.decrease_key == DecreaseKeyPolicy::kSimple) {
            c_->cut_from_list(x);
            add_root_at_end(x);
            return;
        }
        const NodeId y = c_->leftmost_child(x);
        if (y == kNoNode) {
            c_->cut_from_list(x);
        } else {
            c_->cut_from_list(y);
            c_->replace_in_list(x, y);
        }
        n.place = Place::kBuffered;
        n.side = Side::kNone;
        buffer_.push_back(x);
        if (buffer_min_ == kNoNode || buffer_before(x, buffer_min_)) buffer_min_ = x;
        if (buffer_.size() >= buffer_threshold(size_)) empty_buffer();
    }

    void swap(SmoothHeap& o) noexcept {
        std::swap(c_, o.c_);
        std::swap(config_, o.config_);
        std::swap(head_, o.head_);
        std::swap(size_, o.size_);
        std::swap(buffer_, o.buffer_);
        std::swap(buffer_min_, o.buffer_min_);
        std::swap(last_roots_, o.last_roots_);
    }

    Collection* c_ = nullptr;
    HeapConfig config_{};
    NodeId head_ = kNoNode;
    std::size_t size_ = 0;
    std::vector<NodeId> buffer_;
    NodeId buffer_min_ = kNoNode;
    std::size_t last_roots_ = 0;
};

}  // namespace smoothheap
