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

#include "doctest.h"
#include "smoothheap/analysis/checks.hpp"
#include "smoothheap/analysis/differential.hpp"
#include "smoothheap/smooth_heap.hpp"
#include "smoothheap/workloads/rng.hpp"
#include "support.hpp"

#include <algorithm>
#include <functional>

using namespace smoothheap;
using smoothheap::test::Collection;
using smoothheap::test::keys_of;
using Heap = SmoothHeap<std::int64_t>;

namespace {

HeapConfig make_config(Linking l, DecreaseKeyPolicy dk = DecreaseKeyPolicy::kSimple,
                       DeletePolicy del = DeletePolicy::kViaDecreaseKey) {
    HeapConfig c;
    c.linking = l;
    c.decrease_key = dk;
    c.delete_policy = del;
    return c;
}

const Linking kBoth[] = {Linking::kStable, Linking::kOneSided};

std::vector<NodeHandle> push_all(Heap& h, const std::vector<std::int64_t>& keys) {
    std::vector<NodeHandle> out;
    for (auto k : keys) out.push_back(h.push(k));
    return out;
}

std::vector<std::int64_t> range_keys(std::int64_t from, std::int64_t count) {
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < count; ++i) v.push_back(from + i);
    return v;
}

// Nodes currently below the root level, in id order.
std::vector<NodeId> non_roots(const Collection& c, const std::vector<NodeHandle>& hs) {
    std::vector<NodeId> out;
    for (NodeHandle h : hs) {
        if (c.contains(h) && c.node(h.id).place == Place::kChild) out.push_back(h.id);
    }
    return out;
}

// The list holding a child: its parent's children.
std::vector<NodeId> siblings(const Collection& c, NodeId x) { return c.children(c.parent(x)); }

}  // namespace

TEST_CASE("make-heap and find-min on empty and tiny heaps") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l));
        CHECK_FALSE(h.find_min());
        CHECK(h.size() == 0);
        CHECK(h.empty());
        h.push(5);
        CHECK(c.key(h.find_min()) == 5);
    }
}

TEST_CASE("find-min picks the smaller root") {
    Collection c;
    Heap h(c, slim_config());
    push_all(h, {3, 7});
    CHECK(c.key(h.find_min()) == 3);
}

TEST_CASE("insert goes first if smaller than the min-root, else second") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l));
        h.push(3);
        h.push(9);
        h.push(2);
        CHECK(keys_of(c, h.roots()) == std::vector<std::int64_t>{2, 3, 9});
        h.push(5);
        CHECK(keys_of(c, h.roots()) == std::vector<std::int64_t>{2, 5, 3, 9});
        CHECK(c.counters().links == 0);
        CHECK(c.counters().comparisons == 3);
    }
}

TEST_CASE("insert into an empty heap makes a singleton root list") {
    Collection c;
    Heap h(c, smooth_config());
    const NodeHandle x = h.push(4);
    CHECK(h.roots() == std::vector<NodeId>{x.id});
    CHECK(h.find_min() == x);
}

TEST_CASE("insert rejects a node that is already in a heap") {
    Collection c;
    Heap h(c, smooth_config());
    const NodeHandle x = h.push(4);
    CHECK_THROWS_AS(h.insert(x), std::logic_error);
}

TEST_CASE("meld catenates root lists and keeps the smaller min-root") {
    for (Linking l : kBoth) {
        Collection c;
        Heap a(c, make_config(l));
        Heap b(c, make_config(l));
        push_all(a, {2, 8});
        push_all(b, {7, 9});
        a.meld(b);
        CHECK(c.key(a.find_min()) == 2);
        CHECK(keys_of(c, a.roots()) == std::vector<std::int64_t>{2, 8, 7, 9});
        CHECK(a.size() == 4);
        CHECK(b.empty());
        CHECK(c.counters().links == 0);
    }
}

TEST_CASE("meld with an empty heap changes nothing") {
    Collection c;
    Heap a(c, slim_config());
    Heap b(c, slim_config());
    push_all(a, {4, 6, 5});
    const auto before = a.roots();
    a.meld(b);
    CHECK(a.roots() == before);
    b.meld(a);
    CHECK(b.roots() == before);
    CHECK(a.empty());
}

TEST_CASE("meld rejects heaps with different configurations") {
    Collection c;
    Heap a(c, smooth_config());
    Heap b(c, slim_config());
    CHECK_THROWS_AS(a.meld(b), IncompatibleHeapsError);
}

TEST_CASE("buffered meld empties the smaller heap's buffer") {
    for (Linking l : kBoth) {
        Collection c;
        const HeapConfig cfg = make_config(l, DecreaseKeyPolicy::kBuffered);
        Heap big(c, cfg);
        Heap small(c, cfg);
        const auto big_nodes = push_all(big, range_keys(100, 101));
        big.delete_min();
        const auto small_nodes = push_all(small, range_keys(50, 6));
        small.delete_min();
        REQUIRE(big.size() == 100);
        REQUIRE(small.size() == 5);
        const NodeId nine = non_roots(c, big_nodes).front();
        const NodeId four = non_roots(c, small_nodes).front();
        big.decrease_key(c.handle(nine), 9);
        small.decrease_key(c.handle(four), 4);
        REQUIRE(big.buffer().size() == 1);
        REQUIRE(small.buffer().size() == 1);

        big.meld(small);
        CHECK(big.size() == 105);
        REQUIRE(big.buffer().size() == 1);
        CHECK(big.buffer()[0] == nine);
        CHECK(c.node(four).place == Place::kRoot);
        CHECK(c.key(big.find_min()) == 4);
    }
}

TEST_CASE("find-min consults the buffer") {
    Collection c;
    Heap h(c, make_config(Linking::kOneSided, DecreaseKeyPolicy::kBuffered));
    const auto nodes = push_all(h, {3, 4, 10, 11, 12});
    h.delete_min();
    REQUIRE(c.key(h.find_min()) == 4);
    const NodeId x = non_roots(c, nodes).back();
    h.decrease_key(c.handle(x), 2);
    REQUIRE(h.buffer().size() == 1);
    CHECK(c.key(c.handle(h.min_root())) == 4);
    CHECK(h.find_min().id == x);
}

TEST_CASE("find-min prefers the root on a key tie with the buffer") {
    Collection c;
    Heap h(c, make_config(Linking::kOneSided, DecreaseKeyPolicy::kBuffered));
    const auto nodes = push_all(h, {3, 4, 10, 11, 12});
    h.delete_min();
    h.decrease_key(c.handle(non_roots(c, nodes).back()), 4);
    REQUIRE(h.buffer().size() == 1);
    CHECK(h.find_min().id == h.min_root());
}

TEST_CASE("delete-min of an inserted [3,1,2]") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l));
        push_all(h, {3, 1, 2});
        REQUIRE(keys_of(c, h.roots()) == std::vector<std::int64_t>{1, 2, 3});
        CHECK(c.key(h.delete_min()) == 1);
        REQUIRE(h.roots().size() == 1);
        CHECK(c.key(c.handle(h.min_root())) == 2);
        CHECK(keys_of(c, c.children(h.min_root())) == std::vector<std::int64_t>{3});
    }
}

TEST_CASE("delete-min on a singleton empties the heap") {
    Collection c;
    Heap h(c, smooth_config());
    const NodeHandle x = h.push(7);
    CHECK(h.delete_min() == x);
    CHECK(h.empty());
    CHECK_FALSE(h.find_min());
    CHECK(c.node(x.id).place == Place::kDetached);
    CHECK_THROWS_AS(h.delete_min(), EmptyHeapError);
}

TEST_CASE("delete-min combines the children, then the old roots, as one treap") {
    for (Linking l : kBoth) {
        workloads::SplitMix64 rng(l == Linking::kStable ? 3 : 4);
        Collection c;
        Heap h(c, make_config(l));
        for (int i = 0; i < 30; ++i) h.push(static_cast<std::int64_t>(rng.below(50)) + 10);
        h.delete_min();
        h.push(20);
        h.push(15);
        for (int round = 0; round < 20; ++round) {
            const NodeId x = h.min_root();
            std::vector<NodeId> order = c.children(x);
            const auto roots = h.roots();
            order.insert(order.end(), roots.begin() + 1, roots.end());
            std::vector<LinkRecord> trace;
            c.set_trace(&trace);
            const Counters before = c.counters();
            h.delete_min();
            c.set_trace(nullptr);
            const Counters d = c.counters() - before;
            if (order.empty()) break;
            CHECK(d.links == order.size() - 1);
            CHECK(d.comparisons <= 2 * order.size());
            CHECK(analysis::check_treap_shape(order, keys_of(c, order), trace, h.min_root()));
            h.push(static_cast<std::int64_t>(rng.below(50)));
        }
    }
}

TEST_CASE("simple decrease-key") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l));
        const auto nodes = push_all(h, {2, 5, 9, 7});
        h.delete_min();  // one tree rooted at 5
        SUBCASE("non-root becomes the new min-root") {
            const NodeHandle x = nodes[2];
            REQUIRE(c.node(x.id).place == Place::kChild);
            const Counters before = c.counters();
            h.decrease_key(x, 1);
            CHECK(c.node(x.id).place == Place::kRoot);
            CHECK(h.find_min() == x);
            CHECK(h.roots().size() == 2);
            CHECK((c.counters() - before).links == 0);
            CHECK((c.counters() - before).comparisons <= 2);
        }
        SUBCASE("root keeps its place") {
            const NodeHandle x = nodes[1];
            const auto roots = h.roots();
            h.decrease_key(x, 1);
            CHECK(h.roots() == roots);
            CHECK(c.key(h.find_min()) == 1);
        }
        SUBCASE("equal key is allowed") {
            const NodeHandle x = nodes[3];
            h.decrease_key(x, 7);
            CHECK(c.key(x) == 7);
            CHECK(c.key(h.find_min()) == 5);
        }
        SUBCASE("key increase is rejected") {
            CHECK_THROWS_AS(h.decrease_key(nodes[3], 8), KeyIncreaseError);
        }
        CHECK(analysis::validate_forest(c, h.min_root(), l == Linking::kStable).empty());
    }
}

// For every non-root with siblings on both sides we check the replacement
// rule directly: x's slot goes to its leftmost child, the rest stays with x.
TEST_CASE("buffered decrease-key replaces the node by its leftmost child") {
    for (Linking l : kBoth) {
        std::size_t with_children = 0;
        std::size_t childless = 0;
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            workloads::SplitMix64 rng(seed);
            Collection c;
            Heap h(c, make_config(l, DecreaseKeyPolicy::kBuffered));
            std::vector<NodeHandle> nodes;
            for (int i = 0; i < 64; ++i) nodes.push_back(h.push(static_cast<std::int64_t>(rng.below(1000)) + 1000));
            for (int i = 0; i < 8; ++i) h.delete_min();
            for (NodeId x : non_roots(c, nodes)) {
                const std::vector<NodeId> list = siblings(c, x);
                const auto pos = std::find(list.begin(), list.end(), x) - list.begin();
                if (pos == 0 || pos + 1 == static_cast<long>(list.size())) continue;
                const std::vector<NodeId> kids = c.children(x);
                std::vector<NodeId> want = list;
                std::vector<NodeId> want_kids = kids;
                if (kids.empty()) {
                    want.erase(want.begin() + pos);
                    ++childless;
                } else {
                    want[pos] = kids.front();
                    want_kids.erase(want_kids.begin());
                    ++with_children;
                }
                const NodeId anchor = list[pos - 1];
                const auto buffered = h.buffer().size();
                h.decrease_key(c.handle(x), c.node(x).key - 500);
                if (h.buffer().empty()) break;  // threshold reached; structure changed
                CHECK(h.buffer().size() == buffered + 1);
                CHECK(h.buffer().back() == x);
                CHECK(c.children(x) == want_kids);
                CHECK(siblings(c, anchor) == want);
                break;
            }
        }
        CHECK(with_children > 0);
        CHECK(childless > 0);
    }
}

TEST_CASE("buffered decrease-key of a root leaves the buffer alone") {
    Collection c;
    Heap h(c, make_config(Linking::kStable, DecreaseKeyPolicy::kBuffered));
    const auto nodes = push_all(h, {5, 6, 7});
    h.decrease_key(nodes[2], 1);
    CHECK(h.buffer().empty());
    CHECK(h.find_min() == nodes[2]);
}

TEST_CASE("empty-buffer chains the buffered roots by decreasing key") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l, DecreaseKeyPolicy::kBuffered));
        const auto nodes = push_all(h, range_keys(100, 20));
        h.delete_min();
        REQUIRE(buffer_threshold(h.size()) == 4);
        const auto inner = non_roots(c, nodes);
        REQUIRE(inner.size() >= 3);
        const std::vector<std::int64_t> to{7, 2, 5};
        for (std::size_t i = 0; i < 3; ++i) h.decrease_key(c.handle(inner[i]), to[i]);
        REQUIRE(h.buffer().size() == 3);
        const Counters before = c.counters();
        h.empty_buffer();
        CHECK(h.buffer().empty());
        CHECK((c.counters() - before).links == 2);
        const NodeId two = h.min_root();
        REQUIRE(c.node(two).key == 2);
        const NodeId five = c.leftmost_child(two);
        REQUIRE(c.node(five).key == 5);
        CHECK(c.node(five).side == Side::kLeft);
        const NodeId seven = c.leftmost_child(five);
        CHECK(c.node(seven).key == 7);
        CHECK(analysis::validate_forest(c, h.min_root(), l == Linking::kStable).empty());
    }
}

TEST_CASE("empty-buffer with one or no buffered roots") {
    Collection c;
    Heap h(c, make_config(Linking::kStable, DecreaseKeyPolicy::kBuffered));
    const auto nodes = push_all(h, range_keys(10, 20));
    h.delete_min();
    const auto before_roots = h.roots();
    h.empty_buffer();
    CHECK(h.roots() == before_roots);
    const NodeId x = non_roots(c, nodes).front();
    h.decrease_key(c.handle(x), c.node(x).key);
    const Counters before = c.counters();
    h.empty_buffer();
    CHECK((c.counters() - before).links == 0);
    CHECK(h.roots().back() == x);
}

TEST_CASE("buffer stays below its threshold") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l, DecreaseKeyPolicy::kBuffered));
        workloads::SplitMix64 rng(11);
        std::vector<NodeHandle> nodes;
        for (int i = 0; i < 200; ++i) nodes.push_back(h.push(static_cast<std::int64_t>(rng.below(100000))));
        h.delete_min();
        for (int i = 0; i < 2000; ++i) {
            const NodeHandle x = nodes[rng.below(nodes.size())];
            if (!c.contains(x) || c.node(x.id).place == Place::kDetached) continue;
            h.decrease_key(x, c.key(x) - static_cast<std::int64_t>(rng.below(100)));
            REQUIRE(h.buffer().size() < buffer_threshold(h.size()));
        }
    }
}

TEST_CASE("buffer threshold") {
    CHECK(buffer_threshold(0) == 1);
    CHECK(buffer_threshold(1) == 1);
    CHECK(buffer_threshold(2) == 1);
    CHECK(buffer_threshold(3) == 1);
    CHECK(buffer_threshold(4) == 2);
    CHECK(buffer_threshold(100) == 6);
    CHECK(buffer_threshold(1024) == 10);
}

TEST_CASE("erase of the min-root acts as delete-min") {
    for (DeletePolicy del : {DeletePolicy::kViaDecreaseKey, DeletePolicy::kEagerLinkChildren, DeletePolicy::kLazySplice}) {
        Collection c1;
        Collection c2;
        Heap a(c1, make_config(Linking::kStable, DecreaseKeyPolicy::kSimple, del));
        Heap b(c2, make_config(Linking::kStable, DecreaseKeyPolicy::kSimple, del));
        const auto na = push_all(a, {4, 1, 8, 3, 6});
        push_all(b, {4, 1, 8, 3, 6});
        a.erase(na[1]);
        b.delete_min();
        CHECK(a.roots() == b.roots());
        CHECK(c1.counters() == c2.counters());
    }
}

TEST_CASE("eager erase replaces the node by the treapified root of its children") {
    for (Linking l : kBoth) {
        std::size_t tried = 0;
        for (std::uint64_t seed = 1; seed <= 30 && tried < 10; ++seed) {
            workloads::SplitMix64 rng(seed);
            Collection c;
            Heap h(c, make_config(l, DecreaseKeyPolicy::kSimple, DeletePolicy::kEagerLinkChildren));
            std::vector<NodeHandle> nodes;
            for (int i = 0; i < 40; ++i) nodes.push_back(h.push(static_cast<std::int64_t>(rng.below(100)) + 100));
            for (int i = 0; i < 6; ++i) h.delete_min();
            for (NodeId x : non_roots(c, nodes)) {
                if (c.child_count(x) < 3) continue;
                // Lift x with its subtree into the root list, still above the min-root.
                h.decrease_key(c.handle(x), c.node(x).key);
                REQUIRE(c.node(x).place == Place::kRoot);
                const std::vector<NodeId> kids = c.children(x);
                std::vector<NodeId> roots = h.roots();
                const auto pos = std::find(roots.begin(), roots.end(), x) - roots.begin();
                std::vector<LinkRecord> trace;
                c.set_trace(&trace);
                const Counters before = c.counters();
                h.erase(c.handle(x));
                c.set_trace(nullptr);
                CHECK((c.counters() - before).links == kids.size() - 1);
                const auto tree = analysis::tree_from_trace(kids, trace);
                const NodeId top = kids[tree.root];
                CHECK(analysis::check_treap_shape(kids, keys_of(c, kids), trace, top));
                roots[pos] = top;
                CHECK(h.roots() == roots);
                CHECK(analysis::validate_forest(c, h.min_root(), l == Linking::kStable).empty());
                ++tried;
                break;
            }
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("lazy erase splices the children into the node's place") {
    for (Linking l : kBoth) {
        workloads::SplitMix64 rng(5);
        Collection c;
        Heap h(c, make_config(l, DecreaseKeyPolicy::kSimple, DeletePolicy::kLazySplice));
        std::vector<NodeHandle> nodes;
        for (int i = 0; i < 40; ++i) nodes.push_back(h.push(static_cast<std::int64_t>(rng.below(100))));
        h.delete_min();
        std::size_t checked = 0;
        for (NodeId x : non_roots(c, nodes)) {
            if (c.node(x).place != Place::kChild || c.child_count(x) < 2) continue;
            const NodeId p = c.parent(x);
            std::vector<NodeId> want;
            for (NodeId s : c.children(p)) {
                if (s == x) {
                    for (NodeId k : c.children(x)) want.push_back(k);
                } else {
                    want.push_back(s);
                }
            }
            const Counters before = c.counters();
            h.erase(c.handle(x));
            CHECK((c.counters() - before).links == 0);
            CHECK(c.children(p) == want);
            CHECK(analysis::validate_forest(c, h.min_root(), l == Linking::kStable).empty());
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("erase via decrease-key removes exactly the node") {
    Collection c;
    Heap h(c, slim_config());
    const auto nodes = push_all(h, {5, 3, 9, 1, 7});
    h.delete_min();
    h.erase(nodes[2]);
    std::vector<std::int64_t> out;
    while (!h.empty()) out.push_back(c.key(h.delete_min()));
    CHECK(out == std::vector<std::int64_t>{3, 5, 7});
}

TEST_CASE("sorting entry combines the whole list once") {
    for (Linking l : kBoth) {
        Collection c;
        Heap h(c, make_config(l));
        std::vector<NodeHandle> nodes;
        for (std::int64_t k : {2, 1}) nodes.push_back(c.create(k));
        h.load_sorting_input(nodes);
        CHECK(c.counters().links == 1);
        CHECK(c.key(h.delete_min()) == 1);
        CHECK(c.key(h.delete_min()) == 2);
        CHECK(c.counters().links == 1);
    }
}

TEST_CASE("every heap variant matches the reference queue on short random runs") {
    for (const auto& v : analysis::all_heap_variants()) {
        CAPTURE(v.name);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            analysis::DifferentialOptions o;
            o.operations = 3000;
            o.seed = seed;
            o.key_range = seed == 1 ? 20 : 1000;
            o.validate_every = 1;
            const auto r = analysis::run_differential(v, o);
            CHECK_MESSAGE(r.ok, r.failure);
        }
    }
}
