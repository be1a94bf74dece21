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
#include "smoothheap/heap_core.hpp"
#include "smoothheap/workloads/rng.hpp"
#include "support.hpp"

#include <algorithm>

using namespace smoothheap;
using smoothheap::test::Collection;
using smoothheap::test::keys_of;
using smoothheap::test::make_nodes;
using smoothheap::test::make_root_list;

TEST_CASE("compare orders keys and lets the right node win ties") {
    Collection c;
    const auto ids = make_nodes(c, {3, 5, 4, 4});
    CHECK(c.compare(ids[0], ids[1], true) == Ordering::kLess);
    CHECK(c.compare(ids[2], ids[3], true) == Ordering::kGreater);
    CHECK(c.compare(ids[2], ids[3], false) == Ordering::kLess);
    CHECK(c.counters().comparisons == 3);
    CHECK(c.counters().links == 0);
}

TEST_CASE("compare under node-id ties prefers the smaller id regardless of position") {
    Collection c(TieBreak::kNodeId);
    const auto ids = make_nodes(c, {4, 4});
    CHECK(c.compare(ids[0], ids[1], true) == Ordering::kLess);
    CHECK(c.compare(ids[0], ids[1], false) == Ordering::kLess);
    CHECK(c.compare(ids[1], ids[0], true) == Ordering::kGreater);
}

TEST_CASE("one-sided link puts the loser first among the winner's children") {
    SUBCASE("smaller left key wins") {
        Collection c;
        const auto r = make_root_list(c, {3, 5});
        CHECK(c.link_one_sided(r[0], r[1]) == r[0]);
        CHECK(c.children(r[0]) == std::vector<NodeId>{r[1]});
        CHECK(c.counters().links == 1);
        CHECK(c.counters().comparisons == 1);
    }
    SUBCASE("equal keys: the right node wins") {
        Collection c;
        const auto r = make_root_list(c, {4, 4});
        CHECK(c.link_one_sided(r[0], r[1]) == r[1]);
        CHECK(c.children(r[1]) == std::vector<NodeId>{r[0]});
    }
    SUBCASE("existing children shift right") {
        Collection c;
        const auto r = make_root_list(c, {1, 9});
        const NodeId child = c.create(5).id;
        c.push_back_child(r[0], child, Side::kLeft);
        CHECK(c.link_one_sided(r[0], r[1]) == r[0]);
        CHECK(c.children(r[0]) == std::vector<NodeId>{r[1], child});
    }
    SUBCASE("a right-side loser still goes leftmost") {
        Collection c;
        const auto r = make_root_list(c, {2, 7, 3});
        c.link_one_sided(r[0], r[1]);
        c.link_one_sided(r[0], r[2]);
        CHECK(keys_of(c, c.children(r[0])) == std::vector<std::int64_t>{3, 7});
    }
}

TEST_CASE("stable link keeps the loser on its original side") {
    SUBCASE("right link") {
        Collection c;
        const auto r = make_root_list(c, {3, 5});
        CHECK(c.link_stable(r[0], r[1]) == r[0]);
        CHECK(c.rightmost_child(r[0]) == r[1]);
        CHECK(c.node(r[1]).side == Side::kRight);
    }
    SUBCASE("left link") {
        Collection c;
        const auto r = make_root_list(c, {7, 2});
        CHECK(c.link_stable(r[0], r[1]) == r[1]);
        CHECK(c.leftmost_child(r[1]) == r[0]);
        CHECK(c.node(r[0]).side == Side::kLeft);
    }
    SUBCASE("tie is a left link won by the right node") {
        Collection c;
        const auto r = make_root_list(c, {4, 4});
        CHECK(c.link_stable(r[0], r[1]) == r[1]);
        CHECK(c.leftmost_child(r[1]) == r[0]);
        CHECK(c.node(r[0]).side == Side::kLeft);
    }
    SUBCASE("left children precede right children") {
        Collection c;
        const auto r = make_root_list(c, {6, 4, 1, 3, 5});
        c.link_stable(r[1], r[2]);  // 4 loses left
        c.link_stable(r[2], r[3]);  // 3 loses right
        c.link_stable(r[0], r[2]);  // 6 loses left
        c.link_stable(r[2], r[4]);  // 5 loses right
        CHECK(keys_of(c, c.children(r[2])) == std::vector<std::int64_t>{6, 4, 3, 5});
        CHECK(analysis::validate_forest(c, r[2], true).empty());
    }
}

TEST_CASE("cut_from_list repairs the sibling list") {
    Collection c;
    const NodeId p = c.create(0).id;
    c.make_singleton_root(p);
    const auto kids = make_nodes(c, {1, 2, 3});
    for (NodeId k : kids) c.push_back_child(p, k, Side::kLeft);

    SUBCASE("middle child") {
        c.cut_from_list(kids[1]);
        CHECK(c.children(p) == std::vector<NodeId>{kids[0], kids[2]});
        CHECK(c.node(kids[1]).place == Place::kDetached);
    }
    SUBCASE("leftmost child: the next sibling points back to the parent") {
        c.cut_from_list(kids[0]);
        CHECK(c.children(p) == std::vector<NodeId>{kids[1], kids[2]});
        CHECK(c.node(kids[1]).back == p);
        CHECK(c.is_leftmost_child(kids[1]));
    }
    SUBCASE("rightmost child") {
        c.cut_from_list(kids[2]);
        CHECK(c.rightmost_child(p) == kids[1]);
        CHECK(c.children(p) == std::vector<NodeId>{kids[0], kids[1]});
    }
    SUBCASE("sole child") {
        c.cut_from_list(kids[0]);
        c.cut_from_list(kids[1]);
        c.cut_from_list(kids[2]);
        CHECK(c.rightmost_child(p) == kNoNode);
        CHECK(c.children(p).empty());
    }
    SUBCASE("the cut subtree stays intact") {
        const NodeId g = c.create(5).id;
        c.push_back_child(kids[1], g, Side::kRight);
        c.cut_from_list(kids[1]);
        CHECK(c.children(kids[1]) == std::vector<NodeId>{g});
    }
    CHECK(analysis::validate_forest(c, p, false).empty());
}

TEST_CASE("splice_children_in_place") {
    SUBCASE("root: children take its place in the root list") {
        Collection c;
        const auto r = make_root_list(c, {0, 9});
        const auto kids = make_nodes(c, {1, 2, 3});
        for (NodeId k : kids) c.push_back_child(r[0], k, Side::kRight);
        CHECK(c.splice_children_in_place(r[0]) == kids);
        CHECK(keys_of(c, c.root_list(kids[0])) == std::vector<std::int64_t>{1, 2, 3, 9});
        for (NodeId k : kids) {
            CHECK(c.node(k).place == Place::kRoot);
            CHECK(c.node(k).side == Side::kNone);
        }
    }
    SUBCASE("childless root just leaves") {
        Collection c;
        const auto r = make_root_list(c, {0, 9});
        CHECK(c.splice_children_in_place(r[0]).empty());
        CHECK(c.root_list(r[1]) == std::vector<NodeId>{r[1]});
    }
    SUBCASE("child: grandchildren join the sibling list") {
        Collection c;
        const NodeId top = c.create(0).id;
        c.make_singleton_root(top);
        const auto sib = make_nodes(c, {5, 3, 7});  // p, x, q
        for (NodeId s : sib) c.push_back_child(top, s, Side::kLeft);
        const NodeId a = c.create(4).id;
        c.push_back_child(sib[1], a, Side::kRight);
        CHECK(c.splice_children_in_place(sib[1]) == std::vector<NodeId>{a});
        CHECK(c.children(top) == std::vector<NodeId>{sib[0], a, sib[2]});
        CHECK(c.node(a).side == Side::kLeft);
        CHECK(analysis::validate_forest(c, top, true).empty());
    }
}

TEST_CASE("released handles go stale and ids are reused with a new generation") {
    Collection c;
    const NodeHandle h = c.create(1);
    CHECK(c.contains(h));
    c.release(h);
    CHECK_FALSE(c.contains(h));
    CHECK_THROWS_AS(c.key(h), StaleHandleError);
    const NodeHandle h2 = c.create(2);
    CHECK(h2.id == h.id);
    CHECK(h2.generation != h.generation);
    CHECK(c.key(h2) == 2);
}

TEST_CASE("release refuses nodes still in a structure") {
    Collection c;
    const auto r = make_root_list(c, {1, 2});
    CHECK_THROWS_AS(c.release(c.handle(r[0])), std::logic_error);
}

// Random interleavings of links, cuts and splices keep every list well
// formed; a single stable link never changes the symmetric order.
TEST_CASE("list primitives preserve structure under random edits") {
    for (Linking linking : {Linking::kStable, Linking::kOneSided}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            CAPTURE(seed);
            workloads::SplitMix64 rng(seed);
            Collection c;
            std::vector<std::int64_t> keys(40);
            for (auto& k : keys) k = static_cast<std::int64_t>(rng.below(10));
            std::vector<NodeId> all = make_root_list(c, keys);
            NodeId first = all[0];
            std::size_t live = all.size();
            const bool stable = linking == Linking::kStable;

            for (int step = 0; step < 300; ++step) {
                const std::vector<NodeId> roots = c.root_list(first);
                const std::uint64_t what = rng.below(10);
                if (what < 5 && roots.size() >= 2) {
                    const std::size_t i = rng.below(roots.size() - 1);
                    const auto before = analysis::in_order(c, first);
                    const NodeId w = c.link(roots[i], roots[i + 1], linking);
                    if (roots[i] == first || roots[i + 1] == first) first = w;
                    if (stable) CHECK(analysis::in_order(c, first) == before);
                    CHECK(c.node(w).key <= c.node(w == roots[i] ? roots[i + 1] : roots[i]).key);
                } else if (what < 8) {
                    const NodeId x = all[rng.below(all.size())];
                    if (c.node(x).place != Place::kChild) continue;
                    c.cut_from_list(x);
                    c.node(x).side = Side::kNone;
                    c.insert_after(roots[rng.below(roots.size())], x);
                } else {
                    const NodeId x = all[rng.below(all.size())];
                    if (c.node(x).place == Place::kDetached || (x == first && roots.size() == 1 && c.child_count(x) == 0)) {
                        continue;
                    }
                    if (x == first) {
                        const std::vector<NodeId> kids = c.children(x);
                        first = kids.empty() ? c.node(x).next : kids.front();
                    }
                    c.splice_children_in_place(x);
                    --live;
                }
                std::size_t counted = 0;
                const std::string problem = analysis::validate_forest(c, first, stable, &counted);
                REQUIRE_MESSAGE(problem.empty(), problem);
                REQUIRE(counted == live);
            }
        }
    }
}
