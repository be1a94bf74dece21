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
#include "smoothheap/analysis/sweeps.hpp"
#include "smoothheap/smooth_heap.hpp"
#include "smoothheap/workloads/rng.hpp"
#include "support.hpp"

using namespace smoothheap;
using smoothheap::test::Collection;
using smoothheap::test::keys_of;
using smoothheap::test::make_nodes;
using analysis::BinaryTree;

namespace {

constexpr std::size_t npos = BinaryTree::npos;

// Key ranks e<a<g<c<b<d<f<h over the list a..h.
const std::vector<std::int64_t> kEightRootKeys{2, 5, 4, 6, 1, 7, 3, 8};

BinaryTree eight_root_expected() {
    BinaryTree t;
    t.root = 4;  // e
    t.left.assign(8, npos);
    t.right.assign(8, npos);
    t.left[4] = 0;   // e -> a
    t.right[4] = 6;  // e -> g
    t.right[0] = 2;  // a -> c
    t.left[2] = 1;   // c -> b
    t.right[2] = 3;  // c -> d
    t.left[6] = 5;   // g -> f
    t.right[6] = 7;  // g -> h
    return t;
}

}  // namespace

TEST_CASE("a single root needs no links") {
    for (Linking l : {Linking::kStable, Linking::kOneSided}) {
        Collection c;
        const auto ids = make_nodes(c, {5});
        CHECK(treapify(c, std::span<const NodeId>(ids), l) == ids[0]);
        CHECK(c.counters().links == 0);
        CHECK(c.counters().comparisons == 0);
    }
}

TEST_CASE("treapify of [3,1,2]") {
    SUBCASE("one-sided: 3 then 2 pushed leftmost") {
        Collection c;
        const auto ids = make_nodes(c, {3, 1, 2});
        const NodeId r = treapify(c, std::span<const NodeId>(ids), Linking::kOneSided);
        CHECK(r == ids[1]);
        CHECK(keys_of(c, c.children(r)) == std::vector<std::int64_t>{2, 3});
    }
    SUBCASE("stable: 3 on the left, 2 on the right") {
        Collection c;
        const auto ids = make_nodes(c, {3, 1, 2});
        const NodeId r = treapify(c, std::span<const NodeId>(ids), Linking::kStable);
        CHECK(r == ids[1]);
        CHECK(keys_of(c, c.children(r)) == std::vector<std::int64_t>{3, 2});
        CHECK(c.node(ids[0]).side == Side::kLeft);
        CHECK(c.node(ids[2]).side == Side::kRight);
    }
}

TEST_CASE("the reference treap reproduces the hand-built eight-root example") {
    CHECK(analysis::brute_force_treap(kEightRootKeys) == eight_root_expected());
}

TEST_CASE("treapify builds the eight-root example tree in both modes") {
    for (Linking l : {Linking::kStable, Linking::kOneSided}) {
        Collection c;
        const auto ids = make_nodes(c, kEightRootKeys);
        std::vector<LinkRecord> trace;
        c.set_trace(&trace);
        const NodeId r = treapify(c, std::span<const NodeId>(ids), l);
        CHECK(r == ids[4]);
        CHECK(analysis::tree_from_trace(ids, trace) == eight_root_expected());
        CHECK(analysis::check_link_trace(trace));
        CHECK(c.counters().links == 7);
    }
}

TEST_CASE("brute-force treap tie rules") {
    SUBCASE("positional: the rightmost equal key is the root") {
        const BinaryTree t = analysis::brute_force_treap(std::vector<std::int64_t>{4, 4, 4});
        CHECK(t.root == 2);
        CHECK(t.left[2] == 1);
        CHECK(t.left[1] == 0);
    }
    SUBCASE("node id: the smallest id is the root") {
        const std::vector<NodeId> ids{7, 3, 5};
        const BinaryTree t = analysis::brute_force_treap(std::vector<std::int64_t>{4, 4, 4}, TieBreak::kNodeId, ids);
        CHECK(t.root == 1);
        CHECK(t.left[1] == 0);
        CHECK(t.right[1] == 2);
    }
}

TEST_CASE("strictly increasing and decreasing lists") {
    for (Linking l : {Linking::kStable, Linking::kOneSided}) {
        SUBCASE("increasing: each node becomes the right child of its left neighbor") {
            Collection c;
            const auto ids = make_nodes(c, {1, 2, 3, 4, 5});
            std::vector<LinkRecord> trace;
            c.set_trace(&trace);
            CHECK(treapify(c, std::span<const NodeId>(ids), l) == ids[0]);
            REQUIRE(trace.size() == 4);
            // The two rightmost link first.
            CHECK(trace.front() == LinkRecord{ids[3], ids[4], false});
        }
        SUBCASE("decreasing: a chain of left links") {
            Collection c;
            const auto ids = make_nodes(c, {5, 4, 3, 2, 1});
            std::vector<LinkRecord> trace;
            c.set_trace(&trace);
            CHECK(treapify(c, std::span<const NodeId>(ids), l) == ids[4]);
            for (const LinkRecord& r : trace) CHECK(r.loser_was_left);
            CHECK(trace.front() == LinkRecord{ids[1], ids[0], true});
        }
    }
}

TEST_CASE("empty input is rejected") {
    Collection c;
    const std::vector<NodeId> none;
    CHECK_THROWS_AS(treapify(c, std::span<const NodeId>(none), Linking::kStable), std::invalid_argument);
}

TEST_CASE("handle overload returns a root") {
    Collection c;
    std::vector<NodeHandle> hs{c.create(3), c.create(1), c.create(2)};
    const NodeHandle r = treapify(c, std::span<const NodeHandle>(hs), Linking::kStable);
    CHECK(r == hs[1]);
    CHECK(c.node(r.id).place == Place::kRoot);
}

TEST_CASE("exhaustive small-list sweep matches the reference treap") {
    const analysis::SweepResult r = analysis::exhaustive_treapify_sweep(6, 5, 3);
    CHECK_MESSAGE(r.failures == 0, r.first_failure);
    // 2 modes x (sum of k! for k<=6 + 2 tie rules x sum of 3^len for len<=5)
    CHECK(r.cases == 2 * (873 + 2 * 363));
}

TEST_CASE("random long lists: exact link count, at most 2(k-1) comparisons") {
    workloads::SplitMix64 rng(99);
    for (int round = 0; round < 300; ++round) {
        const std::size_t k = 1 + rng.below(200);
        std::vector<std::int64_t> keys(k);
        const std::uint64_t range = round % 3 == 0 ? 4 : 1000000;
        for (auto& key : keys) key = static_cast<std::int64_t>(rng.below(range));
        for (Linking l : {Linking::kStable, Linking::kOneSided}) {
            for (TieBreak tie : {TieBreak::kPosition, TieBreak::kNodeId}) {
                CHECK(analysis::check_treapify_round(keys, l, tie) == "");
                Collection c(tie);
                const auto ids = make_nodes(c, keys);
                treapify(c, std::span<const NodeId>(ids), l);
                CHECK(c.counters().links == k - 1);
                CHECK(c.counters().comparisons <= 2 * (k - 1));
            }
        }
    }
}

TEST_CASE("link stamps record link order") {
    Collection c;
    const auto ids = make_nodes(c, {3, 1, 2});
    treapify(c, std::span<const NodeId>(ids), Linking::kStable, true);
    CHECK(c.node(ids[0]).link_stamp < c.node(ids[2]).link_stamp);
    CHECK(c.node(ids[1]).link_stamp == 0);
}
