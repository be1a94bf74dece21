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

#include "smoothheap/analysis/differential.hpp"

#include "smoothheap/analysis/checks.hpp"
#include "smoothheap/analysis/oracle.hpp"
#include "smoothheap/workloads/rng.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>

namespace smoothheap::analysis {

namespace {

using Collection = HeapCollection<std::int64_t>;

const char* linking_name(Linking l) { return l == Linking::kStable ? "smooth" : "slim"; }

const char* dk_name(DecreaseKeyPolicy p) { return p == DecreaseKeyPolicy::kSimple ? "simple" : "buffered"; }

const char* delete_name(DeletePolicy p) {
    switch (p) {
        case DeletePolicy::kViaDecreaseKey: return "via-decrease-key";
        case DeletePolicy::kEagerLinkChildren: return "eager-link";
        case DeletePolicy::kLazySplice: return "lazy-splice";
    }
    return "?";
}

enum class Op { kMakeHeap, kInsert, kFindMin, kDeleteMin, kMeld, kDecreaseKey, kErase };

// Relative frequencies, in Op order.
constexpr std::array<std::uint64_t, 7> kWeights{3, 35, 5, 22, 5, 20, 10};

Op draw_op(workloads::SplitMix64& rng) {
    std::uint64_t total = 0;
    for (auto w : kWeights) total += w;
    std::uint64_t x = rng.below(total);
    for (std::size_t i = 0; i < kWeights.size(); ++i) {
        if (x < kWeights[i]) return static_cast<Op>(i);
        x -= kWeights[i];
    }
    return Op::kInsert;
}

template <class Heap>
class Driver {
  public:
    template <class Factory>
    Driver(const HeapVariant& v, const DifferentialOptions& o, Factory make)
        : variant_(v), opt_(o), c_(v.tie_break), rng_(o.seed), make_(std::move(make)) {}

    DifferentialResult run() {
        add_heap();
        for (std::size_t step = 0; step < opt_.operations && result_.ok; ++step) {
            one_step();
            ++result_.operations;
            std::size_t live = 0;
            for (const auto& s : slots_) live += s.members.size();
            result_.max_live_nodes = std::max(result_.max_live_nodes, live);
            if (result_.ok && opt_.validate_every != 0 && (step + 1) % opt_.validate_every == 0) validate_all();
        }
        return result_;
    }

  private:
    struct Slot {
        std::unique_ptr<Heap> heap;
        OracleQueue oracle;
        std::vector<NodeHandle> members;
    };

    void fail(const std::string& what) {
        if (!result_.ok) return;
        result_.ok = false;
        std::ostringstream os;
        os << variant_.name << ": operation " << result_.operations << ": " << what;
        result_.failure = os.str();
    }

    void add_heap() { slots_.push_back(Slot{make_(c_), OracleQueue{}, {}}); }

    void track(NodeHandle h, std::size_t slot) {
        if (owner_.size() <= h.id) {
            owner_.resize(h.id + 1);
            index_.resize(h.id + 1);
        }
        owner_[h.id] = slot;
        index_[h.id] = slots_[slot].members.size();
        slots_[slot].members.push_back(h);
    }

    void untrack(NodeHandle h) {
        auto& m = slots_[owner_[h.id]].members;
        const std::size_t i = index_[h.id];
        m[i] = m.back();
        index_[m[i].id] = i;
        m.pop_back();
    }

    void one_step() {
        const std::size_t s = rng_.below(slots_.size());
        Op op = draw_op(rng_);
        if (op == Op::kMakeHeap && slots_.size() >= opt_.max_heaps) op = Op::kInsert;
        if (op == Op::kMeld && slots_.size() < 2) op = Op::kInsert;
        if ((op == Op::kDeleteMin || op == Op::kDecreaseKey || op == Op::kErase) && slots_[s].members.empty()) {
            op = Op::kInsert;
        }
        switch (op) {
            case Op::kMakeHeap:
                add_heap();
                check(slots_.size() - 1);
                return;
            case Op::kInsert: {
                const auto key = static_cast<std::int64_t>(rng_.below(static_cast<std::uint64_t>(opt_.key_range)));
                const NodeHandle h = c_.create(key);
                slots_[s].heap->insert(h);
                slots_[s].oracle.insert(key);
                track(h, s);
                break;
            }
            case Op::kFindMin:
                break;
            case Op::kDeleteMin: {
                const Counters before = c_.counters();
                const NodeHandle h = slots_[s].heap->delete_min();
                const Counters d = c_.counters() - before;
                ++result_.delete_mins;
                if (variant_.pairing) {
                    ++result_.pairing_rounds_checked;
                    if (d.comparisons != d.links) fail("pairing delete-min with comparisons != links");
                }
                const std::int64_t want = slots_[s].oracle.delete_min();
                if (c_.key(h) != want) {
                    fail("delete-min returned " + std::to_string(c_.key(h)) + ", expected " + std::to_string(want));
                }
                untrack(h);
                c_.release(h);
                break;
            }
            case Op::kMeld: {
                std::size_t t = rng_.below(slots_.size() - 1);
                if (t >= s) ++t;
                slots_[s].heap->meld(*slots_[t].heap);
                slots_[s].oracle.meld(slots_[t].oracle);
                for (NodeHandle h : slots_[t].members) track(h, s);
                slots_[t].members.clear();
                if (slots_[t].heap->size() != 0) fail("melded-away heap is not empty");
                // Drop the consumed heap; the last slot moves into its place.
                if (t != slots_.size() - 1) {
                    slots_[t] = std::move(slots_.back());
                    for (NodeHandle h : slots_[t].members) owner_[h.id] = t;
                }
                slots_.pop_back();
                check(s == slots_.size() ? t : s);
                return;
            }
            case Op::kDecreaseKey: {
                const NodeHandle h = slots_[s].members[rng_.below(slots_[s].members.size())];
                const std::int64_t old = c_.key(h);
                const std::int64_t span = std::min<std::int64_t>(old, opt_.key_range / 4);
                const std::int64_t key = old - static_cast<std::int64_t>(rng_.below(static_cast<std::uint64_t>(span) + 1));
                slots_[s].heap->decrease_key(h, key);
                slots_[s].oracle.decrease_key(old, key);
                break;
            }
            case Op::kErase: {
                const NodeHandle h = slots_[s].members[rng_.below(slots_[s].members.size())];
                const std::int64_t key = c_.key(h);
                slots_[s].heap->erase(h);
                slots_[s].oracle.erase(key);
                untrack(h);
                c_.release(h);
                break;
            }
        }
        check(s);
    }

    void check(std::size_t s) {
        const Heap& heap = *slots_[s].heap;
        const OracleQueue& oracle = slots_[s].oracle;
        if (heap.size() != oracle.size()) fail("size mismatch");
        const NodeHandle m = heap.find_min();
        const auto want = oracle.min();
        if (!want.has_value()) {
            if (m) fail("find-min on an empty heap returned a node");
        } else if (!m) {
            fail("find-min returned nothing on a non-empty heap");
        } else if (c_.key(m) != *want) {
            fail("find-min key " + std::to_string(c_.key(m)) + ", expected " + std::to_string(*want));
        }
        if constexpr (requires { heap.buffer(); }) {
            if (heap.config().decrease_key == DecreaseKeyPolicy::kBuffered) {
                ++result_.buffer_checks;
                if (heap.buffer().size() >= buffer_threshold(heap.size())) fail("buffer reached its threshold");
            }
        }
    }

    void validate_all() {
        const bool sides = !variant_.pairing && variant_.config.linking == Linking::kStable;
        for (const auto& s : slots_) {
            const std::string problem = validate_forest(c_, s.heap->min_root(), sides);
            if (!problem.empty()) {
                fail("structure: " + problem);
                return;
            }
        }
    }

    const HeapVariant& variant_;
    const DifferentialOptions& opt_;
    Collection c_;
    workloads::SplitMix64 rng_;
    std::function<std::unique_ptr<Heap>(Collection&)> make_;
    std::vector<Slot> slots_;
    std::vector<std::size_t> owner_;
    std::vector<std::size_t> index_;
    DifferentialResult result_;
};

}  // namespace

std::vector<HeapVariant> all_heap_variants() {
    std::vector<HeapVariant> out;
    for (Linking l : {Linking::kStable, Linking::kOneSided}) {
        for (DecreaseKeyPolicy dk : {DecreaseKeyPolicy::kSimple, DecreaseKeyPolicy::kBuffered}) {
            for (DeletePolicy del :
                 {DeletePolicy::kViaDecreaseKey, DeletePolicy::kEagerLinkChildren, DeletePolicy::kLazySplice}) {
                HeapVariant v;
                v.config.linking = l;
                v.config.decrease_key = dk;
                v.config.delete_policy = del;
                v.name = std::string(linking_name(l)) + "/" + dk_name(dk) + "/" + delete_name(del);
                out.push_back(v);
            }
        }
        HeapVariant v;
        v.config.linking = l;
        v.config.decrease_key = DecreaseKeyPolicy::kBuffered;
        v.tie_break = TieBreak::kNodeId;
        v.name = std::string(linking_name(l)) + "/buffered/via-decrease-key/node-id-ties";
        out.push_back(v);
    }
    const std::array<std::pair<PairingMode, const char*>, 3> modes{{
        {PairingMode::kClassicSingleTree, "pairing-classic"},
        {PairingMode::kMultiTree, "pairing"},
        {PairingMode::kPure, "pairing-pure"},
    }};
    for (const auto& [mode, name] : modes) {
        HeapVariant v;
        v.pairing = true;
        v.pairing_mode = mode;
        v.name = name;
        out.push_back(v);
    }
    return out;
}

DifferentialResult run_differential(const HeapVariant& variant, const DifferentialOptions& options) {
    if (variant.pairing) {
        using H = PairingHeap<std::int64_t>;
        Driver<H> d(variant, options,
                    [mode = variant.pairing_mode](Collection& c) { return std::make_unique<H>(c, mode); });
        return d.run();
    }
    using H = SmoothHeap<std::int64_t>;
    Driver<H> d(variant, options,
                [config = variant.config](Collection& c) { return std::make_unique<H>(c, config); });
    return d.run();
}

}  // namespace smoothheap::analysis
