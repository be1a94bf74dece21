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

#include "smoothheap/analysis/audit.hpp"

#include "smoothheap/smooth_heap.hpp"
#include "smoothheap/workloads/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <set>
#include <utility>

namespace smoothheap::analysis {

namespace {

constexpr int kOrdinalBits = 22;

struct ScriptHeap {
    std::set<std::pair<std::int64_t, std::uint32_t>> by_key;
    std::vector<std::uint32_t> live;
};

}  // namespace

std::string_view audit_op_name(AuditOpKind kind) noexcept {
    switch (kind) {
        case AuditOpKind::kMakeHeap: return "make-heap";
        case AuditOpKind::kInsert: return "insert";
        case AuditOpKind::kMeld: return "meld";
        case AuditOpKind::kFindMin: return "find-min";
        case AuditOpKind::kDeleteMin: return "delete-min";
        case AuditOpKind::kDecreaseKey: return "decrease-key";
        case AuditOpKind::kErase: return "delete";
    }
    return "?";
}

AuditScript random_audit_script(std::size_t ops, std::size_t size_cap, std::uint64_t seed, bool with_decrease_key) {
    if (size_cap == 0) throw std::invalid_argument("size cap must be positive");
    if (ops >= (std::size_t{1} << kOrdinalBits)) throw std::invalid_argument("script too long for distinct keys");
    constexpr std::size_t kMaxHeaps = 8;
    workloads::SplitMix64 rng(seed);
    AuditScript script;
    script.ops.reserve(ops);
    std::vector<ScriptHeap> heaps(1);
    std::vector<std::pair<std::uint32_t, std::size_t>> where;  // ordinal -> (heap, index in live)
    std::vector<std::int64_t> key_of;

    auto remove_live = [&](std::uint32_t ordinal) {
        auto [h, i] = where[ordinal];
        auto& live = heaps[h].live;
        live[i] = live.back();
        where[live[i]].second = i;
        live.pop_back();
    };

    // insert, delete-min, find-min, meld, make-heap, decrease-key
    const std::array<std::uint64_t, 6> weights{40, 30, 6, 8, 4, with_decrease_key ? 12U : 0U};
    std::uint64_t total = 0;
    for (auto w : weights) total += w;

    while (script.ops.size() < ops) {
        std::uint64_t x = rng.below(total);
        std::size_t choice = 0;
        while (x >= weights[choice]) x -= weights[choice++];
        const auto h = static_cast<std::uint32_t>(rng.below(heaps.size()));
        AuditOp op;
        op.heap = h;
        switch (choice) {
            case 0: {
                if (heaps[h].live.size() >= size_cap) continue;
                const auto ordinal = static_cast<std::uint32_t>(key_of.size());
                const std::int64_t key = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << 30) << kOrdinalBits) | ordinal;
                op.kind = AuditOpKind::kInsert;
                op.key = key;
                key_of.push_back(key);
                where.emplace_back(h, heaps[h].live.size());
                heaps[h].live.push_back(ordinal);
                heaps[h].by_key.emplace(key, ordinal);
                break;
            }
            case 1: {
                if (heaps[h].live.empty()) continue;
                const auto first = heaps[h].by_key.begin();
                remove_live(first->second);
                heaps[h].by_key.erase(first);
                op.kind = AuditOpKind::kDeleteMin;
                break;
            }
            case 2:
                op.kind = AuditOpKind::kFindMin;
                break;
            case 3: {
                if (heaps.size() < 2) continue;
                auto t = static_cast<std::uint32_t>(rng.below(heaps.size() - 1));
                if (t >= h) ++t;
                if (heaps[h].live.size() + heaps[t].live.size() > size_cap) continue;
                for (std::uint32_t o : heaps[t].live) {
                    where[o] = {h, heaps[h].live.size()};
                    heaps[h].live.push_back(o);
                }
                heaps[h].by_key.merge(heaps[t].by_key);
                heaps[t] = ScriptHeap{};
                op.kind = AuditOpKind::kMeld;
                op.other = t;
                break;
            }
            case 4:
                if (heaps.size() >= kMaxHeaps) continue;
                heaps.emplace_back();
                op.kind = AuditOpKind::kMakeHeap;
                op.heap = static_cast<std::uint32_t>(heaps.size() - 1);
                break;
            default: {
                if (heaps[h].live.empty()) continue;
                const std::uint32_t o = heaps[h].live[rng.below(heaps[h].live.size())];
                const std::int64_t old = key_of[o];
                const std::int64_t high = old >> kOrdinalBits;
                const std::int64_t key =
                    (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(high) + 1)) << kOrdinalBits) | o;
                heaps[h].by_key.erase({old, o});
                heaps[h].by_key.emplace(key, o);
                key_of[o] = key;
                op.kind = AuditOpKind::kDecreaseKey;
                op.node = o;
                op.key = key;
                break;
            }
        }
        script.ops.push_back(op);
    }
    return script;
}

double audit_bound(AuditOpKind kind, PotentialMode mode, std::size_t size) {
    const double lg = size > 1 ? std::log2(static_cast<double>(size)) : 0.0;
    switch (kind) {
        case AuditOpKind::kMakeHeap:
        case AuditOpKind::kMeld:
        case AuditOpKind::kFindMin: return 1.0;
        case AuditOpKind::kInsert: return 3.0;
        case AuditOpKind::kDeleteMin: return 5.0 + (mode == PotentialMode::kSlim ? 3.0 : 4.0) * lg;
        case AuditOpKind::kDecreaseKey: return 3.0 + 2.0 * lg;
        case AuditOpKind::kErase: break;
    }
    throw UnsupportedAuditOp("arbitrary delete is not audited");
}

AuditReport audit_sequence(const AuditScript& script, PotentialMode mode) {
    using Heap = SmoothHeap<std::int64_t>;
    HeapCollection<std::int64_t> c;
    HeapConfig config = mode == PotentialMode::kSlim ? slim_config() : smooth_config();
    config.audit = true;

    std::vector<std::unique_ptr<Heap>> heaps;
    std::vector<double> potential;  // cached per heap; only touched heaps change
    heaps.push_back(std::make_unique<Heap>(c, config));
    potential.push_back(0.0);
    std::vector<NodeHandle> nodes;
    PotentialCalculator<std::int64_t> calc(mode);

    AuditReport report;
    report.mode = mode;
    report.rows.reserve(script.ops.size());
    report.min_bound_slack = std::numeric_limits<double>::infinity();

    auto heap_at = [&](std::uint32_t i) -> Heap& {
        if (i >= heaps.size()) throw std::invalid_argument("script names a heap that does not exist");
        return *heaps[i];
    };

    for (const AuditOp& op : script.ops) {
        AuditRow row;
        row.kind = op.kind;
        std::size_t bound_size = 0;
        switch (op.kind) {
            case AuditOpKind::kMakeHeap:
                heaps.push_back(std::make_unique<Heap>(c, config));
                potential.push_back(0.0);
                row.actual = 1.0;
                break;
            case AuditOpKind::kInsert: {
                Heap& h = heap_at(op.heap);
                row.heap_size = h.size();
                row.potential_before = potential[op.heap];
                const NodeHandle x = c.create(op.key);
                nodes.push_back(x);
                h.insert(x);
                potential[op.heap] = calc.forest(c, h.min_root());
                row.potential_after = potential[op.heap];
                row.actual = 1.0;
                break;
            }
            case AuditOpKind::kMeld: {
                Heap& h = heap_at(op.heap);
                Heap& g = heap_at(op.other);
                row.heap_size = h.size() + g.size();
                row.potential_before = potential[op.heap] + potential[op.other];
                h.meld(g);
                potential[op.heap] = calc.forest(c, h.min_root());
                potential[op.other] = calc.forest(c, g.min_root());
                row.potential_after = potential[op.heap] + potential[op.other];
                row.actual = 1.0;
                break;
            }
            case AuditOpKind::kFindMin: {
                Heap& h = heap_at(op.heap);
                row.heap_size = h.size();
                static_cast<void>(h.find_min());
                row.potential_before = potential[op.heap];
                potential[op.heap] = calc.forest(c, h.min_root());
                row.potential_after = potential[op.heap];
                row.actual = 1.0;
                break;
            }
            case AuditOpKind::kDeleteMin: {
                Heap& h = heap_at(op.heap);
                row.heap_size = h.size();
                bound_size = h.size();
                row.potential_before = potential[op.heap];
                const std::uint64_t links = c.counters().links;
                const NodeHandle x = h.delete_min();
                row.actual = 1.0 + static_cast<double>(c.counters().links - links);
                c.release(x);
                potential[op.heap] = calc.forest(c, h.min_root());
                row.potential_after = potential[op.heap];
                break;
            }
            case AuditOpKind::kDecreaseKey: {
                Heap& h = heap_at(op.heap);
                if (op.node >= nodes.size()) throw std::invalid_argument("script names a node that does not exist");
                const NodeHandle x = nodes[op.node];
                row.heap_size = h.size();
                bound_size = subtree_size(c, c.checked(x));
                row.potential_before = potential[op.heap];
                h.decrease_key(x, op.key);
                potential[op.heap] = calc.forest(c, h.min_root());
                row.potential_after = potential[op.heap];
                row.actual = 1.0;
                break;
            }
            case AuditOpKind::kErase:
                throw UnsupportedAuditOp("arbitrary delete is not audited");
        }
        row.bound = audit_bound(op.kind, mode, bound_size);
        row.amortized = row.actual + row.potential_after - row.potential_before;
        row.pass = row.amortized <= row.bound + kAuditSlack;
        if (!row.pass) {
            report.all_pass = false;
            ++report.failures;
        }
        if (op.kind == AuditOpKind::kInsert) report.max_insert_amortized = std::max(report.max_insert_amortized, row.amortized);
        report.min_bound_slack = std::min(report.min_bound_slack, row.bound - row.amortized);
        report.rows.push_back(row);
    }
    if (report.rows.empty()) report.min_bound_slack = 0.0;
    return report;
}

void write_audit_table(std::ostream& os, const AuditReport& report) {
    struct Agg {
        std::size_t count = 0;
        std::size_t failures = 0;
        double max_amortized = -std::numeric_limits<double>::infinity();
        double min_slack = std::numeric_limits<double>::infinity();
    };
    std::array<Agg, 7> agg{};
    for (const AuditRow& r : report.rows) {
        Agg& a = agg[static_cast<std::size_t>(r.kind)];
        ++a.count;
        if (!r.pass) ++a.failures;
        a.max_amortized = std::max(a.max_amortized, r.amortized);
        a.min_slack = std::min(a.min_slack, r.bound - r.amortized);
    }
    os << "mode: " << (report.mode == PotentialMode::kSlim ? "slim" : "smooth") << '\n';
    os << std::left << std::setw(14) << "operation" << std::right << std::setw(10) << "count" << std::setw(16)
       << "max amortized" << std::setw(14) << "min slack" << std::setw(10) << "failures" << '\n';
    os << std::fixed << std::setprecision(4);
    for (std::size_t k = 0; k < agg.size(); ++k) {
        if (agg[k].count == 0) continue;
        os << std::left << std::setw(14) << audit_op_name(static_cast<AuditOpKind>(k)) << std::right << std::setw(10)
           << agg[k].count << std::setw(16) << agg[k].max_amortized << std::setw(14) << agg[k].min_slack << std::setw(10)
           << agg[k].failures << '\n';
    }
    std::size_t shown = 0;
    for (std::size_t i = 0; i < report.rows.size() && shown < 20; ++i) {
        const AuditRow& r = report.rows[i];
        if (r.pass) continue;
        ++shown;
        os << "FAIL op " << i << ' ' << audit_op_name(r.kind) << " n=" << r.heap_size << " actual=" << r.actual
           << " amortized=" << r.amortized << " bound=" << r.bound << '\n';
    }
    os << "allPass: " << (report.all_pass ? "true" : "false") << '\n';
    os.unsetf(std::ios::floatfield);
}

void write_audit_csv(std::ostream& os, const AuditReport& report) {
    os << "index,op,heap_size,actual,potential_before,potential_after,amortized,bound,pass\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const AuditRow& r = report.rows[i];
        os << i << ',' << audit_op_name(r.kind) << ',' << r.heap_size << ',' << r.actual << ',' << r.potential_before
           << ',' << r.potential_after << ',' << r.amortized << ',' << r.bound << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

}  // namespace smoothheap::analysis
