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

#include "smoothheap/bench/selftest.hpp"

#include "smoothheap/analysis/differential.hpp"
#include "smoothheap/analysis/sweeps.hpp"

#include <ostream>

namespace smoothheap::bench {

std::vector<SelftestCheck> run_selftest(const SelftestOptions& o) {
    std::vector<SelftestCheck> out;
    for (const analysis::HeapVariant& v : analysis::all_heap_variants()) {
        analysis::DifferentialOptions d;
        d.operations = o.operations;
        d.seed = o.seed;
        d.validate_every = 1000;
        const analysis::DifferentialResult r = analysis::run_differential(v, d);
        out.push_back({"oracle " + v.name, r.ok,
                       r.ok ? std::to_string(r.operations) + " ops, " + std::to_string(r.delete_mins) + " delete-mins"
                            : r.failure});
    }
    for (Linking l : {Linking::kStable, Linking::kOneSided}) {
        const analysis::LinkTraceResult r = analysis::link_trace_sweep(l, o.trace_delete_mins, o.trace_max_nodes, o.seed);
        out.push_back({std::string("link trace ") + (l == Linking::kStable ? "smooth" : "slim"), r.failures == 0,
                       std::to_string(r.delete_mins) + " delete-mins, " + std::to_string(r.failures) +
                           " failures, largest heap " + std::to_string(r.max_heap_size)});
    }
    const analysis::SweepResult s = analysis::exhaustive_treapify_sweep();
    out.push_back({"treapify exhaustive", s.failures == 0,
                   s.failures == 0 ? std::to_string(s.cases) + " cases" : s.first_failure});
    return out;
}

bool report_selftest(std::ostream& os, const std::vector<SelftestCheck>& checks) {
    bool all = true;
    for (const SelftestCheck& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.pass;
    }
    return all;
}

}  // namespace smoothheap::bench
