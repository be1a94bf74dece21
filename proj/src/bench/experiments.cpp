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

#include "smoothheap/bench/experiments.hpp"

#include "smoothheap/workloads/generators.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace smoothheap::bench {

namespace {

using workloads::HeapKind;

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first failure.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);
}

template <class Fn>
ResultRow timed(Fn&& run) {
    const auto start = std::chrono::steady_clock::now();
    const Counters c = run();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    ResultRow row;
    row.comparisons = c.comparisons;
    row.links = c.links;
    row.wall_nanos = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
    return row;
}

void require_heaps(const std::vector<HeapKind>& heaps) {
    if (heaps.empty()) throw std::invalid_argument("no heaps selected");
}

struct Task {
    std::uint64_t n;
    double param;
    std::uint64_t trial;
};

std::vector<Task> tasks(const std::vector<std::uint64_t>& sizes, const std::vector<double>& params, std::size_t trials) {
    std::vector<Task> out;
    for (std::uint64_t n : sizes) {
        for (double p : params) {
            for (std::uint64_t t = 0; t < trials; ++t) out.push_back({n, p, t});
        }
    }
    return out;
}

workloads::Permutation sort_input(SortFamily f, std::uint64_t n, double param, std::uint64_t seed) {
    switch (f) {
        case SortFamily::kUniform: return workloads::gen_uniform(n, seed);
        case SortFamily::kSeparable: return workloads::gen_separable(n, seed);
        case SortFamily::kLocalized: return workloads::gen_localized(n, param, seed);
        case SortFamily::kBlocks: return workloads::gen_sorted_blocks(n, static_cast<std::size_t>(param), seed);
    }
    throw std::logic_error("unknown sort family");
}

}  // namespace

std::optional<SortFamily> parse_sort_family(std::string_view name) noexcept {
    for (SortFamily f : {SortFamily::kUniform, SortFamily::kSeparable, SortFamily::kLocalized, SortFamily::kBlocks}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<GraphFamily> parse_graph_family(std::string_view name) noexcept {
    for (GraphFamily f : {GraphFamily::kErdosRenyi, GraphFamily::kRegular}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view family_name(SortFamily f) noexcept {
    switch (f) {
        case SortFamily::kUniform: return "uniform";
        case SortFamily::kSeparable: return "separable";
        case SortFamily::kLocalized: return "localized";
        case SortFamily::kBlocks: return "blocks";
    }
    return "?";
}

std::string_view family_name(GraphFamily f) noexcept { return f == GraphFamily::kErdosRenyi ? "er" : "regular"; }

std::string experiment_name(SortFamily f) { return "sort-" + std::string(family_name(f)); }
std::string experiment_name(GraphFamily f) { return "dijkstra-" + std::string(family_name(f)); }

std::size_t default_trials(SortFamily f) noexcept {
    switch (f) {
        case SortFamily::kUniform: return 5;
        case SortFamily::kSeparable: return 20;
        case SortFamily::kLocalized: return 10;
        case SortFamily::kBlocks: return 20;
    }
    return 1;
}

std::vector<double> default_params(SortFamily f) {
    if (f == SortFamily::kLocalized) return {0.15};
    if (f == SortFamily::kBlocks) return {2000.0};
    return {0.0};
}

std::vector<HeapKind> all_heap_kinds() {
    return {HeapKind::kSmooth, HeapKind::kSlim, HeapKind::kPairing, HeapKind::kPairingClassic, HeapKind::kPairingPure};
}

std::vector<ResultRow> run_sort_bench(const SortBenchOptions& o) {
    require_heaps(o.heaps);
    std::vector<double> params = o.params.empty() ? default_params(o.family) : o.params;
    if (o.family == SortFamily::kUniform || o.family == SortFamily::kSeparable) params = {0.0};
    for (double p : params) {
        if (o.family == SortFamily::kLocalized && !(p >= 0.0 && std::isfinite(p))) {
            throw std::invalid_argument("epsilon must be finite and non-negative");
        }
        if (o.family == SortFamily::kBlocks && !(p >= 1.0 && p == std::floor(p) && p < 1e15)) {
            throw std::invalid_argument("block bound B must be a positive integer");
        }
    }
    for (std::uint64_t n : o.sizes) {
        if (n == 0) throw std::invalid_argument("sizes must be positive");
    }

    const std::vector<Task> work = tasks(o.sizes, params, o.trials);
    std::vector<std::vector<ResultRow>> per_task(work.size());
    const std::string experiment = experiment_name(o.family);
    parallel_for(work.size(), o.jobs, [&](std::size_t i) {
        const Task& t = work[i];
        const workloads::Permutation perm = sort_input(o.family, t.n, t.param, o.seed + t.trial);
        for (HeapKind h : o.heaps) {
            ResultRow row = timed([&] { return workloads::run_sorting(h, perm).counters; });
            row.experiment = experiment;
            row.heap = workloads::heap_kind_name(h);
            row.n = t.n;
            row.param = t.param;
            row.trial = t.trial;
            per_task[i].push_back(std::move(row));
        }
    });
    std::vector<ResultRow> rows;
    for (auto& v : per_task) rows.insert(rows.end(), v.begin(), v.end());
    sort_canonical(rows);
    return rows;
}

std::vector<ResultRow> run_dijkstra_bench(const DijkstraBenchOptions& o) {
    require_heaps(o.heaps);
    std::vector<double> params = o.family == GraphFamily::kErdosRenyi ? o.probabilities : std::vector<double>{0.0};
    if (params.empty()) params = {1.0};
    for (double p : params) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    for (std::uint64_t n : o.sizes) {
        if (n == 0 || n > UINT32_MAX) throw std::invalid_argument("vertex count out of range");
    }

    const std::vector<Task> work = tasks(o.sizes, params, o.trials);
    std::vector<std::vector<ResultRow>> per_task(work.size());
    const std::string experiment = experiment_name(o.family);
    parallel_for(work.size(), o.jobs, [&](std::size_t i) {
        const Task& t = work[i];
        const auto n = static_cast<std::uint32_t>(t.n);
        const std::uint64_t seed = o.seed + t.trial;
        const workloads::WeightedGraph g = o.family == GraphFamily::kErdosRenyi
                                               ? workloads::gen_erdos_renyi(n, t.param, seed)
                                               : workloads::gen_regular(n, o.degree, seed);
        std::vector<std::int64_t> reference;
        for (HeapKind h : o.heaps) {
            std::vector<std::int64_t> distances;
            ResultRow row = timed([&] {
                auto r = workloads::run_dijkstra(h, g, 0);
                distances = std::move(r.distances);
                return r.counters;
            });
            if (reference.empty()) {
                reference = std::move(distances);
            } else if (distances != reference) {
                throw workloads::InvariantFailure("heaps disagree on shortest-path distances");
            }
            row.experiment = experiment;
            row.heap = workloads::heap_kind_name(h);
            row.n = t.n;
            row.param = t.param;
            row.trial = t.trial;
            per_task[i].push_back(std::move(row));
        }
    });
    std::vector<ResultRow> rows;
    for (auto& v : per_task) rows.insert(rows.end(), v.begin(), v.end());
    sort_canonical(rows);
    return rows;
}

}  // namespace smoothheap::bench
