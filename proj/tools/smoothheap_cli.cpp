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

// smoothheap-cli: benchmarks, audits and self-checks.
//
// Exit status: 0 success, 1 a check failed, 2 usage error, 3 I/O error.

#include "CLI11.hpp"
#include "smoothheap/analysis/audit.hpp"
#include "smoothheap/bench/experiments.hpp"
#include "smoothheap/bench/results.hpp"
#include "smoothheap/bench/selftest.hpp"
#include "smoothheap/workloads/generators.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace smoothheap;

constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;
constexpr int kIoError = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<workloads::HeapKind> parse_heaps(const std::vector<std::string>& names) {
    std::vector<workloads::HeapKind> out;
    for (const std::string& n : names) {
        const auto k = workloads::parse_heap_kind(n);
        if (!k) {
            throw UsageError("unknown heap '" + n + "' (smooth, slim, pairing, pairing-classic, pairing-pure)");
        }
        out.push_back(*k);
    }
    return out;
}

bench::SortFamily parse_sort(const std::string& name) {
    const auto f = bench::parse_sort_family(name);
    if (!f) throw UsageError("unknown family '" + name + "' (uniform, separable, localized, blocks)");
    return *f;
}

bench::GraphFamily parse_graph(const std::string& name) {
    const auto f = bench::parse_graph_family(name);
    if (!f) throw UsageError("unknown family '" + name + "' (er, regular)");
    return *f;
}

// Empty path: $SMOOTHHEAP_OUT_DIR/<default_name> if set, else stdout.
// "-" is stdout.
void emit(const std::string& path, const std::string& default_name, const std::function<void(std::ostream&)>& write) {
    std::string target = path;
    if (target.empty()) {
        if (const char* dir = std::getenv("SMOOTHHEAP_OUT_DIR"); dir != nullptr && *dir != '\0') {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) throw IoError("cannot create output directory '" + std::string(dir) + "': " + ec.message());
            target = (std::filesystem::path(dir) / default_name).string();
        } else {
            target = "-";
        }
    }
    if (target == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + target + "' for writing");
    write(out);
    out.close();
    if (!out) throw IoError("write to '" + target + "' failed");
    std::cerr << "wrote " << target << '\n';
}

unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smoothheap-cli: smooth, slim and pairing heap experiments"};
    app.require_subcommand(1);
    std::function<int()> action;

    // sort-bench
    std::string sort_family;
    std::vector<std::string> sort_heaps{"smooth", "slim", "pairing"};
    std::vector<std::uint64_t> sort_sizes;
    std::vector<double> sort_params;
    std::size_t sort_trials = 0;
    std::uint64_t sort_seed = 1;
    std::string sort_out;
    unsigned sort_jobs = default_jobs();
    auto* sort = app.add_subcommand("sort-bench", "n lazy inserts then n delete-mins on generated permutations");
    sort->add_option("--family", sort_family, "uniform | separable | localized | blocks")->required();
    sort->add_option("--heaps", sort_heaps, "comma-separated heap kinds")->delimiter(',');
    sort->add_option("--sizes", sort_sizes, "comma-separated n values")->delimiter(',')->required();
    sort->add_option("--param", sort_params, "epsilon (localized) or B (blocks) values")->delimiter(',');
    sort->add_option("--trials", sort_trials, "trials per point (default depends on family)");
    sort->add_option("--seed", sort_seed, "base seed; trial t uses seed + t");
    sort->add_option("--out", sort_out, "CSV path, '-' for stdout");
    sort->add_option("--jobs", sort_jobs, "worker threads")->check(CLI::PositiveNumber);
    sort->callback([&] {
        action = [&] {
            bench::SortBenchOptions o;
            o.family = parse_sort(sort_family);
            o.heaps = parse_heaps(sort_heaps);
            o.sizes = sort_sizes;
            o.params = sort_params;
            o.trials = sort_trials != 0 ? sort_trials : bench::default_trials(o.family);
            o.seed = sort_seed;
            o.jobs = sort_jobs;
            const auto rows = bench::run_sort_bench(o);
            emit(sort_out, bench::experiment_name(o.family) + ".csv",
                 [&](std::ostream& os) { bench::write_csv(os, rows); });
            return 0;
        };
    });

    // dijkstra-bench
    std::string dij_family;
    std::vector<std::string> dij_heaps{"smooth", "slim", "pairing"};
    std::vector<std::uint64_t> dij_sizes;
    std::vector<double> dij_p{1.0};
    std::uint32_t dij_degree = bench::kDefaultDegree;
    std::size_t dij_trials = bench::kDefaultDijkstraTrials;
    std::uint64_t dij_seed = 1;
    std::string dij_out;
    unsigned dij_jobs = default_jobs();
    auto* dij = app.add_subcommand("dijkstra-bench", "single-source shortest paths on random graphs");
    dij->add_option("--family", dij_family, "er | regular")->required();
    dij->add_option("--heaps", dij_heaps, "comma-separated heap kinds")->delimiter(',');
    dij->add_option("--sizes", dij_sizes, "comma-separated vertex counts")->delimiter(',')->required();
    dij->add_option("--p", dij_p, "edge probabilities (er)")->delimiter(',');
    dij->add_option("--degree", dij_degree, "vertex degree (regular)");
    dij->add_option("--trials", dij_trials, "trials per point");
    dij->add_option("--seed", dij_seed, "base seed; trial t uses seed + t");
    dij->add_option("--out", dij_out, "CSV path, '-' for stdout");
    dij->add_option("--jobs", dij_jobs, "worker threads")->check(CLI::PositiveNumber);
    dij->callback([&] {
        action = [&] {
            bench::DijkstraBenchOptions o;
            o.family = parse_graph(dij_family);
            o.heaps = parse_heaps(dij_heaps);
            o.sizes = dij_sizes;
            o.probabilities = dij_p;
            o.degree = dij_degree;
            o.trials = dij_trials;
            o.seed = dij_seed;
            o.jobs = dij_jobs;
            const auto rows = bench::run_dijkstra_bench(o);
            emit(dij_out, bench::experiment_name(o.family) + ".csv",
                 [&](std::ostream& os) { bench::write_csv(os, rows); });
            return 0;
        };
    });

    // audit
    std::string audit_mode;
    std::size_t audit_ops = 10000;
    std::size_t audit_cap = 4096;
    std::uint64_t audit_seed = 1;
    std::size_t audit_scripts = 1;
    bool audit_dk = false;
    std::string audit_csv;
    auto* audit = app.add_subcommand("audit", "check amortized bounds on random operation scripts");
    audit->add_option("--mode", audit_mode, "slim | smooth")->required();
    audit->add_option("--ops", audit_ops, "operations per script");
    audit->add_option("--size-cap", audit_cap, "largest heap size")->check(CLI::PositiveNumber);
    audit->add_option("--seed", audit_seed, "base seed; script i uses seed + i");
    audit->add_option("--scripts", audit_scripts, "number of scripts")->check(CLI::PositiveNumber);
    audit->add_flag("--decrease-key", audit_dk, "include simple decrease-key operations");
    audit->add_option("--csv", audit_csv, "write every audited operation to this CSV");
    audit->callback([&] {
        action = [&] {
            analysis::PotentialMode mode{};
            if (audit_mode == "slim") {
                mode = analysis::PotentialMode::kSlim;
            } else if (audit_mode == "smooth") {
                mode = analysis::PotentialMode::kSmooth;
            } else {
                throw UsageError("unknown mode '" + audit_mode + "' (slim, smooth)");
            }
            analysis::AuditReport total;
            total.mode = mode;
            total.min_bound_slack = std::numeric_limits<double>::infinity();
            for (std::size_t s = 0; s < audit_scripts; ++s) {
                const auto script = analysis::random_audit_script(audit_ops, audit_cap, audit_seed + s, audit_dk);
                analysis::AuditReport r = analysis::audit_sequence(script, mode);
                if (audit_scripts > 1) {
                    std::cout << "script " << s << ": " << r.rows.size() << " ops, " << r.failures << " failures\n";
                }
                total.all_pass = total.all_pass && r.all_pass;
                total.failures += r.failures;
                total.max_insert_amortized = std::max(total.max_insert_amortized, r.max_insert_amortized);
                total.min_bound_slack = std::min(total.min_bound_slack, r.min_bound_slack);
                total.rows.insert(total.rows.end(), r.rows.begin(), r.rows.end());
            }
            analysis::write_audit_table(std::cout, total);
            if (!audit_csv.empty()) {
                emit(audit_csv, "", [&](std::ostream& os) { analysis::write_audit_csv(os, total); });
            }
            return total.all_pass ? 0 : kCheckFailed;
        };
    });

    // selftest
    bench::SelftestOptions self;
    auto* selftest = app.add_subcommand("selftest", "differential, link-trace and treapify checks");
    selftest->add_option("--ops", self.operations, "operations per heap variant");
    selftest->add_option("--seed", self.seed, "seed");
    selftest->callback([&] {
        action = [&] {
            return bench::report_selftest(std::cout, bench::run_selftest(self)) ? 0 : kCheckFailed;
        };
    });

    // summarize
    std::string summary_path;
    auto* summarize = app.add_subcommand("summarize", "per-group statistics and heap ratios of a results CSV");
    summarize->add_option("csv", summary_path, "results CSV")->required();
    summarize->callback([&] {
        action = [&] {
            std::ifstream in(summary_path);
            if (!in) throw IoError("cannot open '" + summary_path + "'");
            const auto rows = bench::read_csv(in);
            bench::write_summary(std::cout, bench::summarize(rows));
            return 0;
        };
    });

    // gen
    std::string gen_kind;
    std::string gen_family;
    std::uint64_t gen_n = 0;
    double gen_param = 0.0;
    std::uint32_t gen_degree = bench::kDefaultDegree;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    auto* gen = app.add_subcommand("gen", "dump a generated permutation or graph");
    gen->add_option("kind", gen_kind, "permutation | graph")->required();
    gen->add_option("--family", gen_family, "sort or graph family")->required();
    gen->add_option("--n", gen_n, "size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--param", gen_param, "epsilon, B or edge probability");
    gen->add_option("--degree", gen_degree, "vertex degree (regular)");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--out", gen_out, "output path, '-' for stdout");
    gen->callback([&] {
        action = [&] {
            if (gen_kind == "permutation") {
                const bench::SortFamily f = parse_sort(gen_family);
                workloads::Permutation p;
                switch (f) {
                    case bench::SortFamily::kUniform: p = workloads::gen_uniform(gen_n, gen_seed); break;
                    case bench::SortFamily::kSeparable: p = workloads::gen_separable(gen_n, gen_seed); break;
                    case bench::SortFamily::kLocalized: p = workloads::gen_localized(gen_n, gen_param, gen_seed); break;
                    case bench::SortFamily::kBlocks:
                        if (gen_param < 1.0) throw UsageError("blocks needs --param B >= 1");
                        p = workloads::gen_sorted_blocks(gen_n, static_cast<std::size_t>(gen_param), gen_seed);
                        break;
                }
                emit(gen_out, "", [&](std::ostream& os) { workloads::write_permutation(os, p); });
            } else if (gen_kind == "graph") {
                const bench::GraphFamily f = parse_graph(gen_family);
                const auto n = static_cast<std::uint32_t>(gen_n);
                const workloads::WeightedGraph g = f == bench::GraphFamily::kErdosRenyi
                                                       ? workloads::gen_erdos_renyi(n, gen_param, gen_seed)
                                                       : workloads::gen_regular(n, gen_degree, gen_seed);
                emit(gen_out, "", [&](std::ostream& os) { workloads::write_graph(os, g); });
            } else {
                throw UsageError("unknown kind '" + gen_kind + "' (permutation, graph)");
            }
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsageError;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const bench::CsvParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
