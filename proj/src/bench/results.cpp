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

#include "smoothheap/bench/results.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace smoothheap::bench {

namespace {

auto row_key(const ResultRow& r) { return std::tie(r.experiment, r.heap, r.n, r.param, r.trial); }

bool is_sorting(std::string_view experiment) { return experiment.rfind("sort-", 0) == 0; }

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

template <class T>
T parse_number(std::string_view text, std::size_t line, const char* field) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        throw CsvParseError(line, std::string("bad ") + field + " value '" + std::string(text) + "'");
    }
    return value;
}

double ratio(double a, double b) { return b == 0.0 ? std::numeric_limits<double>::quiet_NaN() : a / b; }

}  // namespace

void sort_canonical(std::vector<ResultRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) { return row_key(a) < row_key(b); });
}

std::string format_param(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

void write_csv(std::ostream& os, std::vector<ResultRow> rows) {
    sort_canonical(rows);
    os << kCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        for (const std::string* s : {&r.experiment, &r.heap}) {
            if (s->empty() || s->find_first_of(",\r\n") != std::string::npos) {
                throw std::invalid_argument("unwritable CSV field '" + *s + "'");
            }
        }
        os << r.experiment << ',' << r.heap << ',' << r.n << ',' << format_param(r.param) << ',' << r.trial << ','
           << r.comparisons << ',' << r.links << ',' << r.wall_nanos << '\n';
    }
}

CsvParseError::CsvParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<ResultRow> read_csv(std::istream& is) {
    std::vector<ResultRow> rows;
    std::set<std::tuple<std::string, std::string, std::uint64_t, double, std::uint64_t>> seen;
    std::string text;
    std::size_t line = 0;
    bool header = false;
    while (std::getline(is, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        if (!header) {
            if (text != kCsvHeader) throw CsvParseError(line, "expected header '" + std::string(kCsvHeader) + "'");
            header = true;
            continue;
        }
        const auto f = split(text);
        if (f.size() != 8) throw CsvParseError(line, "expected 8 fields, found " + std::to_string(f.size()));
        if (f[0].empty() || f[1].empty()) throw CsvParseError(line, "empty experiment or heap");
        ResultRow r;
        r.experiment = f[0];
        r.heap = f[1];
        r.n = parse_number<std::uint64_t>(f[2], line, "n");
        r.param = parse_number<double>(f[3], line, "param");
        if (!std::isfinite(r.param)) throw CsvParseError(line, "param is not finite");
        r.trial = parse_number<std::uint64_t>(f[4], line, "trial");
        r.comparisons = parse_number<std::uint64_t>(f[5], line, "comparisons");
        r.links = parse_number<std::uint64_t>(f[6], line, "links");
        r.wall_nanos = parse_number<std::uint64_t>(f[7], line, "wall_nanos");
        if (!seen.emplace(r.experiment, r.heap, r.n, r.param, r.trial).second) {
            throw CsvParseError(line, "duplicate row for this experiment, heap, n, param and trial");
        }
        rows.push_back(std::move(r));
    }
    if (!header) throw CsvParseError(line + 1, "missing header");
    return rows;
}

double log2_factorial(std::uint64_t n) { return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0); }

Summary summarize(const std::vector<ResultRow>& rows) {
    using GroupKey = std::tuple<std::string, std::uint64_t, double, std::string>;  // heap last for pairing up
    std::map<GroupKey, std::vector<const ResultRow*>> groups;
    for (const ResultRow& r : rows) groups[{r.experiment, r.n, r.param, r.heap}].push_back(&r);

    Summary out;
    for (const auto& [key, members] : groups) {
        SummaryRow s;
        std::tie(s.experiment, s.n, s.param, s.heap) = key;
        s.trials = members.size();
        s.min_comparisons = s.min_links = std::numeric_limits<std::uint64_t>::max();
        double cmp = 0.0;
        double links = 0.0;
        for (const ResultRow* r : members) {
            cmp += static_cast<double>(r->comparisons);
            links += static_cast<double>(r->links);
            s.min_comparisons = std::min(s.min_comparisons, r->comparisons);
            s.max_comparisons = std::max(s.max_comparisons, r->comparisons);
            s.min_links = std::min(s.min_links, r->links);
            s.max_links = std::max(s.max_links, r->links);
        }
        s.mean_comparisons = cmp / static_cast<double>(s.trials);
        s.mean_links = links / static_cast<double>(s.trials);
        if (is_sorting(s.experiment)) s.comparisons_per_lg_factorial = ratio(s.mean_comparisons, log2_factorial(s.n));
        out.groups.push_back(std::move(s));
    }

    // Groups sharing (experiment, n, param) are adjacent.
    for (std::size_t lo = 0; lo < out.groups.size();) {
        std::size_t hi = lo;
        const SummaryRow& g = out.groups[lo];
        while (hi < out.groups.size() && out.groups[hi].experiment == g.experiment && out.groups[hi].n == g.n &&
               out.groups[hi].param == g.param) {
            ++hi;
        }
        for (std::size_t a = lo; a < hi; ++a) {
            for (std::size_t b = lo; b < hi; ++b) {
                if (a == b) continue;
                const SummaryRow& x = out.groups[a];
                const SummaryRow& y = out.groups[b];
                out.ratios.push_back(RatioRow{x.experiment, x.n, x.param, x.heap, y.heap,
                                              ratio(x.mean_comparisons, y.mean_comparisons),
                                              ratio(x.mean_links, y.mean_links)});
            }
        }
        lo = hi;
    }
    return out;
}

const SummaryRow* Summary::find(std::string_view experiment, std::string_view heap, std::uint64_t n,
                                double param) const noexcept {
    for (const SummaryRow& s : groups) {
        if (s.experiment == experiment && s.heap == heap && s.n == n && s.param == param) return &s;
    }
    return nullptr;
}

const RatioRow* Summary::ratio(std::string_view experiment, std::uint64_t n, double param, std::string_view heap_a,
                               std::string_view heap_b) const noexcept {
    for (const RatioRow& r : ratios) {
        if (r.experiment == experiment && r.n == n && r.param == param && r.heap_a == heap_a && r.heap_b == heap_b) {
            return &r;
        }
    }
    return nullptr;
}

void write_summary(std::ostream& os, const Summary& summary) {
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << std::fixed << std::setprecision(2);
    os << std::left << std::setw(18) << "experiment" << std::setw(16) << "heap" << std::right << std::setw(9) << "n"
       << std::setw(9) << "param" << std::setw(7) << "trials" << std::setw(15) << "cmp_mean" << std::setw(13)
       << "cmp_min" << std::setw(13) << "cmp_max" << std::setw(15) << "links_mean" << std::setw(13) << "links_min"
       << std::setw(13) << "links_max" << std::setw(12) << "cmp/lg(n!)" << '\n';
    for (const SummaryRow& s : summary.groups) {
        os << std::left << std::setw(18) << s.experiment << std::setw(16) << s.heap << std::right << std::setw(9)
           << s.n << std::setw(9) << format_param(s.param) << std::setw(7) << s.trials << std::setw(15)
           << s.mean_comparisons << std::setw(13) << s.min_comparisons << std::setw(13) << s.max_comparisons
           << std::setw(15) << s.mean_links << std::setw(13) << s.min_links << std::setw(13) << s.max_links;
        if (s.comparisons_per_lg_factorial) {
            os << std::setprecision(4) << std::setw(12) << *s.comparisons_per_lg_factorial << std::setprecision(2);
        } else {
            os << std::setw(12) << "-";
        }
        os << '\n';
    }
    if (!summary.ratios.empty()) {
        os << '\n'
           << std::left << std::setw(18) << "experiment" << std::right << std::setw(9) << "n" << std::setw(9)
           << "param" << "  " << std::left << std::setw(34) << "ratio" << std::right << std::setw(12) << "cmp"
           << std::setw(12) << "links" << '\n';
        os << std::setprecision(4);
        for (const RatioRow& r : summary.ratios) {
            os << std::left << std::setw(18) << r.experiment << std::right << std::setw(9) << r.n << std::setw(9)
               << format_param(r.param) << "  " << std::left << std::setw(34) << (r.heap_a + "/" + r.heap_b)
               << std::right << std::setw(12) << r.comparisons << std::setw(12) << r.links << '\n';
        }
    }
    os.flags(flags);
    os.precision(precision);
}

}  // namespace smoothheap::bench
