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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smoothheap::bench {

/// One trial of one heap on one input.  `param` is p, epsilon, B or 0.
struct ResultRow {
    std::string experiment;
    std::string heap;
    std::uint64_t n = 0;
    double param = 0.0;
    std::uint64_t trial = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t links = 0;
    std::uint64_t wall_nanos = 0;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "experiment,heap,n,param,trial,comparisons,links,wall_nanos";

/// Orders by (experiment, heap, n, param, trial).
void sort_canonical(std::vector<ResultRow>& rows);

/// Shortest decimal text that reads back as the same double.
std::string format_param(double value);

/// Header plus rows in canonical order.
void write_csv(std::ostream& os, std::vector<ResultRow> rows);

class CsvParseError : public std::runtime_error {
  public:
    CsvParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Line numbers in errors are 1-based and count the header.
std::vector<ResultRow> read_csv(std::istream& is);

/// lg(n!) in bits.
double log2_factorial(std::uint64_t n);

struct SummaryRow {
    std::string experiment;
    std::string heap;
    std::uint64_t n = 0;
    double param = 0.0;
    std::size_t trials = 0;
    double mean_comparisons = 0.0;
    std::uint64_t min_comparisons = 0;
    std::uint64_t max_comparisons = 0;
    double mean_links = 0.0;
    std::uint64_t min_links = 0;
    std::uint64_t max_links = 0;
    // mean comparisons / lg(n!), sorting experiments only
    std::optional<double> comparisons_per_lg_factorial;
};

/// heap_a over heap_b for one (experiment, n, param).
struct RatioRow {
    std::string experiment;
    std::uint64_t n = 0;
    double param = 0.0;
    std::string heap_a;
    std::string heap_b;
    double comparisons = 0.0;
    double links = 0.0;
};

struct Summary {
    std::vector<SummaryRow> groups;
    std::vector<RatioRow> ratios;

    const SummaryRow* find(std::string_view experiment, std::string_view heap, std::uint64_t n,
                           double param) const noexcept;
    const RatioRow* ratio(std::string_view experiment, std::uint64_t n, double param, std::string_view heap_a,
                          std::string_view heap_b) const noexcept;
};

/// Per-group statistics plus the ratio for every ordered pair of heaps
/// sharing (experiment, n, param).
Summary summarize(const std::vector<ResultRow>& rows);

void write_summary(std::ostream& os, const Summary& summary);

}  // namespace smoothheap::bench
