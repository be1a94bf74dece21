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

#include "smoothheap/workloads/generators.hpp"
#include "smoothheap/workloads/rng.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace smoothheap::workloads {

namespace {

Permutation identity(std::size_t n) {
    Permutation p;
    p.elements.resize(n);
    std::iota(p.elements.begin(), p.elements.end(), 1U);
    return p;
}

void shuffle(std::vector<std::uint32_t>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(v[i - 1], v[j]);
    }
}

void separable_shuffle(std::uint32_t* first, std::size_t len, SplitMix64& rng) {
    if (len < 2) return;
    if (rng.coin()) std::reverse(first, first + len);
    const std::size_t half = len / 2;
    separable_shuffle(first, half, rng);
    separable_shuffle(first + half, len - half, rng);
}

bool match_from(const std::vector<std::uint32_t>& seq, const std::vector<std::uint32_t>& pattern,
                std::size_t start, std::vector<std::uint32_t>& picked) {
    const std::size_t k = picked.size();
    if (k == pattern.size()) return true;
    for (std::size_t i = start; i < seq.size(); ++i) {
        // Relative order of the new value against every picked one must
        // agree with the pattern.
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) ok = (seq[i] < picked[j]) == (pattern[k] < pattern[j]);
        if (!ok) continue;
        picked.push_back(seq[i]);
        if (match_from(seq, pattern, i + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (std::uint32_t v : p.elements) {
        if (v == 0 || v > p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation gen_uniform(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Permutation p = identity(n);
    shuffle(p.elements, rng);
    return p;
}

Permutation gen_separable(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Permutation p = identity(n);
    separable_shuffle(p.elements.data(), n, rng);
    return p;
}

Permutation gen_localized(std::size_t n, double epsilon, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double sigma = epsilon * static_cast<double>(n);
    std::vector<double> value(n);
    for (std::size_t i = 0; i < n; ++i) value[i] = static_cast<double>(i + 1) + sigma * rng.normal();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return value[a] < value[b]; });
    Permutation p;
    p.elements.resize(n);
    for (std::size_t r = 0; r < n; ++r) p.elements[order[r]] = static_cast<std::uint32_t>(r + 1);
    return p;
}

SortedBlocks gen_sorted_blocks_with_boundaries(std::size_t n, std::size_t max_block, std::uint64_t seed) {
    if (max_block == 0) throw std::invalid_argument("block size bound must be positive");
    SplitMix64 rng(seed);
    SortedBlocks out;
    out.permutation = identity(n);
    shuffle(out.permutation.elements, rng);
    auto& v = out.permutation.elements;
    std::size_t start = 0;
    while (start < n) {
        const std::size_t len = rng.between(1, max_block);
        const std::size_t end = std::min(n, start + len);
        out.block_starts.push_back(start);
        std::sort(v.begin() + static_cast<std::ptrdiff_t>(start), v.begin() + static_cast<std::ptrdiff_t>(end));
        start = end;
    }
    return out;
}

Permutation gen_sorted_blocks(std::size_t n, std::size_t max_block, std::uint64_t seed) {
    return gen_sorted_blocks_with_boundaries(n, max_block, seed).permutation;
}

bool contains_pattern(const Permutation& p, const std::vector<std::uint32_t>& pattern) {
    std::vector<std::uint32_t> picked;
    picked.reserve(pattern.size());
    return match_from(p.elements, pattern, 0, picked);
}

void write_permutation(std::ostream& os, const Permutation& p) {
    for (std::uint32_t v : p.elements) os << v << '\n';
}

}  // namespace smoothheap::workloads
