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
#include <optional>
#include <set>
#include <stdexcept>

namespace smoothheap::analysis {

/// Reference priority queue: an ordered multiset of keys.
class OracleQueue {
  public:
    void insert(std::int64_t key) { keys_.insert(key); }

    std::optional<std::int64_t> min() const {
        if (keys_.empty()) return std::nullopt;
        return *keys_.begin();
    }

    std::int64_t delete_min() {
        if (keys_.empty()) throw std::out_of_range("delete-min on an empty oracle");
        const std::int64_t k = *keys_.begin();
        keys_.erase(keys_.begin());
        return k;
    }

    /// Replaces one occurrence of `from` by `to`.
    void decrease_key(std::int64_t from, std::int64_t to) {
        if (to > from) throw std::invalid_argument("oracle decrease-key would increase the key");
        erase(from);
        keys_.insert(to);
    }

    void erase(std::int64_t key) {
        const auto it = keys_.find(key);
        if (it == keys_.end()) throw std::invalid_argument("key not present in oracle");
        keys_.erase(it);
    }

    /// Moves every key of `other` into this queue.
    void meld(OracleQueue& other) {
        keys_.merge(other.keys_);
        other.keys_.clear();
    }

    std::size_t size() const noexcept { return keys_.size(); }
    bool empty() const noexcept { return keys_.empty(); }

  private:
    std::multiset<std::int64_t> keys_;
};

}  // namespace smoothheap::analysis
