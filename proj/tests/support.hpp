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

// Small helpers shared by the unit tests.

#pragma once

#include "smoothheap/heap_core.hpp"

#include <cstdint>
#include <vector>

namespace smoothheap::test {

using Collection = HeapCollection<std::int64_t>;

inline std::vector<NodeId> make_nodes(Collection& c, const std::vector<std::int64_t>& keys) {
    std::vector<NodeId> ids;
    for (std::int64_t k : keys) ids.push_back(c.create(k).id);
    return ids;
}

/// Fresh nodes wired into one circular root list, in order.
inline std::vector<NodeId> make_root_list(Collection& c, const std::vector<std::int64_t>& keys) {
    std::vector<NodeId> ids = make_nodes(c, keys);
    c.build_root_list(ids);
    return ids;
}

inline std::vector<std::int64_t> keys_of(const Collection& c, const std::vector<NodeId>& ids) {
    std::vector<std::int64_t> out;
    for (NodeId id : ids) out.push_back(c.node(id).key);
    return out;
}

}  // namespace smoothheap::test
