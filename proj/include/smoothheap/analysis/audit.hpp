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

/** \file

  Replays operation scripts on smooth or slim heaps and checks, operation by
  operation, that actual cost plus the change in potential stays within the
  amortized bound:

    make-heap, find-min, meld    1
    insert                       3
    delete-min                   5 + 3 lg n (slim), 5 + 4 lg n (smooth)
    decrease-key (simple)        3 + 2 lg size(x)

  n is the heap size before the operation and size(x) the subtree size of
  the decreased node before the cut.  delete-min costs one plus its links;
  every other operation costs one.
 */

#pragma once

#include "smoothheap/analysis/potential.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace smoothheap::analysis {

enum class AuditOpKind : std::uint8_t { kMakeHeap, kInsert, kMeld, kFindMin, kDeleteMin, kDecreaseKey, kErase };

std::string_view audit_op_name(AuditOpKind kind) noexcept;

/// Heaps are numbered by creation; heap 0 exists before the first step.
/// Inserted nodes are numbered by insertion.
struct AuditOp {
    AuditOpKind kind = AuditOpKind::kFindMin;
    std::uint32_t heap = 0;
    std::uint32_t other = 0;  // meld: heap consumed into `heap`
    std::uint32_t node = 0;   // decrease-key: insertion number
    std::int64_t key = 0;     // insert and decrease-key
};

struct AuditScript {
    std::vector<AuditOp> ops;
};

/// Thrown for operations outside the audited set (arbitrary delete).
class UnsupportedAuditOp : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Random valid script over distinct keys: make-heap, insert, meld,
/// find-min and delete-min, plus simple decrease-key when requested.  No
/// heap grows beyond `size_cap` nodes.
AuditScript random_audit_script(std::size_t ops, std::size_t size_cap, std::uint64_t seed,
                                bool with_decrease_key = false);

struct AuditRow {
    AuditOpKind kind = AuditOpKind::kFindMin;
    std::size_t heap_size = 0;  // before the operation
    double actual = 0.0;
    double potential_before = 0.0;
    double potential_after = 0.0;
    double amortized = 0.0;
    double bound = 0.0;
    bool pass = true;
};

struct AuditReport {
    PotentialMode mode = PotentialMode::kSlim;
    std::vector<AuditRow> rows;
    bool all_pass = true;
    std::size_t failures = 0;
    double max_insert_amortized = 0.0;
    double min_bound_slack = 0.0;  // smallest bound - amortized over all rows
};

inline constexpr double kAuditSlack = 1e-9;

/// Amortized bound of one operation.  `size` is the heap size for
/// delete-min and the subtree size of the node for decrease-key.
double audit_bound(AuditOpKind kind, PotentialMode mode, std::size_t size);

AuditReport audit_sequence(const AuditScript& script, PotentialMode mode);

/// Aggregate per operation kind plus every failing row.
void write_audit_table(std::ostream& os, const AuditReport& report);
/// One line per operation: index,op,heap_size,actual,potential_before,...
void write_audit_csv(std::ostream& os, const AuditReport& report);

}  // namespace smoothheap::analysis
