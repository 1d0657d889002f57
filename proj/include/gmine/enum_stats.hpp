// Copyright 2026 The gmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace gmine {

struct EnumStats {
  std::uint64_t solutions = 0;
  std::uint64_t success_leaves = 0;
  std::uint64_t failure_leaves = 0;
  std::uint64_t recursive_calls = 0;
  // Largest N(S) vector seen (frontier enumerators only).
  std::uint64_t max_frontier = 0;
  // Self-check violations (amortized enumerator in checked mode).
  std::uint64_t check_violations = 0;

  EnumStats& operator+=(const EnumStats& o) {
    solutions += o.solutions;
    success_leaves += o.success_leaves;
    failure_leaves += o.failure_leaves;
    recursive_calls += o.recursive_calls;
    max_frontier = max_frontier > o.max_frontier ? max_frontier : o.max_frontier;
    check_violations += o.check_violations;
    return *this;
  }
};

struct FailureLeafReport {
  std::uint64_t total_leaves = 0;
  std::uint64_t failure_leaves = 0;
  double failure_pct = 0.0;  // rounded to 2 decimals
};

FailureLeafReport failure_leaf_report(const EnumStats& stats);

}  // namespace gmine
