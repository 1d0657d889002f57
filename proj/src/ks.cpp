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

#include "gmine/ks.hpp"

#include <cmath>
#include <algorithm>
#include <memory>

#include "frontier.hpp"

namespace gmine {
namespace {

struct KsRun {
  detail::Frontier fr;
  std::uint32_t k;
  const Sink* sink;
  EnumStats* stats = nullptr;
  std::vector<Vertex> out;

  bool enumerate(std::size_t start) {
    ++stats->recursive_calls;
    if (fr.s().size() == k) {
      ++stats->success_leaves;
      ++stats->solutions;
      if (*sink) {
        out = fr.s();
        std::sort(out.begin(), out.end());
        (*sink)(out);
      }
      return true;
    }
    const std::size_t end = fr.f().size();
    stats->max_frontier = std::max<std::uint64_t>(stats->max_frontier, end);
    if (start == end) {
      ++stats->failure_leaves;
      return false;
    }
    bool found = false;
    for (std::size_t i = start; i < end; ++i) {
      auto mark = fr.add(fr.f()[i]);
      bool ok = enumerate(i + 1);
      fr.remove(mark);
      if (!ok) break;
      found = true;
    }
    return found;
  }
};

}  // namespace

EnumStats ks_enumerate(const StaticGraph& g, std::uint32_t k, const Sink& sink, unsigned threads) {
  if (k < 1 || k > g.n()) throw UsageError("ks_enumerate: k must be in [1, n]");
  if (sink) threads = 1;
  return detail::for_each_root(
      g.n(), threads, [&] { return std::make_unique<KsRun>(KsRun{detail::Frontier(g), k, &sink, nullptr, {}}); },
      [&](auto& run, Vertex v, EnumStats& stats) {
        run->stats = &stats;
        run->fr.reset(v);
        run->enumerate(0);
        run->fr.clear();
      });
}

FailureLeafReport failure_leaf_report(const EnumStats& stats) {
  FailureLeafReport r;
  r.failure_leaves = stats.failure_leaves;
  r.total_leaves = stats.failure_leaves + stats.success_leaves;
  if (r.total_leaves > 0)
    r.failure_pct = std::round(1e4 * static_cast<double>(r.failure_leaves) /
                               static_cast<double>(r.total_leaves)) / 100.0;
  return r;
}

}  // namespace gmine
