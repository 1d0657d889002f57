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

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "gmine/enum_stats.hpp"
#include "gmine/static_graph.hpp"

namespace gmine::detail {

// S, and N(S) as a vector whose prefix before a call's start index is that
// call's path-local X. Vertices below the root are implicitly excluded.
class Frontier {
 public:
  explicit Frontier(const StaticGraph& g) : g_(g), in_s_(g.n(), 0), in_f_(g.n(), 0) {}

  void reset(Vertex root) {
    root_ = root;
    s_.assign(1, root);
    f_.clear();
    in_s_[root] = 1;
    for (Vertex w : g_.neighbors(root))
      if (w > root) {
        f_.push_back(w);
        in_f_[w] = 1;
      }
  }
  void clear() {
    for (Vertex v : f_) in_f_[v] = 0;
    for (Vertex v : s_) in_s_[v] = 0;
    f_.clear();
    s_.clear();
  }

  // Adds u to S and its fresh neighbors to the frontier; returns the undo mark.
  std::size_t add(Vertex u) {
    std::size_t mark = f_.size();
    s_.push_back(u);
    in_s_[u] = 1;
    for (Vertex w : g_.neighbors(u))
      if (fresh(w)) {
        f_.push_back(w);
        in_f_[w] = 1;
      }
    return mark;
  }
  void remove(std::size_t mark) {
    while (f_.size() > mark) {
      in_f_[f_.back()] = 0;
      f_.pop_back();
    }
    in_s_[s_.back()] = 0;
    s_.pop_back();
  }

  // Outside S, outside N(S), above the root: N^2(S) \ X when adjacent to N(S).
  bool fresh(Vertex w) const { return w > root_ && !in_s_[w] && !in_f_[w]; }

  const StaticGraph& graph() const { return g_; }
  Vertex root() const { return root_; }
  const std::vector<Vertex>& s() const { return s_; }
  const std::vector<Vertex>& f() const { return f_; }

 private:
  const StaticGraph& g_;
  Vertex root_ = 0;
  std::vector<Vertex> s_, f_;
  std::vector<char> in_s_, in_f_;
};

// Runs body(worker_state, root, stats) for each root; roots are handed out
// through an atomic counter and stats summed.
template <class MakeState, class Body>
EnumStats for_each_root(Vertex n, unsigned threads, MakeState make, Body body) {
  if (threads <= 1 || n < 2) {
    auto st = make();
    EnumStats stats;
    for (Vertex v = 0; v < n; ++v) body(st, v, stats);
    return stats;
  }
  threads = std::min<unsigned>(threads, n);
  std::atomic<Vertex> next{0};
  std::vector<EnumStats> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      auto st = make();
      for (Vertex v; (v = next.fetch_add(1)) < n;) body(st, v, parts[t]);
    });
  for (auto& th : pool) th.join();
  EnumStats total;
  for (auto& p : parts) total += p;
  return total;
}

}  // namespace gmine::detail
