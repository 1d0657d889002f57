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

#include <map>
#include <optional>
#include <vector>

#include "gmine/parse.hpp"
#include "gmine/static_graph.hpp"

namespace gmine {

struct TemporalGraph {
  Vertex n = 0;
  std::vector<Label> labels;
  // snapshots[i]: sorted, deduplicated edges (u < v) of snapshot i.
  std::vector<std::vector<Edge>> snapshots;
  std::uint32_t tau() const { return static_cast<std::uint32_t>(snapshots.size()); }
};

// Snapshot i takes the edges with floor((t - t_min) / width) == i.
TemporalGraph bucket_snapshots(const TemporalEdgeList& raw, std::uint64_t width);

inline std::uint64_t edge_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u < v ? u : v) << 32) | (u < v ? v : u);
}

struct EdgeCount {
  std::uint64_t key;
  std::uint32_t count;
  bool operator==(const EdgeCount&) const = default;
};

// Heap-shaped union tree over the snapshots: node 1 is the root, leaves sit
// at [leaf_base, 2 * leaf_base), and every node stores the multiset sum of
// its leaves' edges as (edge, count) pairs sorted by edge.
class SnapshotTree {
 public:
  explicit SnapshotTree(const TemporalGraph& gt);

  std::uint32_t tau() const { return tau_; }
  Vertex n() const { return n_; }
  std::uint32_t leaf_base() const { return leaf_base_; }
  std::uint32_t depth() const { return depth_; }
  const std::vector<EdgeCount>& node(std::uint32_t i) const { return nodes_[i]; }
  // Leaf interval [lo, hi] of node i (may reach into padding).
  std::pair<std::uint32_t, std::uint32_t> covered(std::uint32_t i) const;

  // Maximal nodes whose intervals partition [a, b], left to right.
  std::vector<std::uint32_t> cover_nodes(std::uint32_t a, std::uint32_t b) const;
  // Edges appearing in at least h snapshots of [a, b].
  StaticGraph window_graph(std::uint32_t a, std::uint32_t b, std::uint32_t h) const;
  std::vector<EdgeCount> window_counts(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t tau_, leaf_base_, depth_;
  Vertex n_;
  std::vector<Label> labels_;
  std::vector<std::vector<EdgeCount>> nodes_;
};

// Reference fold over the raw snapshots.
StaticGraph naive_window_graph(const TemporalGraph& gt, std::uint32_t a, std::uint32_t b,
                               std::uint32_t h);

// Bucket peeling, O(n + m).
std::vector<std::uint32_t> coreness_fast(const StaticGraph& g);

struct WindowCore {
  std::uint32_t start, end;
  std::vector<Vertex> core;
};

std::vector<WindowCore> khd_cores(const SnapshotTree& tree, std::uint32_t k, std::uint32_t h,
                                  std::uint32_t w);

double rcd(std::uint32_t coreness, std::uint32_t degree);

enum class HPolicy { kOne, kHalf, kFull };
std::uint32_t resolve_h(HPolicy policy, std::uint32_t w);

// 1, 2, 4, ... up to tau - 1, plus tau - 1 itself.
std::vector<std::uint32_t> window_grid(std::uint32_t tau);

struct ArcdRow {
  Vertex node;
  std::uint32_t w;
  std::uint32_t h;
  double arcd;
};

// Rows ordered by W, then node.
std::vector<ArcdRow> arcd_series(const SnapshotTree& tree, HPolicy policy);

inline constexpr double kDefaultEpsilonZero = 1e-9;

// Smallest W at which the node's ARCD is at most eps0; nullopt means never.
std::map<Vertex, std::optional<std::uint32_t>> falling_points(const std::vector<ArcdRow>& rows,
                                                              double eps0 = kDefaultEpsilonZero);

}  // namespace gmine
