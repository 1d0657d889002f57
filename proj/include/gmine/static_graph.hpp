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

#include <span>
#include <utility>
#include <vector>

#include "gmine/common.hpp"

namespace gmine {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in CSR form with sorted adjacency.
class StaticGraph {
 public:
  StaticGraph() = default;

  // Self-loops are dropped and duplicates merged. Every endpoint must be < n.
  static StaticGraph from_edges(Vertex n, std::vector<Edge> edges);

  Vertex n() const { return n_; }
  std::uint64_t m() const { return adj_.size() / 2; }
  std::uint32_t max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, lexicographic order.
  std::vector<Edge> edges() const;

  // Original label of a compacted id; identity unless set by the parser.
  Label label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  void set_labels(std::vector<Label> labels);

  bool operator==(const StaticGraph& o) const {
    return n_ == o.n_ && offsets_ == o.offsets_ && adj_ == o.adj_;
  }

 private:
  Vertex n_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<Label> labels_;
};

struct LineGraph {
  StaticGraph graph;
  // edge_of[i] is the edge of the source graph represented by vertex i.
  std::vector<Edge> edge_of;
};

LineGraph line_graph(const StaticGraph& g);

// Vertices reachable from r (r included), capped at k, never entering skip.
std::uint32_t truncated_bfs(const StaticGraph& g, Vertex r, std::uint32_t k,
                            Vertex skip = kNoVertex);

// Whether the induced subgraph on the given vertices is connected.
bool induces_connected(const StaticGraph& g, std::span<const Vertex> vs);

}  // namespace gmine
