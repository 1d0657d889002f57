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

#include <optional>
#include <unordered_set>
#include <vector>

#include "gmine/static_graph.hpp"

namespace gmine {

struct OrientationParams {
  double epsilon = 0.5;
  double gamma = 0.25;
  std::uint32_t eta = 3;
  std::uint32_t b = 2;
  double lambda = 0.0;
};

// gamma = eps / 2, eta = 3, b = ceil(eta / gamma * log_{1+gamma} n), lambda = eta / (64 b).
OrientationParams choose_params(Vertex n, double epsilon,
                                std::optional<std::uint32_t> b_override = std::nullopt);

struct Violation {
  Vertex u, v;
  std::uint32_t du, dv;
};

// Every undirected edge is held as b directed copies. Outdegrees count copies.
class OrientedMultigraph {
 public:
  OrientedMultigraph(Vertex n, const OrientationParams& params);

  Vertex n() const { return static_cast<Vertex>(outdeg_.size()); }
  const OrientationParams& params() const { return params_; }
  std::uint32_t outdeg(Vertex u) const { return outdeg_[u]; }
  // Copies currently directed u -> v.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;
  std::uint64_t inserted_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint32_t max_outdeg() const;

  void insert_edge(Vertex u, Vertex v);
  // One copy u -> v with no rebalancing. For building states by hand.
  void insert_directed_raw(Vertex u, Vertex v);

  // Directed edges (u, v) with d+(u) > max{(1 + eta/b) d+(v), floor(b/2)}.
  std::vector<Violation> check_invariant_theta_prime() const;
  bool buckets_consistent() const;
  bool conservation_holds() const;

  std::uint64_t reversals() const { return reversals_; }
  std::uint64_t chain_cap_hits() const { return chain_cap_hits_; }
  // In-neighbor bucket index for outdegree d; -1 is the d = 0 bucket.
  std::int32_t bucket_of(std::uint32_t d) const;

 private:
  struct OutArc {
    Vertex v;
    std::uint32_t mult;
    std::uint32_t in_node;  // u's node in v's buckets
  };
  struct InNode {
    Vertex w;
    std::uint32_t bucket, prev, next;
  };
  struct Bucket {
    std::int32_t j;
    Vertex owner;
    std::uint32_t head, size, prev, next;
  };
  static constexpr std::uint32_t kNil = 0xffffffffu;

  void add_copy(Vertex u, Vertex v);
  void remove_copy(Vertex u, std::size_t arc_index);
  void set_outdeg(Vertex u, std::uint32_t d);
  std::uint32_t find_or_make_bucket(Vertex owner, std::uint32_t near, std::int32_t j);
  std::uint32_t bucket_for_new(Vertex owner, std::int32_t j);
  void node_attach(std::uint32_t node, std::uint32_t bucket);
  void node_detach(std::uint32_t node);
  std::uint32_t new_node(Vertex w, Vertex owner);
  void free_node(std::uint32_t node);
  void cascade(Vertex u);

  OrientationParams params_;
  std::vector<std::uint32_t> outdeg_;
  std::vector<std::vector<OutArc>> out_;
  std::vector<std::uint32_t> bucket_head_;  // per owner, lowest bucket
  std::vector<InNode> nodes_;
  std::vector<std::uint32_t> free_nodes_;
  std::vector<Bucket> buckets_;
  std::vector<std::uint32_t> free_buckets_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_set_;
  double log1p_lambda_;
  std::uint64_t chain_cap_;
  std::uint64_t reversals_ = 0, chain_cap_hits_ = 0;
};

double density_estimate(const OrientedMultigraph& state);

struct LadderStep {
  std::uint32_t i;
  double threshold;
  std::vector<Vertex> set;  // sorted
};

// T_i = { v : d+(v) >= max d+ * (1 + eta/b)^-i } for i = 0 .. floor(log_{1+gamma} n) + 1.
std::vector<LadderStep> density_ladder(const OrientedMultigraph& state);

struct DensestSubgraph {
  std::vector<Vertex> set;
  double density = 0.0;
  std::uint64_t edges = 0;
  std::uint32_t index = 0;  // ladder index of the returned set
  bool exhausted = false;
};

// Smallest k with |T_{k+1}| < (1 + gamma)|T_k|; returns T_{k+1}, density
// measured on g.
DensestSubgraph densest_subgraph(const OrientedMultigraph& state, const StaticGraph& g);

struct DensestRun {
  OrientationParams params;
  double estimate = 0.0;
  DensestSubgraph subgraph;
  std::vector<LadderStep> ladder;
  bool invariant_ok = true;
};

// Inserts the edges of g in (u, v) lexicographic order and extracts the result.
DensestRun run_densest(const StaticGraph& g, double epsilon,
                       std::optional<std::uint32_t> b_override = std::nullopt);

}  // namespace gmine
