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

#include <vector>

#include "gmine/enum_stats.hpp"
#include "gmine/mutable_graph.hpp"

namespace gmine {

// At least k vertices (r included) reachable from r.
bool fruitful(const MutableGraph& g, Vertex r, std::uint32_t k);
// A k-vertex connected set through r survives the deletion of x.
bool removable(const MutableGraph& g, Vertex r, Vertex x, std::uint32_t k);

// Vertices x != r whose deletion leaves fewer than k vertices reachable from r.
// One DFS lowpoint pass with subtree sizes.
std::vector<Vertex> mark_mandatory(const MutableGraph& g, Vertex r, std::uint32_t k);

struct AmortizedOptions {
  // Verifies every emission, the small-graph bound before each switch to the
  // linear routine, and the disjointness of the two cut sets. Violations are
  // counted in EnumStats::check_violations.
  bool self_check = false;
};

// All k-graphlets through r in g (whose live part must hold one), with r
// standing for the already chosen vertices in `chosen`. g is restored on return.
EnumStats linear_enum(MutableGraph& g, Vertex r, std::vector<Vertex> chosen, std::uint32_t k_remaining,
                      const Sink& sink = {});

EnumStats amortized_enum(const StaticGraph& g, std::uint32_t k, const Sink& sink = {},
                         const AmortizedOptions& opts = {});

// Every connected induced subgraph, any size.
std::uint64_t enum_all_graphlets(const StaticGraph& g, const Sink& sink = {});

using EdgeSink = std::function<void(std::span<const Edge>)>;

// Connected k-edge subgraphs, via the line graph.
std::uint64_t edge_graphlets(const StaticGraph& g, std::uint32_t k, const EdgeSink& sink = {});

}  // namespace gmine
