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

#include "gmine/static_graph.hpp"

// Brute-force references. Slow on purpose; every fast path is checked against these.
namespace gmine::oracle {

inline constexpr Vertex kDefaultLimit = 20;

struct OracleResult {
  std::vector<std::vector<Vertex>> solutions;  // sorted sets, lexicographic order
  std::uint64_t count = 0;
};

OracleResult brute_k_graphlets(const StaticGraph& g, std::uint32_t k, Vertex limit = kDefaultLimit);

// All connected induced subgraphs of any size.
std::uint64_t brute_all_graphlets(const StaticGraph& g, Vertex limit = kDefaultLimit);

std::vector<std::uint32_t> peel_coreness(const StaticGraph& g);

struct Density {
  std::uint64_t edges = 0;
  std::uint64_t vertices = 1;
  double value() const { return static_cast<double>(edges) / static_cast<double>(vertices); }
};

struct DensestResult {
  Density density;
  std::vector<Vertex> witness;
};

DensestResult brute_densest(const StaticGraph& g, Vertex limit = kDefaultLimit);

// Induced edge count of a vertex set.
std::uint64_t induced_edges(const StaticGraph& g, const std::vector<Vertex>& set);

}  // namespace gmine::oracle
