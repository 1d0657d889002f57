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
#include <random>
#include <string>
#include <vector>

#include "gmine/static_graph.hpp"

namespace gmine::testing {

inline StaticGraph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return StaticGraph::from_edges(n, e);
}

inline StaticGraph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return StaticGraph::from_edges(n, e);
}

inline StaticGraph clique(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return StaticGraph::from_edges(n, e);
}

// Center 0, leaves 1..leaves.
inline StaticGraph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return StaticGraph::from_edges(leaves + 1, e);
}

inline StaticGraph gnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return StaticGraph::from_edges(n, e);
}

struct Named {
  std::string name;
  StaticGraph g;
};

inline std::vector<Named> toys() {
  std::vector<Named> out;
  for (Vertex n : {3u, 5u, 8u}) {
    out.push_back({"path" + std::to_string(n), path(n)});
    out.push_back({"cycle" + std::to_string(n), cycle(n)});
    out.push_back({"clique" + std::to_string(n), clique(n)});
  }
  out.push_back({"star4", star(4)});
  out.push_back({"star7", star(7)});
  return out;
}

// Toys plus `count` random graphs with n in [lo, hi] and mixed densities.
inline std::vector<Named> corpus(int count, Vertex lo, Vertex hi, std::uint64_t seed) {
  auto out = toys();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> size(lo, hi);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  for (int i = 0; i < count; ++i) {
    Vertex n = size(rng);
    out.push_back({"gnp" + std::to_string(i), gnp(n, dens(rng), rng)});
  }
  return out;
}

struct Collector {
  std::vector<std::vector<Vertex>> sets;
  auto sink() {
    return [this](std::span<const Vertex> s) { sets.emplace_back(s.begin(), s.end()); };
  }
  std::vector<std::vector<Vertex>> sorted() const {
    auto c = sets;
    for (auto& s : c) std::sort(s.begin(), s.end());
    std::sort(c.begin(), c.end());
    return c;
  }
};

}  // namespace gmine::testing
