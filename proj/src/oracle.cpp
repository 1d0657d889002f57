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

#include "gmine/oracle.hpp"

#include <algorithm>
#include <bit>

namespace gmine::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const StaticGraph& g, Vertex limit) {
  if (g.n() > limit || g.n() > 30) throw UsageError("oracle: graph exceeds the subset limit");
  std::vector<Mask> nb(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) nb[v] |= Mask{1} << w;
  return nb;
}

bool connected(Mask set, const std::vector<Mask>& nb) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

std::vector<Vertex> members(Mask set) {
  std::vector<Vertex> out;
  for (; set; set &= set - 1) out.push_back(static_cast<Vertex>(std::countr_zero(set)));
  return out;
}

}  // namespace

OracleResult brute_k_graphlets(const StaticGraph& g, std::uint32_t k, Vertex limit) {
  if (k < 1 || k > g.n()) throw UsageError("brute_k_graphlets: k out of range");
  auto nb = neighbor_masks(g, limit);
  OracleResult res;
  // Gosper's hack walks k-subsets in increasing mask order.
  Mask set = (k == 32) ? ~Mask{0} : ((Mask{1} << k) - 1);
  const std::uint64_t end = std::uint64_t{1} << g.n();
  while (set < end) {
    if (connected(set, nb)) res.solutions.push_back(members(set));
    Mask c = set & (~set + 1);
    Mask r = set + c;
    if (r == 0) break;
    set = (((r ^ set) >> 2) / c) | r;
  }
  std::sort(res.solutions.begin(), res.solutions.end());
  res.count = res.solutions.size();
  return res;
}

std::uint64_t brute_all_graphlets(const StaticGraph& g, Vertex limit) {
  auto nb = neighbor_masks(g, limit);
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 1; s < end; ++s) count += connected(static_cast<Mask>(s), nb);
  return count;
}

std::vector<std::uint32_t> peel_coreness(const StaticGraph& g) {
  const Vertex n = g.n();
  std::vector<std::uint32_t> deg(n), core(n, 0);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::uint32_t running = 0;
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best == kNoVertex || deg[v] < deg[best])) best = v;
    running = std::max(running, deg[best]);
    core[best] = running;
    gone[best] = 1;
    for (Vertex w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return core;
}

DensestResult brute_densest(const StaticGraph& g, Vertex limit) {
  auto nb = neighbor_masks(g, limit);
  if (g.n() == 0) throw UsageError("brute_densest: empty graph");
  DensestResult best;
  best.density = {0, 1};
  Mask best_set = 0;
  const std::uint64_t end = std::uint64_t{1} << g.n();
  for (std::uint64_t s64 = 1; s64 < end; ++s64) {
    Mask s = static_cast<Mask>(s64);
    std::uint64_t twice = 0;
    for (Mask f = s; f; f &= f - 1) twice += std::popcount(nb[std::countr_zero(f)] & s);
    Density d{twice / 2, static_cast<std::uint64_t>(std::popcount(s))};
    // Exact rational comparison, then smaller set, then lexicographic members.
    auto lhs = d.edges * best.density.vertices, rhs = best.density.edges * d.vertices;
    bool better = best_set == 0 || lhs > rhs;
    if (!better && lhs == rhs) {
      if (d.vertices < best.density.vertices)
        better = true;
      else if (d.vertices == best.density.vertices)
        better = members(s) < members(best_set);
    }
    if (better) {
      best.density = d;
      best_set = s;
    }
  }
  best.witness = members(best_set);
  return best;
}

std::uint64_t induced_edges(const StaticGraph& g, const std::vector<Vertex>& set) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : set) in[v] = 1;
  std::uint64_t twice = 0;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v)) twice += in[w];
  return twice / 2;
}

}  // namespace gmine::oracle
