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

#include "gmine/static_graph.hpp"

#include <algorithm>
#include <deque>

namespace gmine {

StaticGraph StaticGraph::from_edges(Vertex n, std::vector<Edge> edges) {
  StaticGraph g;
  g.n_ = n;
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw UsageError("edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto& a : arcs) ++g.offsets_[a.first + 1];
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) g.adj_[i] = arcs[i].second;
  for (Vertex v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  return g;
}

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> StaticGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void StaticGraph::set_labels(std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != n_) throw UsageError("label map size mismatch");
  labels_ = std::move(labels);
}

LineGraph line_graph(const StaticGraph& g) {
  LineGraph lg;
  lg.edge_of = g.edges();
  // Incident edge ids per vertex.
  std::vector<std::vector<Vertex>> inc(g.n());
  for (Vertex e = 0; e < lg.edge_of.size(); ++e) {
    inc[lg.edge_of[e].first].push_back(e);
    inc[lg.edge_of[e].second].push_back(e);
  }
  std::vector<Edge> ledges;
  for (auto& ids : inc)
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) ledges.emplace_back(ids[i], ids[j]);
  lg.graph = StaticGraph::from_edges(static_cast<Vertex>(lg.edge_of.size()), std::move(ledges));
  return lg;
}

std::uint32_t truncated_bfs(const StaticGraph& g, Vertex r, std::uint32_t k, Vertex skip) {
  if (r >= g.n()) throw UsageError("truncated_bfs: root out of range");
  if (k == 0) return 0;
  std::vector<char> seen(g.n(), 0);
  std::deque<Vertex> queue{r};
  seen[r] = 1;
  if (skip != kNoVertex && skip < g.n()) seen[skip] = 1;
  std::uint32_t found = 1;
  while (!queue.empty() && found < k) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
      if (++found == k) break;
    }
  }
  return found;
}

bool induces_connected(const StaticGraph& g, std::span<const Vertex> vs) {
  if (vs.empty()) return false;
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  auto in = [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  std::vector<char> seen(sorted.size(), 0);
  std::vector<Vertex> stack{sorted[0]};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!in(w)) continue;
      auto idx = std::lower_bound(sorted.begin(), sorted.end(), w) - sorted.begin();
      if (seen[idx]) continue;
      seen[idx] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == sorted.size();
}

}  // namespace gmine
