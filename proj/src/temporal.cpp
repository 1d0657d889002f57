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

#include "gmine/temporal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gmine {
namespace {

std::vector<EdgeCount> merge(const std::vector<EdgeCount>& a, const std::vector<EdgeCount>& b) {
  std::vector<EdgeCount> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].key, a[i].count + b[j].count});
      ++i;
      ++j;
    }
  }
  return out;
}

StaticGraph graph_from_counts(Vertex n, const std::vector<Label>& labels,
                              const std::vector<EdgeCount>& counts, std::uint32_t h) {
  std::vector<Edge> edges;
  for (auto& e : counts)
    if (e.count >= h) edges.emplace_back(static_cast<Vertex>(e.key >> 32), static_cast<Vertex>(e.key));
  auto g = StaticGraph::from_edges(n, std::move(edges));
  if (!labels.empty()) g.set_labels(labels);
  return g;
}

}  // namespace

TemporalGraph bucket_snapshots(const TemporalEdgeList& raw, std::uint64_t width) {
  if (width == 0) throw UsageError("bucket width must be positive");
  TemporalGraph gt;
  gt.n = raw.n;
  gt.labels = raw.labels;
  if (raw.edges.empty()) return gt;
  std::uint64_t tmin = raw.edges[0].t, tmax = raw.edges[0].t;
  for (auto& e : raw.edges) {
    tmin = std::min(tmin, e.t);
    tmax = std::max(tmax, e.t);
  }
  gt.snapshots.resize((tmax - tmin) / width + 1);
  for (auto& e : raw.edges)
    gt.snapshots[(e.t - tmin) / width].emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  for (auto& s : gt.snapshots) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return gt;
}

SnapshotTree::SnapshotTree(const TemporalGraph& gt)
    : tau_(gt.tau()), n_(gt.n), labels_(gt.labels) {
  if (tau_ == 0) throw UsageError("snapshot tree needs at least one snapshot");
  leaf_base_ = std::bit_ceil(tau_);
  depth_ = static_cast<std::uint32_t>(std::countr_zero(leaf_base_));
  nodes_.resize(2 * static_cast<std::size_t>(leaf_base_));
  for (std::uint32_t i = 0; i < tau_; ++i) {
    auto& leaf = nodes_[leaf_base_ + i];
    for (auto [u, v] : gt.snapshots[i]) leaf.push_back({edge_key(u, v), 1});
  }
  for (std::uint32_t i = leaf_base_ - 1; i >= 1; --i) nodes_[i] = merge(nodes_[2 * i], nodes_[2 * i + 1]);
}

std::pair<std::uint32_t, std::uint32_t> SnapshotTree::covered(std::uint32_t i) const {
  std::uint32_t level = static_cast<std::uint32_t>(std::bit_width(i)) - 1;
  std::uint32_t span = leaf_base_ >> level;
  std::uint32_t lo = (i - (1u << level)) * span;
  return {lo, lo + span - 1};
}

std::vector<std::uint32_t> SnapshotTree::cover_nodes(std::uint32_t a, std::uint32_t b) const {
  if (a > b || b >= tau_) throw UsageError("cover_nodes: range out of bounds");
  std::vector<std::uint32_t> left, right;
  std::uint32_t l = a + leaf_base_, r = b + leaf_base_ + 1;
  while (l < r) {
    if (l & 1) left.push_back(l++);
    if (r & 1) right.push_back(--r);
    l >>= 1;
    r >>= 1;
  }
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<EdgeCount> SnapshotTree::window_counts(std::uint32_t a, std::uint32_t b) const {
  std::vector<EdgeCount> acc;
  for (std::uint32_t i : cover_nodes(a, b)) acc = merge(acc, nodes_[i]);
  return acc;
}

StaticGraph SnapshotTree::window_graph(std::uint32_t a, std::uint32_t b, std::uint32_t h) const {
  if (a > b || b >= tau_) throw UsageError("window_graph: range out of bounds");
  if (h < 1 || h > b - a + 1) throw UsageError("window_graph: h must be in [1, b - a + 1]");
  return graph_from_counts(n_, labels_, window_counts(a, b), h);
}

StaticGraph naive_window_graph(const TemporalGraph& gt, std::uint32_t a, std::uint32_t b,
                               std::uint32_t h) {
  std::map<std::uint64_t, std::uint32_t> count;
  for (std::uint32_t i = a; i <= b; ++i)
    for (auto [u, v] : gt.snapshots[i]) ++count[edge_key(u, v)];
  std::vector<EdgeCount> counts;
  for (auto [key, c] : count) counts.push_back({key, c});
  return graph_from_counts(gt.n, gt.labels, counts, h);
}

std::vector<std::uint32_t> coreness_fast(const StaticGraph& g) {
  const Vertex n = g.n();
  const std::uint32_t md = g.max_degree();
  std::vector<std::uint32_t> deg(n), bin(md + 2, 0), pos(n);
  std::vector<Vertex> vert(n);
  for (Vertex v = 0; v < n; ++v) ++bin[deg[v] = g.degree(v)];
  std::uint32_t start = 0;
  for (std::uint32_t d = 0; d <= md; ++d) {
    std::uint32_t c = bin[d];
    bin[d] = start;
    start += c;
  }
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::uint32_t d = md; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vertex v = vert[i];
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        std::uint32_t du = deg[u], pu = pos[u], pw = bin[du];
        Vertex w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

std::vector<WindowCore> khd_cores(const SnapshotTree& tree, std::uint32_t k, std::uint32_t h,
                                  std::uint32_t w) {
  if (w < 1 || w > tree.tau()) throw UsageError("khd_cores: W must be in [1, tau]");
  if (h < 1 || h > w) throw UsageError("khd_cores: h must be in [1, W]");
  std::vector<WindowCore> out;
  for (std::uint32_t a = 0; a + w <= tree.tau(); ++a) {
    auto g = tree.window_graph(a, a + w - 1, h);
    auto core = coreness_fast(g);
    WindowCore wc{a, a + w - 1, {}};
    for (Vertex v = 0; v < g.n(); ++v)
      if (core[v] >= k) wc.core.push_back(v);
    out.push_back(std::move(wc));
  }
  return out;
}

double rcd(std::uint32_t coreness, std::uint32_t degree) {
  return std::sqrt(static_cast<double>(coreness) * static_cast<double>(degree));
}

std::uint32_t resolve_h(HPolicy policy, std::uint32_t w) {
  switch (policy) {
    case HPolicy::kOne:
      return 1;
    case HPolicy::kHalf:
      return std::max<std::uint32_t>(1, w / 2);
    case HPolicy::kFull:
      return std::max<std::uint32_t>(1, w);
  }
  return 1;
}

std::vector<std::uint32_t> window_grid(std::uint32_t tau) {
  std::vector<std::uint32_t> grid;
  if (tau < 2) return grid;
  for (std::uint32_t w = 1; w <= tau - 1; w *= 2) {
    grid.push_back(w);
    if (w > (1u << 30)) break;
  }
  if (grid.back() != tau - 1) grid.push_back(tau - 1);
  return grid;
}

std::vector<ArcdRow> arcd_series(const SnapshotTree& tree, HPolicy policy) {
  if (tree.tau() < 2) throw UsageError("arcd_series needs tau >= 2");
  std::vector<ArcdRow> rows;
  const Vertex n = tree.n();
  for (std::uint32_t w : window_grid(tree.tau())) {
    const std::uint32_t h = resolve_h(policy, w);
    std::vector<double> sum(n, 0.0);
    const std::uint32_t windows = tree.tau() - w + 1;
    for (std::uint32_t a = 0; a < windows; ++a) {
      auto g = tree.window_graph(a, a + w - 1, h);
      auto core = coreness_fast(g);
      for (Vertex v = 0; v < n; ++v) sum[v] += rcd(core[v], g.degree(v));
    }
    for (Vertex v = 0; v < n; ++v) rows.push_back({v, w, h, sum[v] / windows});
  }
  return rows;
}

std::map<Vertex, std::optional<std::uint32_t>> falling_points(const std::vector<ArcdRow>& rows,
                                                              double eps0) {
  std::map<Vertex, std::optional<std::uint32_t>> cls;
  for (auto& r : rows) {
    auto& c = cls[r.node];
    if (r.arcd <= eps0 && (!c || r.w < *c)) c = r.w;
  }
  return cls;
}

}  // namespace gmine
