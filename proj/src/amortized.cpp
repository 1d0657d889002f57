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

#include "gmine/amortized.hpp"

#include <algorithm>

namespace gmine {
namespace {

// Articulation points of r's component with subtree sizes, reused across calls.
class MandatoryFinder {
 public:
  explicit MandatoryFinder(Vertex n) : local_(n, 0), stamp_(n, 0) {}

  // Sets marks for every x != r whose removal leaves < k vertices reachable
  // from r; returns the component size.
  std::uint32_t run(const MutableGraph& g, Vertex r, std::uint32_t k) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    // Collect the component and a local CSR copy of it.
    verts_.assign(1, r);
    stamp_[r] = epoch_;
    local_[r] = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      g.for_each_neighbor(verts_[i], [&](Vertex w) {
        if (stamp_[w] == epoch_) return;
        stamp_[w] = epoch_;
        local_[w] = static_cast<std::uint32_t>(verts_.size());
        verts_.push_back(w);
      });
    const std::uint32_t total = static_cast<std::uint32_t>(verts_.size());
    off_.assign(total + 1, 0);
    adj_.clear();
    for (std::uint32_t i = 0; i < total; ++i) {
      g.for_each_neighbor(verts_[i], [&](Vertex w) { adj_.push_back(local_[w]); });
      off_[i + 1] = static_cast<std::uint32_t>(adj_.size());
    }

    disc_.assign(total, 0);
    low_.assign(total, 0);
    size_.assign(total, 1);
    cut_.assign(total, 1);
    parent_.assign(total, kNoVertex);
    it_.assign(total, 0);
    std::uint32_t clock = 0;
    std::vector<std::uint32_t> stack{0};
    disc_[0] = low_[0] = ++clock;
    it_[0] = off_[0];
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      if (it_[x] < off_[x + 1]) {
        std::uint32_t c = adj_[it_[x]++];
        if (disc_[c] == 0) {
          parent_[c] = x;
          disc_[c] = low_[c] = ++clock;
          it_[c] = off_[c];
          stack.push_back(c);
        } else if (c != parent_[x]) {
          low_[x] = std::min(low_[x], disc_[c]);
        }
        continue;
      }
      stack.pop_back();
      if (parent_[x] != kNoVertex) {
        std::uint32_t p = parent_[x];
        low_[p] = std::min(low_[p], low_[x]);
        size_[p] += size_[x];
        if (low_[x] >= disc_[p]) cut_[p] += size_[x];
      }
    }
    mandatory_.clear();
    for (std::uint32_t i = 1; i < total; ++i)
      if (total - cut_[i] < k) mandatory_.push_back(verts_[i]);
    if (++mark_epoch_ == 0) {
      mark_.assign(mark_.size(), 0);
      mark_epoch_ = 1;
    }
    if (mark_.size() < local_.size()) mark_.resize(local_.size(), 0);
    for (Vertex v : mandatory_) mark_[v] = mark_epoch_;
    return total;
  }

  bool marked(Vertex v) const { return mark_[v] == mark_epoch_; }
  const std::vector<Vertex>& mandatory() const { return mandatory_; }

 private:
  std::vector<std::uint32_t> local_, stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> verts_, mandatory_;
  std::vector<std::uint32_t> off_, adj_, disc_, low_, size_, cut_, parent_, it_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t mark_epoch_ = 0;
};

// Vertices reachable from r in g minus x (full search), as a sorted list.
std::vector<Vertex> reachable_without(const MutableGraph& g, Vertex r, Vertex x) {
  std::vector<char> seen(g.n(), 0);
  seen[r] = 1;
  seen[x] = 1;
  std::vector<Vertex> order{r};
  for (std::size_t i = 0; i < order.size(); ++i)
    g.for_each_neighbor(order[i], [&](Vertex w) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    });
  std::sort(order.begin(), order.end());
  return order;
}

class AmortizedRun {
 public:
  AmortizedRun(MutableGraph& g, const StaticGraph* orig, std::uint32_t k0, const Sink& sink,
               const AmortizedOptions& opts)
      : g_(g), orig_(orig), k0_(k0), sink_(sink), opts_(opts), reach_(g.n()), finder_(g.n()) {}

  EnumStats stats;
  std::vector<Vertex> s;

  void enumerate(Vertex r, std::uint32_t rem) {
    const std::size_t cp = g_.checkpoint(), s_mark = s.size();
    while (true) {
      ++stats.recursive_calls;
      if (rem == 0) {
        output();
        break;
      }
      while (g_.degree(r) == 1) {
        absorb(r, g_.first_neighbor(r));
        if (--rem == 0) break;
      }
      if (rem == 0) {
        output();
        break;
      }
      if (g_.degree(r) == 0) {
        ++stats.failure_leaves;
        break;
      }
      const std::uint32_t need = rem + 1;
      Vertex x = g_.first_neighbor(r), y = g_.second_neighbor(r), pick = kNoVertex;
      if (reach_(g_, r, need, x) == need)
        pick = x;
      else if (reach_(g_, r, need, y) == need)
        pick = y;
      if (pick == kNoVertex) {
        if (opts_.self_check) check_switch(r, x, y, rem);
        linear(r, rem);
        break;
      }
      const std::size_t cp2 = g_.checkpoint();
      absorb(r, pick);
      enumerate(r, rem - 1);
      g_.rollback(cp2);
      s.pop_back();
      g_.delete_vertex(pick);
    }
    g_.rollback(cp);
    s.resize(s_mark);
  }

  void linear(Vertex r, std::uint32_t rem) {
    const std::size_t cp = g_.checkpoint(), s_mark = s.size();
    while (true) {
      ++stats.recursive_calls;
      if (rem == 0) {
        output();
        break;
      }
      finder_.run(g_, r, rem + 1);
      bool done = false;
      while (!done) {
        Vertex u = kNoVertex;
        g_.scan_neighbors(r, [&](Vertex w) {
          if (!finder_.marked(w)) return false;
          u = w;
          return true;
        });
        if (u == kNoVertex) break;
        absorb(r, u);
        done = --rem == 0;
      }
      if (done) {
        output();
        break;
      }
      Vertex z = g_.first_neighbor(r);
      if (z == kNoVertex) {
        ++stats.failure_leaves;
        break;
      }
      const std::size_t cp2 = g_.checkpoint();
      absorb(r, z);
      linear(r, rem - 1);
      g_.rollback(cp2);
      s.pop_back();
      g_.delete_vertex(z);
    }
    g_.rollback(cp);
    s.resize(s_mark);
  }

  bool fruitful_root(Vertex v) { return reach_(g_, v, k0_) == k0_; }

 private:
  void absorb(Vertex r, Vertex v) {
    s.push_back(v);
    g_.contract_edge(r, v);
  }

  void output() {
    ++stats.solutions;
    ++stats.success_leaves;
    if (!sink_ && !opts_.self_check) return;
    out_ = s;
    std::sort(out_.begin(), out_.end());
    if (opts_.self_check && orig_ &&
        (out_.size() != k0_ || std::adjacent_find(out_.begin(), out_.end()) != out_.end() ||
         !induces_connected(*orig_, out_)))
      ++stats.check_violations;
    if (sink_) sink_(out_);
  }

  // Neither neighbor is removable: r's component must be small, and the sets
  // cut off by x and by y must be disjoint.
  void check_switch(Vertex r, Vertex x, Vertex y, std::uint32_t rem) {
    auto comp = reachable_without(g_, r, r);
    if (comp.size() >= 2 * static_cast<std::size_t>(rem)) ++stats.check_violations;
    auto wx = reachable_without(g_, r, x), wy = reachable_without(g_, r, y);
    for (Vertex v : comp) {
      if (v == x || v == y) continue;
      bool cut_x = !std::binary_search(wx.begin(), wx.end(), v);
      bool cut_y = !std::binary_search(wy.begin(), wy.end(), v);
      if (cut_x && cut_y) ++stats.check_violations;
    }
  }

  MutableGraph& g_;
  const StaticGraph* orig_;
  std::uint32_t k0_;
  const Sink& sink_;
  AmortizedOptions opts_;
  Reach reach_;
  MandatoryFinder finder_;
  std::vector<Vertex> out_;
};

}  // namespace

bool fruitful(const MutableGraph& g, Vertex r, std::uint32_t k) { return truncated_bfs(g, r, k) == k; }

bool removable(const MutableGraph& g, Vertex r, Vertex x, std::uint32_t k) {
  if (x == r || !g.alive(x)) throw UsageError("removable: x must be a live vertex other than r");
  return truncated_bfs(g, r, k, x) == k;
}

std::vector<Vertex> mark_mandatory(const MutableGraph& g, Vertex r, std::uint32_t k) {
  if (!fruitful(g, r, k)) throw UsageError("mark_mandatory: fewer than k vertices reachable");
  MandatoryFinder finder(g.n());
  finder.run(g, r, k);
  auto out = finder.mandatory();
  std::sort(out.begin(), out.end());
  return out;
}

EnumStats linear_enum(MutableGraph& g, Vertex r, std::vector<Vertex> chosen, std::uint32_t k_remaining,
                      const Sink& sink) {
  if (!g.alive(r) || !fruitful(g, r, k_remaining + 1))
    throw UsageError("linear_enum: no graphlet of the requested size through r");
  AmortizedRun run(g, nullptr, static_cast<std::uint32_t>(chosen.size()) + k_remaining, sink, {});
  run.s = std::move(chosen);
  run.linear(r, k_remaining);
  return run.stats;
}

EnumStats amortized_enum(const StaticGraph& g, std::uint32_t k, const Sink& sink,
                         const AmortizedOptions& opts) {
  if (k < 1 || k > g.n()) throw UsageError("amortized_enum: k must be in [1, n]");
  MutableGraph mg(g);
  AmortizedRun run(mg, &g, k, sink, opts);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (run.fruitful_root(v)) {
      run.s.assign(1, v);
      run.enumerate(v, k - 1);
    }
    mg.delete_vertex(v);
  }
  return run.stats;
}

std::uint64_t enum_all_graphlets(const StaticGraph& g, const Sink& sink) {
  MutableGraph mg(g);
  std::vector<Vertex> s, out;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, Vertex r) -> void {
    const std::size_t cp = mg.checkpoint(), s_mark = s.size();
    while (true) {
      Vertex v = mg.first_neighbor(r);
      if (v == kNoVertex) {
        ++count;
        if (sink) {
          out = s;
          std::sort(out.begin(), out.end());
          sink(out);
        }
        break;
      }
      const std::size_t cp2 = mg.checkpoint();
      s.push_back(v);
      mg.contract_edge(r, v);
      self(self, r);
      mg.rollback(cp2);
      s.pop_back();
      mg.delete_vertex(v);
    }
    mg.rollback(cp);
    s.resize(s_mark);
  };
  for (Vertex v = 0; v < g.n(); ++v) {
    s.assign(1, v);
    rec(rec, v);
    mg.delete_vertex(v);
  }
  return count;
}

std::uint64_t edge_graphlets(const StaticGraph& g, std::uint32_t k, const EdgeSink& sink) {
  if (k < 1 || k > g.m()) throw UsageError("edge_graphlets: k must be in [1, m]");
  LineGraph lg = line_graph(g);
  std::vector<Edge> edges;
  Sink inner;
  if (sink)
    inner = [&](std::span<const Vertex> ids) {
      edges.clear();
      for (Vertex e : ids) edges.push_back(lg.edge_of[e]);
      sink(edges);
    };
  return amortized_enum(lg.graph, k, inner).solutions;
}

}  // namespace gmine
