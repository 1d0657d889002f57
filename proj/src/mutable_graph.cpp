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

#include "gmine/mutable_graph.hpp"

#include <algorithm>

namespace gmine {

MutableGraph::MutableGraph(const StaticGraph& g)
    : n_(g.n()), live_(g.n()), deg_(g.n()), alive_(g.n(), 1), rep_(g.n()), mark_(g.n(), 0) {
  arcs_.resize(n_ + 2 * g.m());
  for (Vertex v = 0; v < n_; ++v) {
    arcs_[v] = {kNoVertex, v, v, kNoVertex};
    rep_[v] = v;
  }
  // Arc pair for edge (u, v), u < v: u's arc at i, v's arc at i + 1.
  std::uint32_t next = n_;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u > v) continue;
      arcs_[next] = {v, 0, 0, next + 1};
      arcs_[next + 1] = {u, 0, 0, next};
      next += 2;
    }
  }
  // Link in ascending-neighbor order per list.
  std::vector<std::vector<std::uint32_t>> lists(n_);
  for (std::uint32_t a = n_; a < arcs_.size(); ++a) lists[arcs_[arcs_[a].twin].head].push_back(a);
  for (Vertex v = 0; v < n_; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end(), [&](auto x, auto y) { return arcs_[x].head < arcs_[y].head; });
    std::uint32_t prev = v;
    for (auto a : l) {
      arcs_[prev].next = a;
      arcs_[a].prev = prev;
      prev = a;
    }
    arcs_[prev].next = v;
    arcs_[v].prev = prev;
    deg_[v] = static_cast<std::uint32_t>(l.size());
  }
}

std::vector<Vertex> MutableGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(deg_[v]);
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

bool MutableGraph::adjacent(Vertex u, Vertex v) const {
  if (!alive(u) || !alive(v)) return false;
  if (deg_[u] > deg_[v]) std::swap(u, v);
  for (std::uint32_t a = arcs_[u].next; a != u; a = arcs_[a].next)
    if (arcs_[a].head == v) return true;
  return false;
}

void MutableGraph::unlink(std::uint32_t a, Vertex owner) {
  Arc& arc = arcs_[a];
  log_.push_back({Kind::kUnlink, a, owner, arc.prev, arc.next});
  arcs_[arc.prev].next = arc.next;
  arcs_[arc.next].prev = arc.prev;
  --deg_[owner];
}

void MutableGraph::append(std::uint32_t a, Vertex owner) {
  log_.push_back({Kind::kAppend, a, owner, 0, 0});
  std::uint32_t tail = arcs_[owner].prev;
  arcs_[a].prev = tail;
  arcs_[a].next = owner;
  arcs_[tail].next = a;
  arcs_[owner].prev = a;
  ++deg_[owner];
}

void MutableGraph::retarget(std::uint32_t a, Vertex head) {
  log_.push_back({Kind::kRetarget, a, 0, arcs_[a].head, 0});
  arcs_[a].head = head;
}

void MutableGraph::kill(Vertex v, Vertex into) {
  log_.push_back({Kind::kKill, v, rep_[v], 0, 0});
  alive_[v] = 0;
  rep_[v] = into;
  --live_;
}

void MutableGraph::revert(const Entry& e) {
  switch (e.kind) {
    case Kind::kUnlink: {
      Arc& arc = arcs_[e.arc];
      arc.prev = e.x;
      arc.next = e.y;
      arcs_[e.x].next = e.arc;
      arcs_[e.y].prev = e.arc;
      ++deg_[e.owner];
      break;
    }
    case Kind::kAppend: {
      Arc& arc = arcs_[e.arc];
      arcs_[arc.prev].next = arc.next;
      arcs_[arc.next].prev = arc.prev;
      --deg_[e.owner];
      break;
    }
    case Kind::kRetarget:
      arcs_[e.arc].head = e.x;
      break;
    case Kind::kKill:
      alive_[e.arc] = 1;
      rep_[e.arc] = e.owner;
      ++live_;
      break;
  }
}

void MutableGraph::delete_vertex(Vertex v) {
  if (v >= n_ || !alive(v)) throw UsageError("delete_vertex: vertex not alive");
  ops_.push_back({true, v, log_.size()});
  for (std::uint32_t a = arcs_[v].next; a != v; a = arcs_[a].next) unlink(arcs_[a].twin, arcs_[a].head);
  kill(v, v);
}

void MutableGraph::restore_vertex(Vertex v) {
  if (ops_.empty() || !ops_.back().is_delete || ops_.back().v != v)
    throw UsageError("restore_vertex: not the most recent operation");
  undo();
}

void MutableGraph::contract_edge(Vertex r, Vertex v) {
  if (r >= n_ || v >= n_ || r == v || !alive(r) || !alive(v))
    throw UsageError("contract_edge: endpoints must be distinct live vertices");
  std::uint32_t rv = kNoVertex;
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  for (std::uint32_t a = arcs_[r].next; a != r; a = arcs_[a].next) {
    mark_[arcs_[a].head] = epoch_;
    if (arcs_[a].head == v) rv = a;
  }
  if (rv == kNoVertex) throw UsageError("contract_edge: not an edge");

  ops_.push_back({false, v, log_.size()});
  unlink(rv, r);
  std::uint32_t a = arcs_[v].next;
  while (a != v) {
    std::uint32_t next = arcs_[a].next;
    Vertex w = arcs_[a].head;
    if (w != r) {
      if (mark_[w] == epoch_) {
        unlink(arcs_[a].twin, w);
      } else {
        retarget(arcs_[a].twin, r);
        unlink(a, v);
        append(a, r);
      }
    }
    a = next;
  }
  kill(v, r);
}

void MutableGraph::undo() {
  if (ops_.empty()) throw UsageError("undo: nothing to undo");
  std::size_t begin = ops_.back().log_begin;
  while (log_.size() > begin) {
    revert(log_.back());
    log_.pop_back();
  }
  ops_.pop_back();
}

bool MutableGraph::operator==(const MutableGraph& o) const {
  return n_ == o.n_ && live_ == o.live_ && arcs_ == o.arcs_ && deg_ == o.deg_ &&
         alive_ == o.alive_ && rep_ == o.rep_;
}

std::uint32_t Reach::operator()(const MutableGraph& g, Vertex r, std::uint32_t k, Vertex skip) {
  if (r >= g.n() || !g.alive(r)) throw UsageError("truncated_bfs: root not alive");
  if (k == 0) return 0;
  if (++epoch_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    epoch_ = 1;
  }
  seen_[r] = epoch_;
  if (skip != kNoVertex) seen_[skip] = epoch_;
  std::size_t head = 0, tail = 0;
  queue_[tail++] = r;
  std::uint32_t found = 1;
  while (head < tail && found < k) {
    Vertex u = queue_[head++];
    bool done = g.scan_neighbors(u, [&](Vertex w) {
      if (seen_[w] == epoch_) return false;
      seen_[w] = epoch_;
      queue_[tail++] = w;
      return ++found == k;
    });
    if (done) break;
  }
  return found;
}

std::uint32_t truncated_bfs(const MutableGraph& g, Vertex r, std::uint32_t k, Vertex skip) {
  Reach reach(g.n());
  return reach(g, r, k, skip);
}

}  // namespace gmine
