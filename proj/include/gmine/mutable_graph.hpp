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

namespace gmine {

// Undirected graph with threaded doubly-linked adjacency lists. Supports
// vertex deletion and edge contraction in time proportional to the degrees
// involved, with strictly LIFO undo.
class MutableGraph {
 public:
  explicit MutableGraph(const StaticGraph& g);

  Vertex n() const { return n_; }
  Vertex live_count() const { return live_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  std::uint32_t degree(Vertex v) const { return deg_[v]; }
  // Vertex that v was merged into, or v itself.
  Vertex representative(Vertex v) const { return rep_[v]; }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (std::uint32_t a = arcs_[v].next; a != v; a = arcs_[a].next) f(arcs_[a].head);
  }
  // Stops at the first neighbor for which f returns true; reports whether it stopped.
  template <class F>
  bool scan_neighbors(Vertex v, F&& f) const {
    for (std::uint32_t a = arcs_[v].next; a != v; a = arcs_[a].next)
      if (f(arcs_[a].head)) return true;
    return false;
  }
  // First neighbor in list order, or kNoVertex.
  Vertex first_neighbor(Vertex v) const {
    std::uint32_t a = arcs_[v].next;
    return a == v ? kNoVertex : arcs_[a].head;
  }
  Vertex second_neighbor(Vertex v) const {
    std::uint32_t a = arcs_[v].next;
    if (a == v) return kNoVertex;
    a = arcs_[a].next;
    return a == v ? kNoVertex : arcs_[a].head;
  }
  std::vector<Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  void delete_vertex(Vertex v);
  // Undoes the most recent operation, which must be the deletion of v.
  void restore_vertex(Vertex v);
  // Merges v into r. Requires {r, v} to be a live edge.
  void contract_edge(Vertex r, Vertex v);
  void undo();

  std::size_t checkpoint() const { return ops_.size(); }
  void rollback(std::size_t cp) {
    while (ops_.size() > cp) undo();
  }

  bool operator==(const MutableGraph& o) const;

 private:
  struct Arc {
    Vertex head;
    std::uint32_t prev, next, twin;
    bool operator==(const Arc&) const = default;
  };
  enum class Kind : std::uint8_t { kUnlink, kAppend, kRetarget, kKill };
  struct Entry {
    Kind kind;
    std::uint32_t arc;    // arc or vertex
    std::uint32_t owner;  // list owner or old representative
    std::uint32_t x, y;   // old prev/next or old head
  };
  struct Op {
    bool is_delete;
    Vertex v;
    std::size_t log_begin;
  };

  void unlink(std::uint32_t a, Vertex owner);
  void append(std::uint32_t a, Vertex owner);
  void retarget(std::uint32_t a, Vertex head);
  void kill(Vertex v, Vertex into);
  void revert(const Entry& e);

  Vertex n_ = 0;
  Vertex live_ = 0;
  std::vector<Arc> arcs_;  // 0..n-1 are list sentinels
  std::vector<std::uint32_t> deg_;
  std::vector<char> alive_;
  std::vector<Vertex> rep_;
  std::vector<Entry> log_;
  std::vector<Op> ops_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

// Same contract as the StaticGraph overload, on the live part of g. Uses an
// internal scratch buffer, so one instance per thread.
class Reach {
 public:
  explicit Reach(Vertex n) : seen_(n, 0), queue_(n) {}
  std::uint32_t operator()(const MutableGraph& g, Vertex r, std::uint32_t k,
                           Vertex skip = kNoVertex);

 private:
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

std::uint32_t truncated_bfs(const MutableGraph& g, Vertex r, std::uint32_t k,
                            Vertex skip = kNoVertex);

}  // namespace gmine
