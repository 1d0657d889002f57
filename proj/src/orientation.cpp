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

#include "gmine/orientation.hpp"

#include <algorithm>
#include <cmath>

#include "gmine/oracle.hpp"

namespace gmine {

OrientationParams choose_params(Vertex n, double epsilon, std::optional<std::uint32_t> b_override) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw UsageError("epsilon must be in (0, 1]");
  if (n < 2) throw UsageError("choose_params: need n >= 2");
  OrientationParams p;
  p.epsilon = epsilon;
  p.gamma = epsilon / 2.0;
  p.eta = 3;
  double raw = p.eta / p.gamma * std::log(static_cast<double>(n)) / std::log1p(p.gamma);
  p.b = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(std::ceil(raw - 1e-9)));
  if (b_override) {
    if (*b_override < 2) throw UsageError("b override must be at least 2");
    p.b = *b_override;
  }
  p.lambda = static_cast<double>(p.eta) / (static_cast<double>(p.b) * 64.0);
  return p;
}

OrientedMultigraph::OrientedMultigraph(Vertex n, const OrientationParams& params)
    : params_(params), outdeg_(n, 0), out_(n), bucket_head_(n, kNil) {
  if (params.b < 2 || !(params.lambda > 0.0)) throw UsageError("invalid orientation parameters");
  log1p_lambda_ = std::log1p(params.lambda);
  double cap = 64.0 / params.lambda * std::log(std::max<double>(n, 2.0));
  chain_cap_ = std::max<std::uint64_t>(1000, static_cast<std::uint64_t>(std::ceil(cap)));
}

std::int32_t OrientedMultigraph::bucket_of(std::uint32_t d) const {
  if (d == 0) return -1;
  return static_cast<std::int32_t>(std::floor(std::log(static_cast<double>(d)) / log1p_lambda_));
}

std::uint32_t OrientedMultigraph::multiplicity(Vertex u, Vertex v) const {
  for (auto& a : out_[u])
    if (a.v == v) return a.mult;
  return 0;
}

std::uint32_t OrientedMultigraph::max_outdeg() const {
  std::uint32_t m = 0;
  for (auto d : outdeg_) m = std::max(m, d);
  return m;
}

std::uint32_t OrientedMultigraph::new_node(Vertex w, Vertex owner) {
  std::uint32_t id;
  if (!free_nodes_.empty()) {
    id = free_nodes_.back();
    free_nodes_.pop_back();
  } else {
    id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({});
  }
  nodes_[id] = {w, kNil, kNil, kNil};
  node_attach(id, bucket_for_new(owner, bucket_of(outdeg_[w])));
  return id;
}

void OrientedMultigraph::free_node(std::uint32_t node) {
  node_detach(node);
  free_nodes_.push_back(node);
}

void OrientedMultigraph::node_attach(std::uint32_t node, std::uint32_t bucket) {
  Bucket& b = buckets_[bucket];
  nodes_[node].bucket = bucket;
  nodes_[node].prev = kNil;
  nodes_[node].next = b.head;
  if (b.head != kNil) nodes_[b.head].prev = node;
  b.head = node;
  ++b.size;
}

void OrientedMultigraph::node_detach(std::uint32_t node) {
  InNode& nd = nodes_[node];
  Bucket& b = buckets_[nd.bucket];
  if (nd.prev != kNil)
    nodes_[nd.prev].next = nd.next;
  else
    b.head = nd.next;
  if (nd.next != kNil) nodes_[nd.next].prev = nd.prev;
  if (--b.size == 0) {
    if (b.prev != kNil)
      buckets_[b.prev].next = b.next;
    else
      bucket_head_[b.owner] = b.next;
    if (b.next != kNil) buckets_[b.next].prev = b.prev;
    free_buckets_.push_back(nd.bucket);
  }
  nd.bucket = kNil;
}

// Finds bucket j in owner's sorted list, creating it if absent. The walk
// starts at `near` (a live bucket of the same owner) or at the list head.
std::uint32_t OrientedMultigraph::find_or_make_bucket(Vertex owner, std::uint32_t near, std::int32_t j) {
  std::uint32_t before = kNil, after = kNil;
  std::uint32_t cur = near != kNil ? near : bucket_head_[owner];
  if (cur == kNil) {
    // empty list
  } else if (buckets_[cur].j <= j) {
    while (cur != kNil && buckets_[cur].j < j) {
      before = cur;
      cur = buckets_[cur].next;
    }
    if (cur != kNil && buckets_[cur].j == j) return cur;
    after = cur;
  } else {
    while (cur != kNil && buckets_[cur].j > j) {
      after = cur;
      cur = buckets_[cur].prev;
    }
    if (cur != kNil && buckets_[cur].j == j) return cur;
    before = cur;
  }
  std::uint32_t id;
  if (!free_buckets_.empty()) {
    id = free_buckets_.back();
    free_buckets_.pop_back();
  } else {
    id = static_cast<std::uint32_t>(buckets_.size());
    buckets_.push_back({});
  }
  buckets_[id] = {j, owner, kNil, 0, before, after};
  if (before != kNil)
    buckets_[before].next = id;
  else
    bucket_head_[owner] = id;
  if (after != kNil) buckets_[after].prev = id;
  return id;
}

std::uint32_t OrientedMultigraph::bucket_for_new(Vertex owner, std::int32_t j) {
  return find_or_make_bucket(owner, kNil, j);
}

void OrientedMultigraph::set_outdeg(Vertex u, std::uint32_t d) {
  const std::int32_t j_old = bucket_of(outdeg_[u]), j_new = bucket_of(d);
  outdeg_[u] = d;
  if (j_old == j_new) return;
  for (auto& a : out_[u]) {
    std::uint32_t node = a.in_node, from = nodes_[node].bucket;
    // Keep the old bucket alive while searching from it.
    std::uint32_t target = find_or_make_bucket(a.v, from, j_new);
    node_detach(node);
    node_attach(node, target);
  }
}

void OrientedMultigraph::add_copy(Vertex u, Vertex v) {
  auto& arcs = out_[u];
  auto it = std::find_if(arcs.begin(), arcs.end(), [&](const OutArc& a) { return a.v == v; });
  if (it == arcs.end())
    arcs.push_back({v, 1, new_node(u, v)});
  else
    ++it->mult;
  set_outdeg(u, outdeg_[u] + 1);
}

void OrientedMultigraph::remove_copy(Vertex u, std::size_t idx) {
  auto& arcs = out_[u];
  if (--arcs[idx].mult == 0) {
    free_node(arcs[idx].in_node);
    arcs[idx] = arcs.back();
    arcs.pop_back();
  }
  set_outdeg(u, outdeg_[u] - 1);
}

void OrientedMultigraph::cascade(Vertex u) {
  const std::uint64_t b = params_.b, eta = params_.eta;
  for (std::uint64_t steps = 0;; ++steps) {
    auto& arcs = out_[u];
    if (arcs.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < arcs.size(); ++i)
      if (outdeg_[arcs[i].v] < outdeg_[arcs[best].v]) best = i;
    const Vertex x = arcs[best].v;
    const std::uint64_t du = outdeg_[u], dx = outdeg_[x];
    if (!(du * b > (b + eta) * dx && du > b / 2)) return;
    if (steps >= chain_cap_) {
      ++chain_cap_hits_;
      return;
    }
    remove_copy(u, best);
    add_copy(x, u);
    ++reversals_;
    u = x;
  }
}

void OrientedMultigraph::insert_edge(Vertex u, Vertex v) {
  if (u == v || u >= n() || v >= n()) throw UsageError("insert_edge: invalid endpoints");
  if (!edge_set_.insert((static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v)).second) throw UsageError("insert_edge: edge already inserted");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  for (std::uint32_t c = 0; c < params_.b; ++c) {
    if (outdeg_[u] <= outdeg_[v]) {
      add_copy(u, v);
      cascade(u);
    } else {
      add_copy(v, u);
      cascade(v);
    }
  }
}

void OrientedMultigraph::insert_directed_raw(Vertex u, Vertex v) {
  if (u == v || u >= n() || v >= n()) throw UsageError("insert_directed_raw: invalid endpoints");
  add_copy(u, v);
}

std::vector<Violation> OrientedMultigraph::check_invariant_theta_prime() const {
  std::vector<Violation> out;
  const std::uint64_t b = params_.b, eta = params_.eta;
  for (Vertex u = 0; u < n(); ++u)
    for (auto& a : out_[u]) {
      if (a.mult == 0) continue;
      const std::uint64_t du = outdeg_[u], dv = outdeg_[a.v];
      if (du * b > (b + eta) * dv && du > b / 2) out.push_back({u, a.v, outdeg_[u], outdeg_[a.v]});
    }
  return out;
}

bool OrientedMultigraph::buckets_consistent() const {
  std::vector<std::uint64_t> expected(n(), 0);
  for (Vertex u = 0; u < n(); ++u)
    for (auto& a : out_[u]) {
      ++expected[a.v];
      const InNode& nd = nodes_[a.in_node];
      if (nd.w != u || nd.bucket == kNil || buckets_[nd.bucket].owner != a.v) return false;
    }
  for (Vertex v = 0; v < n(); ++v) {
    std::uint64_t seen = 0;
    std::uint32_t prev = kNil;
    for (std::uint32_t b = bucket_head_[v]; b != kNil; b = buckets_[b].next) {
      const Bucket& bk = buckets_[b];
      if (bk.owner != v || bk.prev != prev || bk.size == 0) return false;
      if (prev != kNil && buckets_[prev].j >= bk.j) return false;
      std::uint32_t count = 0;
      for (std::uint32_t nd = bk.head; nd != kNil; nd = nodes_[nd].next) {
        if (nodes_[nd].bucket != b || bucket_of(outdeg_[nodes_[nd].w]) != bk.j) return false;
        ++count;
      }
      if (count != bk.size) return false;
      seen += count;
      prev = b;
    }
    if (seen != expected[v]) return false;
  }
  return true;
}

bool OrientedMultigraph::conservation_holds() const {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < n(); ++u) {
    std::uint64_t sum = 0;
    for (auto& a : out_[u]) sum += a.mult;
    if (sum != outdeg_[u]) return false;
    total += outdeg_[u];
  }
  if (total != static_cast<std::uint64_t>(params_.b) * edges_.size()) return false;
  for (auto [u, v] : edges_)
    if (multiplicity(u, v) + multiplicity(v, u) != params_.b) return false;
  return true;
}

double density_estimate(const OrientedMultigraph& state) {
  if (state.inserted_edges() == 0) throw UsageError("density_estimate: no edges inserted");
  return static_cast<double>(state.max_outdeg()) / state.params().b;
}

std::vector<LadderStep> density_ladder(const OrientedMultigraph& state) {
  if (state.max_outdeg() == 0) throw UsageError("density_ladder: no directed copies");
  const auto& p = state.params();
  const double top = state.max_outdeg();
  const double ratio = 1.0 + static_cast<double>(p.eta) / p.b;
  const std::uint32_t last =
      static_cast<std::uint32_t>(std::floor(std::log(std::max<double>(state.n(), 2.0)) / std::log1p(p.gamma))) + 1;
  std::vector<Vertex> order(state.n());
  for (Vertex v = 0; v < state.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return state.outdeg(a) != state.outdeg(b) ? state.outdeg(a) > state.outdeg(b) : a < b;
  });
  std::vector<LadderStep> ladder;
  for (std::uint32_t i = 0; i <= last; ++i) {
    LadderStep step{i, top * std::pow(ratio, -static_cast<double>(i)), {}};
    // Relative slack so that d+ equal to an exact threshold is not lost to rounding.
    const double cut = step.threshold * (1.0 - 1e-12);
    for (Vertex v : order) {
      if (static_cast<double>(state.outdeg(v)) < cut) break;
      step.set.push_back(v);
    }
    std::sort(step.set.begin(), step.set.end());
    ladder.push_back(std::move(step));
  }
  return ladder;
}

DensestSubgraph densest_subgraph(const OrientedMultigraph& state, const StaticGraph& g) {
  auto ladder = density_ladder(state);
  const double grow = 1.0 + state.params().gamma;
  DensestSubgraph res;
  std::size_t pick = ladder.size() - 1;
  res.exhausted = true;
  for (std::size_t k = 0; k + 1 < ladder.size(); ++k)
    if (static_cast<double>(ladder[k + 1].set.size()) < grow * static_cast<double>(ladder[k].set.size())) {
      pick = k + 1;
      res.exhausted = false;
      break;
    }
  res.set = ladder[pick].set;
  res.index = ladder[pick].i;
  res.edges = oracle::induced_edges(g, res.set);
  res.density = res.set.empty() ? 0.0 : static_cast<double>(res.edges) / res.set.size();
  return res;
}

DensestRun run_densest(const StaticGraph& g, double epsilon, std::optional<std::uint32_t> b_override) {
  if (g.m() == 0) throw UsageError("densest: graph has no edges");
  DensestRun run;
  run.params = choose_params(g.n(), epsilon, b_override);
  OrientedMultigraph state(g.n(), run.params);
  for (auto [u, v] : g.edges()) state.insert_edge(u, v);
  run.estimate = density_estimate(state);
  run.subgraph = densest_subgraph(state, g);
  run.ladder = density_ladder(state);
  run.invariant_ok = state.check_invariant_theta_prime().empty() && state.chain_cap_hits() == 0;
  return run;
}

}  // namespace gmine
