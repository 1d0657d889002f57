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

#include <gtest/gtest.h>

#include <cmath>

#include "gmine/oracle.hpp"
#include "gmine/temporal.hpp"
#include "test_util.hpp"

namespace gmine {
namespace {

using testing::clique;
using testing::cycle;

// Snapshots {ab}, {ab, bc}, {bc} with a=0, b=1, c=2.
TemporalGraph three() {
  TemporalGraph gt;
  gt.n = 3;
  gt.snapshots = {{{0, 1}}, {{0, 1}, {1, 2}}, {{1, 2}}};
  return gt;
}

TemporalGraph random_temporal(std::mt19937_64& rng, std::uint32_t tau, Vertex n, double p) {
  TemporalGraph gt;
  gt.n = n;
  gt.snapshots.resize(tau);
  for (auto& s : gt.snapshots) s = testing::gnp(n, p, rng).edges();
  return gt;
}

std::vector<Edge> edges_of(const std::vector<EdgeCount>& counts) {
  std::vector<Edge> e;
  for (auto& c : counts) e.emplace_back(static_cast<Vertex>(c.key >> 32), static_cast<Vertex>(c.key));
  return e;
}

TEST(Bucket, Examples) {
  TemporalEdgeList raw{3, {}, {{0, 1, 0}, {0, 1, 6}, {1, 2, 7}}};
  auto gt = bucket_snapshots(raw, 7);
  ASSERT_EQ(gt.tau(), 2u);
  EXPECT_EQ(gt.snapshots[0], (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(gt.snapshots[1], (std::vector<Edge>{{1, 2}}));
  auto one = bucket_snapshots(raw, 8);
  ASSERT_EQ(one.tau(), 1u);
  EXPECT_EQ(one.snapshots[0], (std::vector<Edge>{{0, 1}, {1, 2}}));
  TemporalEdgeList dup{2, {}, {{0, 1, 5}, {1, 0, 5}}};
  EXPECT_EQ(bucket_snapshots(dup, 1).snapshots[0].size(), 1u);
  EXPECT_THROW(bucket_snapshots(raw, 0), UsageError);
}

TEST(SnapshotTree, Examples) {
  TemporalGraph single;
  single.n = 2;
  single.snapshots = {{{0, 1}}};
  SnapshotTree t1(single);
  EXPECT_EQ(t1.leaf_base(), 1u);
  EXPECT_EQ(t1.node(1), (std::vector<EdgeCount>{{edge_key(0, 1), 1}}));

  SnapshotTree t3(three());
  EXPECT_EQ(t3.node(1), (std::vector<EdgeCount>{{edge_key(0, 1), 2}, {edge_key(1, 2), 2}}));
  EXPECT_TRUE(t3.node(t3.leaf_base() + 3).empty());
}

TEST(SnapshotTree, CoverNodeExamples) {
  TemporalGraph gt;
  gt.n = 1;
  gt.snapshots.resize(8);
  SnapshotTree t(gt);
  EXPECT_EQ(t.cover_nodes(0, 7), std::vector<std::uint32_t>{1});
  auto two = t.cover_nodes(2, 3);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(t.covered(two[0]), (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
  auto three = t.cover_nodes(1, 4);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(t.covered(three[0]), (std::pair<std::uint32_t, std::uint32_t>{1, 1}));
  EXPECT_EQ(t.covered(three[1]), (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
  EXPECT_EQ(t.covered(three[2]), (std::pair<std::uint32_t, std::uint32_t>{4, 4}));
  EXPECT_THROW(t.cover_nodes(3, 2), UsageError);
  EXPECT_THROW(t.cover_nodes(0, 8), UsageError);
}

TEST(SnapshotTree, WindowExamples) {
  SnapshotTree t(three());
  EXPECT_EQ(t.window_graph(0, 2, 1).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(t.window_graph(0, 2, 2).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(t.window_graph(0, 2, 3).edges().empty());
  EXPECT_THROW(t.window_graph(0, 1, 3), UsageError);
  EXPECT_THROW(t.window_graph(0, 1, 0), UsageError);
}

// Internal nodes are the multiset sums of their children; every window and
// every h matches the naive fold; covers partition the window with few nodes.
TEST(SnapshotTree, MatchesNaiveFold) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    std::uint32_t tau = 1 + rng() % 20;
    auto gt = random_temporal(rng, tau, 3 + rng() % 10, 0.3);
    SnapshotTree t(gt);
    for (std::uint32_t i = 1; i < t.leaf_base(); ++i) {
      std::map<std::uint64_t, std::uint32_t> sum;
      for (auto& e : t.node(2 * i)) sum[e.key] += e.count;
      for (auto& e : t.node(2 * i + 1)) sum[e.key] += e.count;
      std::vector<EdgeCount> expect;
      for (auto [k, c] : sum) expect.push_back({k, c});
      EXPECT_EQ(t.node(i), expect);
    }
    const std::uint32_t bound = std::max<std::uint32_t>(1, 2 * static_cast<std::uint32_t>(std::ceil(std::log2(tau))));
    for (std::uint32_t a = 0; a < tau; ++a)
      for (std::uint32_t b = a; b < tau; ++b) {
        auto cover = t.cover_nodes(a, b);
        EXPECT_LE(cover.size(), bound);
        std::uint32_t next = a;
        for (auto node : cover) {
          auto [lo, hi] = t.covered(node);
          EXPECT_EQ(lo, next);
          next = hi + 1;
        }
        EXPECT_EQ(next, b + 1);
        for (std::uint32_t h = 1; h <= b - a + 1; ++h)
          EXPECT_EQ(t.window_graph(a, b, h), naive_window_graph(gt, a, b, h));
      }
  }
}

TEST(Coreness, Examples) {
  EXPECT_EQ(coreness_fast(clique(4)), (std::vector<std::uint32_t>(4, 3)));
  EXPECT_EQ(coreness_fast(cycle(5)), (std::vector<std::uint32_t>(5, 2)));
  auto bridge = StaticGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  EXPECT_EQ(coreness_fast(bridge), (std::vector<std::uint32_t>(6, 2)));
  EXPECT_TRUE(coreness_fast(StaticGraph::from_edges(0, {})).empty());
}

TEST(Coreness, MatchesPeelOracle) {
  for (auto& [name, g] : testing::corpus(100, 1, 20, 6)) EXPECT_EQ(coreness_fast(g), oracle::peel_coreness(g)) << name;
}

TEST(KhdCore, Examples) {
  TemporalGraph tri;
  tri.n = 3;
  tri.snapshots.assign(5, {{0, 1}, {0, 2}, {1, 2}});
  SnapshotTree t(tri);
  for (std::uint32_t w = 1; w <= 5; ++w)
    for (auto& wc : khd_cores(t, 2, w, w)) EXPECT_EQ(wc.core, (std::vector<Vertex>{0, 1, 2}));
  for (auto& wc : khd_cores(t, 3, 1, 2)) EXPECT_TRUE(wc.core.empty());

  SnapshotTree t3(three());
  auto cores = khd_cores(t3, 1, 2, 3);
  ASSERT_EQ(cores.size(), 1u);
  EXPECT_EQ(cores[0].start, 0u);
  EXPECT_EQ(cores[0].end, 2u);
  EXPECT_EQ(cores[0].core, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(khd_cores(t3, 1, 3, 2), UsageError);
  EXPECT_THROW(khd_cores(t3, 1, 1, 4), UsageError);
}

// Cores are nested in k and every member keeps k neighbors inside the core.
TEST(KhdCore, NestedAndCohesive) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 30; ++rep) {
    auto gt = random_temporal(rng, 2 + rng() % 10, 4 + rng() % 12, 0.35);
    SnapshotTree t(gt);
    std::uint32_t w = 1 + rng() % t.tau();
    std::uint32_t h = 1 + rng() % w;
    std::vector<WindowCore> prev;
    for (std::uint32_t k = 0; k <= 6; ++k) {
      auto cores = khd_cores(t, k, h, w);
      for (std::size_t i = 0; i < cores.size(); ++i) {
        auto g = t.window_graph(cores[i].start, cores[i].end, h);
        auto& c = cores[i].core;
        for (Vertex v : c) {
          std::uint32_t inside = 0;
          for (Vertex u : g.neighbors(v)) inside += std::binary_search(c.begin(), c.end(), u);
          EXPECT_GE(inside, k);
        }
        if (!prev.empty()) EXPECT_TRUE(std::includes(prev[i].core.begin(), prev[i].core.end(), c.begin(), c.end()));
      }
      prev = std::move(cores);
    }
  }
}

TEST(Rcd, Examples) {
  EXPECT_DOUBLE_EQ(rcd(4, 9), 6.0);
  EXPECT_DOUBLE_EQ(rcd(0, 7), 0.0);
  EXPECT_DOUBLE_EQ(rcd(3, 3), 3.0);
}

TEST(Arcd, GridAndPolicy) {
  EXPECT_EQ(window_grid(2), std::vector<std::uint32_t>{1});
  EXPECT_EQ(window_grid(9), (std::vector<std::uint32_t>{1, 2, 4, 8}));
  EXPECT_EQ(window_grid(12), (std::vector<std::uint32_t>{1, 2, 4, 8, 11}));
  EXPECT_TRUE(window_grid(1).empty());
  EXPECT_EQ(resolve_h(HPolicy::kFull, 1), 1u);
  EXPECT_EQ(resolve_h(HPolicy::kFull, 8), 8u);
  EXPECT_EQ(resolve_h(HPolicy::kHalf, 1), 1u);
  EXPECT_EQ(resolve_h(HPolicy::kHalf, 5), 2u);
  EXPECT_EQ(resolve_h(HPolicy::kOne, 8), 1u);
}

TEST(Arcd, HandComputedThreeSnapshots) {
  auto gt = three();
  gt.n = 4;  // vertex 3 never appears
  SnapshotTree t(gt);
  auto rows = arcd_series(t, HPolicy::kFull);
  ASSERT_EQ(rows.size(), 4u * 2);
  // W = 1: b has (coreness, degree) (1,1), (1,2), (1,1).
  EXPECT_EQ(rows[1].node, 1u);
  EXPECT_EQ(rows[1].w, 1u);
  EXPECT_NEAR(rows[1].arcd, (1.0 + std::sqrt(2.0) + 1.0) / 3.0, 1e-12);
  // a: (1,1), (1,1), (0,0).
  EXPECT_NEAR(rows[0].arcd, 2.0 / 3.0, 1e-12);
  // W = 2, h = 2: windows [0,1] has ab only, [1,2] has bc only.
  EXPECT_EQ(rows[5].w, 2u);
  EXPECT_EQ(rows[5].h, 2u);
  EXPECT_NEAR(rows[5].arcd, 1.0, 1e-12);
  EXPECT_NEAR(rows[4].arcd, 0.5, 1e-12);
  for (auto& r : rows)
    if (r.node == 3) EXPECT_EQ(r.arcd, 0.0);
}

TEST(FallingPoints, Classes) {
  auto gt = three();
  gt.n = 4;
  SnapshotTree t(gt);
  auto cls = falling_points(arcd_series(t, HPolicy::kFull));
  EXPECT_EQ(cls.at(3), 1u);
  EXPECT_FALSE(cls.at(1).has_value());

  std::vector<ArcdRow> rows{{0, 1, 1, 0.5}, {1, 1, 1, 0.5}, {0, 2, 2, 0.0}, {1, 2, 2, 0.0}, {2, 1, 1, 1.0}};
  auto c = falling_points(rows);
  EXPECT_EQ(c.at(0), c.at(1));
  EXPECT_EQ(c.at(0), 2u);
  EXPECT_FALSE(c.at(2).has_value());
}

}  // namespace
}  // namespace gmine
