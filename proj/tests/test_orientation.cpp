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

#include "gmine/oracle.hpp"
#include "gmine/orientation.hpp"
#include "test_util.hpp"

namespace gmine {
namespace {

using testing::clique;

OrientedMultigraph build(const StaticGraph& g, const OrientationParams& p) {
  OrientedMultigraph s(g.n(), p);
  for (auto [u, v] : g.edges()) s.insert_edge(u, v);
  return s;
}

OrientationParams with_b(Vertex n, std::uint32_t b) { return choose_params(std::max<Vertex>(n, 2), 0.5, b); }

TEST(Params, Formula) {
  EXPECT_EQ(choose_params(1117, 0.5).b, 378u);
  EXPECT_EQ(choose_params(5242, 0.5).b, 461u);
  auto p = choose_params(2, 0.5);
  EXPECT_EQ(p.b, 38u);
  EXPECT_DOUBLE_EQ(p.gamma, 0.25);
  EXPECT_EQ(p.eta, 3u);
  EXPECT_DOUBLE_EQ(p.lambda, 3.0 / (64.0 * 38.0));
  EXPECT_EQ(choose_params(10, 0.5, 7u).b, 7u);
  EXPECT_THROW(choose_params(1, 0.5), UsageError);
  EXPECT_THROW(choose_params(10, 0.0), UsageError);
  EXPECT_THROW(choose_params(10, 1.5), UsageError);
  EXPECT_THROW(choose_params(10, 0.5, 1u), UsageError);
}

TEST(Orientation, SingleEdgeSplitsEvenly) {
  OrientedMultigraph s(2, choose_params(2, 0.5));
  s.insert_edge(0, 1);
  EXPECT_EQ(s.outdeg(0) + s.outdeg(1), 38u);
  EXPECT_LE(s.max_outdeg(), 38u / 2 + 1);
  EXPECT_TRUE(s.check_invariant_theta_prime().empty());
}

TEST(Orientation, TriangleConservation) {
  auto s = build(clique(3), with_b(3, 12));
  EXPECT_EQ(s.outdeg(0) + s.outdeg(1) + s.outdeg(2), 36u);
  for (auto [u, v] : s.edges()) EXPECT_EQ(s.multiplicity(u, v) + s.multiplicity(v, u), 12u);
  EXPECT_TRUE(s.conservation_holds());
}

TEST(Orientation, StarKeepsInvariant) {
  auto s = build(testing::star(4), with_b(5, 20));
  EXPECT_TRUE(s.check_invariant_theta_prime().empty());
  for (Vertex leaf = 1; leaf <= 4; ++leaf) EXPECT_GE(s.outdeg(leaf), 20u / 4);
}

TEST(Orientation, InvariantScan) {
  OrientedMultigraph fresh(4, with_b(4, 8));
  EXPECT_TRUE(fresh.check_invariant_theta_prime().empty());
  OrientedMultigraph bad(2, with_b(2, 8));
  for (int i = 0; i < 8; ++i) bad.insert_directed_raw(0, 1);
  auto v = bad.check_invariant_theta_prime();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].u, 0u);
  EXPECT_EQ(v[0].du, 8u);
  EXPECT_EQ(v[0].dv, 0u);
  EXPECT_TRUE(bad.buckets_consistent());
}

TEST(Orientation, RejectsBadInsertions) {
  OrientedMultigraph s(3, with_b(3, 4));
  EXPECT_THROW(s.insert_edge(0, 0), UsageError);
  EXPECT_THROW(s.insert_edge(0, 3), UsageError);
  s.insert_edge(0, 1);
  EXPECT_THROW(s.insert_edge(1, 0), UsageError);
}

TEST(Orientation, BucketFormula) {
  OrientedMultigraph s(2, with_b(2, 4));
  EXPECT_EQ(s.bucket_of(0), -1);
  EXPECT_EQ(s.bucket_of(1), 0);
  const double l = s.params().lambda;
  for (std::uint32_t d : {2u, 10u, 1000u, 123456u})
    EXPECT_EQ(s.bucket_of(d), static_cast<int>(std::floor(std::log(d) / std::log1p(l))));
}

// After every insertion: conservation, bucket placement and the invariant.
TEST(Orientation, InvariantsAfterEveryInsertion) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    Vertex n = 2 + rng() % 49;
    auto g = testing::gnp(n, 0.05 + 0.4 * (rng() % 100) / 100.0, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    OrientedMultigraph s(n, choose_params(n, 0.5));
    for (auto [u, v] : edges) {
      s.insert_edge(u, v);
      ASSERT_TRUE(s.conservation_holds());
      ASSERT_TRUE(s.buckets_consistent());
      ASSERT_TRUE(s.check_invariant_theta_prime().empty());
    }
    EXPECT_EQ(s.chain_cap_hits(), 0u);
  }
}

TEST(Density, Examples) {
  for (double eps : {0.25, 0.5, 1.0}) {
    auto k4 = run_densest(clique(4), eps);
    EXPECT_GE(k4.estimate, 1.5);
    EXPECT_LE(k4.estimate, 1.5 * (1 + eps));
    EXPECT_EQ(k4.subgraph.set, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_DOUBLE_EQ(k4.subgraph.density, 1.5);
  }
  auto edge = run_densest(testing::path(2), 0.5);
  EXPECT_GE(edge.estimate, 0.5);
  EXPECT_LE(edge.estimate, 0.75);
  EXPECT_THROW(run_densest(StaticGraph::from_edges(3, {}), 0.5), UsageError);
}

TEST(Density, TrianglePlusLongTail) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 2; v < 10; ++v) e.emplace_back(v, v + 1);
  auto g = StaticGraph::from_edges(11, e);
  auto run = run_densest(g, 0.5);
  EXPECT_GE(run.subgraph.density, 1.0 / 1.5);
  EXPECT_GE(run.estimate, 1.0);
  EXPECT_LE(run.estimate, 1.5);
}

TEST(Ladder, Shape) {
  auto g = StaticGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto s = build(g, with_b(4, 40));
  auto ladder = density_ladder(s);
  ASSERT_FALSE(ladder.empty());
  EXPECT_FALSE(ladder[0].set.empty());
  for (Vertex v : ladder[0].set) EXPECT_EQ(s.outdeg(v), s.max_outdeg());
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    EXPECT_LT(ladder[i].threshold, ladder[i - 1].threshold);
    EXPECT_TRUE(std::includes(ladder[i].set.begin(), ladder[i].set.end(), ladder[i - 1].set.begin(),
                              ladder[i - 1].set.end()));
  }
  const std::uint32_t expect_len =
      static_cast<std::uint32_t>(std::floor(std::log(4.0) / std::log1p(s.params().gamma))) + 2;
  EXPECT_EQ(ladder.size(), expect_len);

  OrientedMultigraph reg(6, with_b(6, 10));
  for (Vertex v = 0; v < 6; ++v)
    for (int c = 0; c < 10; ++c) reg.insert_directed_raw(v, (v + 1) % 6);
  for (auto& step : density_ladder(reg)) EXPECT_EQ(step.set.size(), 6u);
  EXPECT_THROW(density_ladder(OrientedMultigraph(3, with_b(3, 4))), UsageError);
}

// Exact densest value from the brute-force oracle brackets the estimate, and
// the extracted witness is within 1 + eps of optimal.
TEST(Density, SandwichAgainstOracle) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 60; ++rep) {
    Vertex n = 2 + rng() % 15;
    auto g = testing::gnp(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
    if (g.m() == 0) continue;
    const double exact = oracle::brute_densest(g).density.value();
    for (double eps : {0.25, 0.5, 1.0}) {
      auto run = run_densest(g, eps);
      EXPECT_GE(run.estimate, exact) << "rep=" << rep << " eps=" << eps;
      EXPECT_LE(run.estimate, (1 + eps) * exact) << "rep=" << rep << " eps=" << eps;
      EXPECT_GE(run.subgraph.density * (1 + eps), exact) << "rep=" << rep << " eps=" << eps;
      EXPECT_TRUE(run.invariant_ok);
    }
  }
}

}  // namespace
}  // namespace gmine
