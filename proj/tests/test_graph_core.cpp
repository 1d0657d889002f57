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

#include <sstream>

#include "gmine/mutable_graph.hpp"
#include "gmine/parse.hpp"
#include "test_util.hpp"

namespace gmine {
namespace {

using testing::clique;
using testing::cycle;
using testing::path;
using testing::star;

StaticGraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_static(in);
}

std::vector<Vertex> live_neighbors(const MutableGraph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::sort(nb.begin(), nb.end());
  return nb;
}

TEST(Parse, TwoEdgePath) {
  auto g = parse("0 1\n1 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(Parse, DropsSelfLoopsAndDuplicates) {
  auto g = parse("0 0\n0 1\n0 1\n");
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(g.m(), 1u);
}

TEST(Parse, TemporalKeepsMultiplicity) {
  std::istringstream in("0 1 5\n0 1 7\n");
  auto t = parse_temporal(in);
  ASSERT_EQ(t.edges.size(), 2u);
  EXPECT_EQ(t.edges[0].t, 5u);
  EXPECT_EQ(t.edges[1].t, 7u);
  EXPECT_EQ(t.n, 2u);
}

TEST(Parse, CommentsBlankLinesAndLabelCompaction) {
  auto g = parse("# header\n\n100 7\n  7 42\r\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.label(0), 7u);
  EXPECT_EQ(g.label(1), 42u);
  EXPECT_EQ(g.label(2), 100u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  try {
    parse("0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse("0 1\n1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("format error"), std::string::npos);
  }
  EXPECT_THROW(parse("5\n"), ParseError);
  EXPECT_THROW(load_static("/nonexistent/graph.txt"), std::runtime_error);
}

TEST(Parse, VariantDispatch) {
  std::istringstream a("0 1\n"), b("0 1 3\n");
  EXPECT_TRUE(std::holds_alternative<StaticGraph>(parse_edge_list(a, false)));
  EXPECT_TRUE(std::holds_alternative<TemporalEdgeList>(parse_edge_list(b, true)));
}

TEST(StaticGraph, CsrInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    auto g = testing::gnp(15, 0.3, rng);
    std::uint64_t degsum = 0;
    std::uint32_t maxd = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
      auto nb = g.neighbors(u);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (Vertex v : nb) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(v, u));
      }
      degsum += nb.size();
      maxd = std::max<std::uint32_t>(maxd, nb.size());
    }
    EXPECT_EQ(degsum, 2 * g.m());
    EXPECT_EQ(maxd, g.max_degree());
    EXPECT_EQ(StaticGraph::from_edges(g.n(), g.edges()), g);
  }
}

TEST(StaticGraph, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(StaticGraph::from_edges(2, {{0, 2}}), std::exception);
}

TEST(LineGraph, Examples) {
  auto lp = line_graph(path(3));
  EXPECT_EQ(lp.graph.n(), 2u);
  EXPECT_EQ(lp.graph.m(), 1u);
  auto ls = line_graph(star(3));
  EXPECT_EQ(ls.graph, clique(3));
  auto lc = line_graph(cycle(4));
  EXPECT_EQ(lc.graph.n(), 4u);
  EXPECT_EQ(lc.graph.m(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(lc.graph.degree(v), 2u);
}

TEST(LineGraph, AdjacencyMeansSharedEndpoint) {
  std::mt19937_64 rng(11);
  auto g = testing::gnp(10, 0.4, rng);
  auto lg = line_graph(g);
  ASSERT_EQ(lg.graph.n(), g.m());
  for (Vertex i = 0; i < lg.graph.n(); ++i)
    for (Vertex j = i + 1; j < lg.graph.n(); ++j) {
      auto [a, b] = lg.edge_of[i];
      auto [c, d] = lg.edge_of[j];
      bool share = a == c || a == d || b == c || b == d;
      EXPECT_EQ(lg.graph.has_edge(i, j), share);
    }
}

TEST(TruncatedBfs, Examples) {
  EXPECT_EQ(truncated_bfs(clique(3), 0, 3), 3u);
  EXPECT_EQ(truncated_bfs(path(3), 0, 3, 1), 1u);
  EXPECT_EQ(truncated_bfs(cycle(5), 2, 3), 3u);
  MutableGraph m(cycle(5));
  EXPECT_EQ(truncated_bfs(m, 2, 3), 3u);
  EXPECT_EQ(truncated_bfs(MutableGraph(path(3)), 0, 3, 1), 1u);
}

TEST(InducesConnected, Basics) {
  auto g = path(4);
  std::vector<Vertex> a{0, 1, 2}, b{0, 2}, c{3};
  EXPECT_TRUE(induces_connected(g, a));
  EXPECT_FALSE(induces_connected(g, b));
  EXPECT_TRUE(induces_connected(g, c));
}

TEST(MutableGraph, DeleteExamples) {
  MutableGraph t(clique(3));
  t.delete_vertex(0);
  EXPECT_FALSE(t.alive(0));
  EXPECT_EQ(live_neighbors(t, 1), std::vector<Vertex>{2});
  EXPECT_EQ(t.live_count(), 2u);
  t.restore_vertex(0);
  EXPECT_EQ(t, MutableGraph(clique(3)));

  MutableGraph p(path(3));
  p.delete_vertex(1);
  EXPECT_EQ(p.degree(0), 0u);
  EXPECT_EQ(p.degree(2), 0u);
}

TEST(MutableGraph, ContractExamples) {
  MutableGraph p(path(3));
  p.contract_edge(0, 1);
  EXPECT_EQ(live_neighbors(p, 0), std::vector<Vertex>{2});
  EXPECT_EQ(p.representative(1), 0u);

  MutableGraph t(clique(3));
  t.contract_edge(0, 1);
  EXPECT_EQ(live_neighbors(t, 0), std::vector<Vertex>{2});
  EXPECT_EQ(t.degree(2), 1u);

  MutableGraph c(cycle(4));
  c.contract_edge(0, 1);
  EXPECT_EQ(live_neighbors(c, 0), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(c.adjacent(2, 3));
  EXPECT_EQ(c.live_count(), 3u);
}

TEST(MutableGraph, MisuseIsRejected) {
  MutableGraph g(path(3));
  EXPECT_THROW(g.contract_edge(0, 2), UsageError);
  g.delete_vertex(0);
  g.delete_vertex(2);
  EXPECT_THROW(g.restore_vertex(0), UsageError);
  g.restore_vertex(2);
  g.restore_vertex(0);
  EXPECT_EQ(g, MutableGraph(path(3)));
}

// Random interleavings of deletions and contractions, rolled back in LIFO
// order, leave every list byte-identical to the start.
TEST(MutableGraph, UndoRestoresExactState) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    auto sg = testing::gnp(12, 0.35, rng);
    MutableGraph g(sg);
    const MutableGraph original(sg);
    std::vector<std::size_t> cps;
    std::vector<MutableGraph> snaps;
    for (int step = 0; step < 8; ++step) {
      std::vector<Vertex> live;
      for (Vertex v = 0; v < g.n(); ++v)
        if (g.alive(v)) live.push_back(v);
      if (live.size() < 2) break;
      cps.push_back(g.checkpoint());
      snaps.push_back(g);
      Vertex v = live[rng() % live.size()];
      if (rng() % 2 == 0 && g.degree(v) > 0) {
        auto nb = g.neighbors(v);
        g.contract_edge(v, nb[rng() % nb.size()]);
      } else {
        g.delete_vertex(v);
      }
      for (Vertex u = 0; u < g.n(); ++u) {
        if (!g.alive(u)) continue;
        auto nb = g.neighbors(u);
        EXPECT_EQ(nb.size(), g.degree(u));
        for (Vertex w : nb) {
          EXPECT_TRUE(g.alive(w));
          EXPECT_NE(w, u);
          EXPECT_TRUE(g.adjacent(w, u));
        }
        std::sort(nb.begin(), nb.end());
        EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      }
    }
    while (!cps.empty()) {
      g.rollback(cps.back());
      EXPECT_EQ(g, snaps.back());
      cps.pop_back();
      snaps.pop_back();
    }
    EXPECT_EQ(g, original);
  }
}

// Contraction matches a hand merge of neighbor sets.
TEST(MutableGraph, ContractionMatchesSetMerge) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    auto sg = testing::gnp(10, 0.4, rng);
    auto edges = sg.edges();
    if (edges.empty()) continue;
    auto [r, v] = edges[rng() % edges.size()];
    MutableGraph g(sg);
    g.contract_edge(r, v);
    std::vector<Vertex> expect;
    for (Vertex w : sg.neighbors(r))
      if (w != v) expect.push_back(w);
    for (Vertex w : sg.neighbors(v))
      if (w != r) expect.push_back(w);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    EXPECT_EQ(live_neighbors(g, r), expect);
  }
}

}  // namespace
}  // namespace gmine
