#include <gtest/gtest.h>

#include <set>

#include "gim/errors.hpp"
#include "gim/generators.hpp"
#include "gim/graph.hpp"
#include "gim/graph_io.hpp"
#include "gim/graph_ops.hpp"
#include "gim/rng.hpp"
#include "support/oracles.hpp"

using namespace gim;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && oracle::canonical_code(oracle::SmallGraph::from(a)) ==
                               oracle::canonical_code(oracle::SmallGraph::from(b));
}

void expect_simple(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::set<Vertex> seen;
    for (Vertex u : g.neighbors(v)) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(seen.insert(u).second);
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_TRUE(g.has_vertex(u));
    }
    degree_sum += static_cast<std::size_t>(g.degree(v));
  }
  EXPECT_EQ(degree_sum, 2 * g.m());
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{-1, 2}}), InvalidInput);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ((g.edges()), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  const Graph g = gen::random_gnp(12, 0.4, 3);
  const Subgraph s = induced_subgraph(g, VertexSet::range(g.n()));
  EXPECT_EQ(s.graph, g);
}

TEST(InducedSubgraph, ConsecutiveCycleVerticesGivePath) {
  const Subgraph s = induced_subgraph(gen::cycle(5), {1, 2, 3});
  EXPECT_TRUE(isomorphic(s.graph, gen::path(3)));
  EXPECT_EQ(s.to_old, (std::vector<Vertex>{1, 2, 3}));
}

TEST(InducedSubgraph, MatchesEdgeFilterOnGridSubsets) {
  const Graph g = gen::grid(4);
  Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    std::vector<Vertex> all(16);
    for (Vertex v = 0; v < 16; ++v) all[static_cast<std::size_t>(v)] = v;
    rng.shuffle(all);
    all.resize(8);
    const VertexSet s(all);
    const Subgraph sub = induced_subgraph(g, s);
    ASSERT_EQ(sub.graph.n(), 8);
    std::set<Edge> expected, got;
    for (auto [u, v] : g.edges())
      if (s.contains(u) && s.contains(v)) expected.insert({u, v});
    for (auto [a, b] : sub.graph.edges()) {
      Vertex u = sub.to_old[static_cast<std::size_t>(a)], v = sub.to_old[static_cast<std::size_t>(b)];
      got.insert({std::min(u, v), std::max(u, v)});
    }
    EXPECT_EQ(got, expected);
    for (Vertex i = 0; i < 8; ++i) EXPECT_EQ(sub.to_new[static_cast<std::size_t>(sub.to_old[static_cast<std::size_t>(i)])], i);
  }
}

TEST(InducedSubgraph, RejectsForeignVertex) { EXPECT_THROW(induced_subgraph(gen::path(3), {0, 5}), InvalidInput); }

TEST(Distance, Basics) {
  const Graph p4 = gen::path(4);
  EXPECT_EQ(distance(p4, 2, 2), 0);
  EXPECT_EQ(distance(p4, 0, 3), 3);
  const Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(distance(two, 0, 3).has_value());
}

TEST(Distance, TriangleInequalityOnSamples) {
  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    const Graph g = gen::random_gnp(25, 0.1, rng.next());
    for (int t = 0; t < 50; ++t) {
      const auto a = static_cast<Vertex>(rng.below(25)), b = static_cast<Vertex>(rng.below(25)),
                 c = static_cast<Vertex>(rng.below(25));
      const auto ab = distance(g, a, b), bc = distance(g, b, c), ac = distance(g, a, c);
      if (ab && bc) {
        ASSERT_TRUE(ac.has_value());
        EXPECT_LE(*ac, *ab + *bc);
      }
    }
  }
}

TEST(Ball, RadiusZeroAndCycle) {
  EXPECT_EQ(ball(gen::grid(3), 4, 0), VertexSet({4}));
  EXPECT_EQ(ball(gen::cycle(8), 0, 2).size(), 5u);
}

TEST(Ball, AgreesWithDistanceAndNeighbourhoods) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = gen::random_regular(40, 3, seed);
    for (Vertex v = 0; v < g.n(); ++v) {
      const VertexSet b = ball(g, v, 2);
      std::set<Vertex> expected{v};
      for (Vertex u : g.neighbors(v)) {
        expected.insert(u);
        for (Vertex w : g.neighbors(u)) expected.insert(w);
      }
      EXPECT_EQ(std::set<Vertex>(b.begin(), b.end()), expected);
      for (Vertex u = 0; u < g.n(); ++u) {
        const auto d = distance(g, v, u);
        EXPECT_EQ(b.contains(u), d && *d <= 2);
      }
      // A ball vertex with a neighbour outside the ball is at distance exactly 2.
      for (Vertex x : b) {
        bool leaves = false;
        for (Vertex y : g.neighbors(x)) leaves = leaves || !b.contains(y);
        if (leaves) EXPECT_EQ(distance(g, v, x), 2);
      }
    }
  }
}

TEST(ContractSets, SingletonsAreIdentity) {
  const Graph g = gen::random_gnp(10, 0.3, 8);
  std::vector<VertexSet> singles;
  for (Vertex v = 0; v < g.n(); ++v) singles.push_back({v});
  EXPECT_EQ(contract_sets(g, singles).graph, g);
  EXPECT_EQ(contract_sets(g, {}).graph, g);
}

TEST(ContractSets, MiddleOfP4GivesP3) {
  const Contraction c = contract_sets(gen::path(4), {{1, 2}});
  EXPECT_TRUE(isomorphic(c.graph, gen::path(3)));
  EXPECT_EQ(c.map[1], c.map[2]);
}

TEST(ContractSets, GridRowMatchesQuotientRecomputation) {
  const Graph g = gen::grid(3);
  const Contraction c = contract_sets(g, {{3, 4, 5}});
  ASSERT_EQ(c.graph.n(), 7);
  std::set<Edge> expected;
  for (auto [u, v] : g.edges()) {
    const Vertex a = c.map[static_cast<std::size_t>(u)], b = c.map[static_cast<std::size_t>(v)];
    if (a != b) expected.insert({std::min(a, b), std::max(a, b)});
  }
  const auto e = c.graph.edges();
  EXPECT_EQ(std::set<Edge>(e.begin(), e.end()), expected);
  // Contracting singletons afterwards changes nothing.
  std::vector<VertexSet> singles;
  for (Vertex v = 0; v < c.graph.n(); ++v) singles.push_back({v});
  EXPECT_EQ(contract_sets(c.graph, singles).graph, c.graph);
}

TEST(ContractSets, ChecksPreconditions) {
  const Graph g = gen::path(5);
  EXPECT_THROW(contract_sets(g, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(contract_sets(g, {{0, 2}}), PreconditionError);
  EXPECT_THROW(contract_sets(g, {VertexSet{}}), PreconditionError);
}

TEST(Generators, GridShape) {
  EXPECT_TRUE(isomorphic(gen::grid(2), gen::cycle(4)));
  for (int k = 2; k <= 10; ++k) {
    const Graph g = gen::grid(k);
    expect_simple(g);
    EXPECT_EQ(g.m(), static_cast<std::size_t>(2 * k * (k - 1)));
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_EQ(g.degree(k * k - 1), 2);
    if (k >= 3) EXPECT_EQ(g.degree(k + 1), 4);
  }
}

TEST(Generators, LineGraphOfK4) {
  const Graph l = gen::line_graph(gen::clique(4));
  EXPECT_EQ(l.n(), 6);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(l.degree(v), 4);
}

TEST(Generators, WallsAndTriangulatedGrids) {
  for (int k = 2; k <= 8; ++k) {
    expect_simple(gen::wall(k));
    expect_simple(gen::elementary_wall(k));
    EXPECT_LE(gen::wall(k).max_degree(), 3);
    EXPECT_LE(gen::elementary_wall(k).max_degree(), 3);
    const Graph t = gen::triangulated_grid(k);
    expect_simple(t);
    EXPECT_EQ(t.m(), static_cast<std::size_t>(2 * k * (k - 1) + (k - 1) * (k - 1)));
  }
}

TEST(Generators, RandomRegularIsDeterministic) {
  const Graph a = gen::random_regular(50, 3, 17), b = gen::random_regular(50, 3, 17);
  EXPECT_EQ(a, b);
  expect_simple(a);
  for (Vertex v = 0; v < 50; ++v) EXPECT_EQ(a.degree(v), 3);
  EXPECT_THROW(gen::random_regular(5, 3, 1), InvalidInput);
  EXPECT_THROW(gen::grid(1), InvalidInput);
  EXPECT_THROW(gen::from_tag("nonsense:3"), InvalidInput);
}

TEST(Graph6, RoundTripOnRandomGraphs) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng.below(70));
    const Graph g = gen::random_gnp(n, rng.unit(), rng.next());
    const std::string s = io::to_graph6(g);
    const Graph h = io::from_graph6(s);
    EXPECT_EQ(h, g);
    EXPECT_EQ(io::to_graph6(h), s);
  }
}

TEST(Graph6, KnownEncodingsAndErrors) {
  EXPECT_EQ(io::to_graph6(Graph(0, {})), "?");
  EXPECT_EQ(io::to_graph6(gen::path(2)), "A_");
  EXPECT_EQ(io::to_graph6(gen::clique(4)), "C~");
  EXPECT_EQ(io::from_graph6(">>graph6<<C~\n"), gen::clique(4));
  EXPECT_THROW(io::from_graph6("C"), InvalidInput);
  EXPECT_THROW(io::from_graph6("C~~"), InvalidInput);
  EXPECT_THROW(io::from_graph6("C\x01"), InvalidInput);
}

TEST(EdgeList, RoundTripAndErrors) {
  const Graph g = gen::wall(3);
  EXPECT_EQ(io::from_edge_list(io::to_edge_list(g)), g);
  EXPECT_EQ(io::from_edge_list("# comment\n3 2\n0 1\n\n1 2\n"), gen::path(3));
  EXPECT_THROW(io::from_edge_list("3 2\n0 1\n"), InvalidInput);
  EXPECT_THROW(io::from_edge_list("3 1\n0 7\n"), InvalidInput);
  EXPECT_THROW(io::from_edge_list("x\n"), InvalidInput);
}
