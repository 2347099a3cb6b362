#include <gtest/gtest.h>

#include <set>

#include "gim/errors.hpp"
#include "gim/generators.hpp"
#include "gim/graph_ops.hpp"
#include "gim/pipeline.hpp"
#include "gim/rng.hpp"
#include "gim/sparsify.hpp"
#include "gim/treewidth.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace gim;

TEST(Classify, BasicTypes) {
  EXPECT_EQ(classify_vertex(gen::path(3), 1), SparsType::Type1);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(classify_vertex(gen::clique(4), v), SparsType::NotSparsifiable);
  const Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(classify_vertex(claw, 0), SparsType::Type2);
  // 0 has a pendant neighbour 1 and a triangle with 2 and 3, which have degree 3.
  const Graph t3(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {2, 4}, {3, 5}});
  EXPECT_EQ(classify_vertex(t3, 0), SparsType::Type3);
  // Same but 2 and 3 are not adjacent.
  const Graph no_tri(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  EXPECT_EQ(classify_vertex(no_tri, 0), SparsType::NotSparsifiable);
  // A triangle whose third vertex has low degree is type 2, not type 3.
  const Graph tri_low(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  EXPECT_EQ(classify_vertex(tri_low, 0), SparsType::Type2);
}

TEST(Classify, Sparsifiability) {
  EXPECT_TRUE(is_sparsifiable(gen::cycle(7)).ok);
  EXPECT_TRUE(is_sparsifiable(gen::path(5)).ok);
  EXPECT_TRUE(is_sparsifiable(Graph(0, {})).ok);
  for (int k = 2; k <= 8; ++k) EXPECT_TRUE(is_sparsifiable(gen::wall(k)).ok) << k;
  const auto v = is_sparsifiable(gen::clique(4));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.offender, 0);
}

TEST(Classify, MonotoneUnderInducedSubgraphs) {
  Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const Graph g = gen::random_gnp(14, 0.2, rng.next());
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
      if (rng.below(3)) keep.push_back(v);
    const Subgraph sub = induced_subgraph(g, VertexSet(keep));
    for (Vertex i = 0; i < sub.graph.n(); ++i)
      if (is_sparsifiable_vertex(g, sub.to_old[static_cast<std::size_t>(i)]))
        EXPECT_TRUE(is_sparsifiable_vertex(sub.graph, i));
  }
}

TEST(Eliminate, NoViolationsReturnsInput) {
  // K4 itself is not sparsifiable; use a subdivided K4.
  Graph host(10, {{0, 4}, {4, 1}, {0, 5}, {5, 2}, {0, 6}, {6, 3}, {1, 7}, {7, 2}, {1, 8}, {8, 3}, {2, 9}, {9, 3}});
  const BranchModel k4{host, gen::clique(4), {{0, 4}, {1, 7, 8}, {2, 5, 9}, {3, 6}}};
  ASSERT_TRUE(validate_minor_model(k4).ok());
  const auto r = eliminate_violating_edges(k4);
  EXPECT_EQ(r.initial_violations, 0u);
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.model.branch_sets, k4.branch_sets);
}

TEST(Eliminate, Preconditions) {
  const BranchModel k4 = identity_model(gen::clique(4));
  EXPECT_THROW(eliminate_violating_edges(k4), PreconditionError);  // host not sparsifiable
  const BranchModel c5 = identity_model(gen::cycle(5));
  EXPECT_THROW(eliminate_violating_edges(c5), PreconditionError);  // pattern degree 2
  auto inst = fixtures::planted_violation_instance(1);
  inst.model.branch_sets[0] = VertexSet{};
  EXPECT_THROW(eliminate_violating_edges(inst.model), PreconditionError);
}

TEST(Eliminate, PlantedInstances) {
  std::set<EliminationRule> rules;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto inst = fixtures::planted_violation_instance(seed);
    ASSERT_GE(inst.planted_violations, 1u);
    ASSERT_LE(inst.planted_violations, 3u);
    const auto r = eliminate_violating_edges(inst.model);
    EXPECT_EQ(r.initial_violations, inst.planted_violations);
    EXPECT_LE(r.steps.size(), r.initial_violations);
    const auto models = fixtures::replay_elimination(inst.model, r);
    std::size_t prev = r.initial_violations;
    for (std::size_t i = 0; i < models.size(); ++i) {
      ASSERT_TRUE(oracle::is_minor_model(models[i].host, models[i].pattern, models[i].branch_sets)) << seed;
      const std::size_t now = violating_edges(models[i]).size();
      EXPECT_LT(now, prev);
      EXPECT_EQ(now, r.steps[i].violations_after);
      prev = now;
      rules.insert(r.steps[i].rule);
    }
    if (!models.empty()) EXPECT_EQ(models.back().branch_sets, r.model.branch_sets);
    EXPECT_TRUE(oracle::is_induced_minor_model(r.model.host, r.model.pattern, r.model.branch_sets)) << seed;
  }
  EXPECT_EQ(rules.size(), 4u) << "every rewriting rule should occur in the sample";
}

TEST(Eliminate, DeterministicStepLog) {
  const auto inst = fixtures::planted_violation_instance(42);
  const auto a = eliminate_violating_edges(inst.model), b = eliminate_violating_edges(inst.model);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].edge, b.steps[i].edge);
    EXPECT_EQ(a.steps[i].removed, b.steps[i].removed);
  }
}

namespace {

// The greedy rule written out directly: ascending ids, smallest class index
// not used within distance 4.
std::vector<int> greedy_classes(const Graph& g) {
  std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    std::set<int> used;
    for (Vertex u = 0; u < v; ++u) {
      const auto d = distance(g, u, v);
      if (d && *d <= 4) used.insert(cls[static_cast<std::size_t>(u)]);
    }
    int c = 0;
    while (used.count(c)) ++c;
    cls[static_cast<std::size_t>(v)] = c;
  }
  return cls;
}

void check_partition(const Graph& g, const std::vector<VertexSet>& classes) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_TRUE(is_distance5_independent(g, classes[i]));
    for (Vertex v : classes[i]) {
      EXPECT_EQ(seen[static_cast<std::size_t>(v)], -1);
      seen[static_cast<std::size_t>(v)] = static_cast<int>(i);
      for (Vertex u : classes[i]) {
        if (u == v) continue;
        const auto d = distance(g, u, v);
        EXPECT_TRUE(!d || *d >= 5);
      }
    }
  }
  for (int s : seen) EXPECT_GE(s, 0);
  const int d = g.n() ? g.max_degree() : 0;
  const std::size_t bound = d <= 1 ? 2 : static_cast<std::size_t>(d * d * d * d + 1);
  EXPECT_LE(classes.size(), bound);
  const auto expected = greedy_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) EXPECT_EQ(expected[static_cast<std::size_t>(v)], static_cast<int>(i));
}

}  // namespace

TEST(Partition5, Examples) {
  EXPECT_EQ(partition_distance5(Graph(6, {})).size(), 1u);
  check_partition(gen::cycle(12), partition_distance5(gen::cycle(12)));
  const Graph cubic = gen::random_regular(100, 3, 3);
  const auto classes = partition_distance5(cubic);
  EXPECT_LE(classes.size(), 82u);
  check_partition(cubic, classes);
  check_partition(gen::grid(6), partition_distance5(gen::grid(6)));
  EXPECT_FALSE(is_distance5_independent(gen::path(5), {0, 4}));
  EXPECT_TRUE(is_distance5_independent(gen::path(6), {0, 5}));
}

TEST(SparsifyStep, EmptyCenterSetKeepsEverything) {
  const Graph g = gen::random_regular(30, 3, 5);
  const auto t = sparsify_step(g, {}, default_degree3_oracle());
  EXPECT_EQ(t.kept, VertexSet::range(g.n()));
  EXPECT_TRUE(validate_minor_model(t.preserved).ok());
}

TEST(SparsifyStep, CycleOfNine) {
  const Graph g = gen::cycle(9);
  const auto t = sparsify_step(g, {0}, [](const Graph& h) { return h; });
  ASSERT_EQ(t.balls.size(), 1u);
  const auto& b = t.balls[0];
  EXPECT_EQ(b.ball, VertexSet({0, 1, 2, 7, 8}));
  EXPECT_EQ(b.terminals, VertexSet({2, 7}));
  EXPECT_EQ(b.outcome, BallOutcome::DegreeAtMost2);
  EXPECT_EQ(t.kept, VertexSet::range(9));
  EXPECT_EQ(t.contracted.n(), 5);
  EXPECT_TRUE(validate_minor_model(t.preserved).ok());
}

TEST(SparsifyStep, Preconditions) {
  const Graph g = gen::random_regular(30, 3, 2);
  EXPECT_THROW(sparsify_step(g, {0, g.neighbors(0)[0]}, default_degree3_oracle()), PreconditionError);
  // The identity oracle keeps degree-4 grid vertices.
  EXPECT_THROW(sparsify_step(gen::grid(7), {24}, [](const Graph& h) { return h; }), PreconditionError);
  // An oracle inventing an edge.
  const Graph p6 = gen::path(6);
  EXPECT_THROW(sparsify_step(p6, {}, [](const Graph&) { return gen::cycle(6); }), PreconditionError);
}

TEST(SparsifyStep, PaddingWhenOracleDropsVertices) {
  const Graph g = gen::random_regular(40, 3, 9);
  const VertexSet centers = partition_distance5(g).front();
  const auto t = sparsify_step(g, centers, [](const Graph& h) { return Graph(h.n() - 1, {}); });
  EXPECT_TRUE(t.degree3_padded);
  EXPECT_EQ(t.degree3.n(), t.contracted.n());
  EXPECT_TRUE(validate_minor_model(t.preserved).ok());
}

TEST(SparsifyStep, RandomRegularPostconditions) {
  for (int d : {3, 4}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Graph g = gen::random_regular(120, d, seed);
      for (const auto& centers : partition_distance5(g)) {
        const auto t = sparsify_step(g, centers, default_degree3_oracle());
        std::set<Vertex> in_balls;
        for (const auto& b : t.balls) {
          in_balls.insert(b.ball.begin(), b.ball.end());
          for (Vertex x : b.terminals) EXPECT_EQ(distance(g, b.center, x), 2);
          EXPECT_LE(b.terminals.size(), 3u);
          for (Vertex x : b.ball) EXPECT_EQ(b.surviving.contains(x), t.kept.contains(x));
          if (b.outcome == BallOutcome::CenterRemoved) EXPECT_FALSE(t.kept.contains(b.center));
          else EXPECT_TRUE(t.kept.contains(b.center));
        }
        for (Vertex v = 0; v < g.n(); ++v)
          if (!in_balls.count(v)) EXPECT_TRUE(t.kept.contains(v));  // Q is kept
        for (Vertex c : centers)
          if (t.kept.contains(c))
            EXPECT_TRUE(is_sparsifiable_vertex(t.result.graph, t.result.to_new[static_cast<std::size_t>(c)]));
        EXPECT_TRUE(oracle::is_minor_model(t.result.graph, t.degree3, t.preserved.branch_sets));
        EXPECT_LE(t.degree3.max_degree(), 3);
      }
    }
  }
}

TEST(Pipeline, FinalGraphIsSparsifiable) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen::random_regular(80 + 10 * static_cast<int>(seed % 4), 3, seed);
    const auto p = sparsify_pipeline(g);
    EXPECT_TRUE(is_sparsifiable(p.final_graph()).ok);
    EXPECT_EQ(p.final_subgraph.to_old.size(), static_cast<std::size_t>(p.final_graph().n()));
  }
  const auto wall = sparsify_pipeline(gen::wall(5));
  EXPECT_TRUE(is_sparsifiable(wall.final_graph()).ok);
}

TEST(Pipeline, MaxDegreeTwoIsUntouched) {
  const Graph g(12, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}, {8, 9}});
  const auto p = sparsify_pipeline(g);
  EXPECT_EQ(p.final_graph(), g);
  for (const auto& s : p.steps) EXPECT_TRUE(s.skipped);
}

TEST(GridPipeline, CliqueIsNotFound) {
  const auto r = grid_induced_minor_pipeline(gen::clique(6), 4);
  EXPECT_EQ(r.status, PipelineStatus::NotFound);
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_THROW(grid_induced_minor_pipeline(gen::clique(6), 3), InvalidInput);
}

TEST(GridPipeline, WallGivesValidCertificate) {
  const auto r = grid_induced_minor_pipeline(gen::wall(8), 4);
  ASSERT_EQ(r.status, PipelineStatus::Found);
  ASSERT_TRUE(r.certificate.has_value());
  const auto& c = *r.certificate;
  EXPECT_EQ(c.kind, ModelKind::InducedMinor);
  EXPECT_EQ(c.pattern_tag, "grid:2");
  EXPECT_TRUE(oracle::is_induced_minor_model(gen::wall(8), gen::grid(2), c.model.branch_sets));
}
