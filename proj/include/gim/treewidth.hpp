#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gim/graph.hpp"

namespace gim {

/// Tree of bags. Node i carries bags[i]; tree_edges index into bags.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// max |bag| - 1, or -1 with no bags.
  int width() const;
};

enum class DecompositionCondition {
  Ok,
  NotATree,
  VertexOutOfRange,
  VertexUncovered,
  EdgeUncovered,
  DisconnectedOccurrence,
};

std::string to_string(DecompositionCondition c);

struct DecompositionVerdict {
  DecompositionCondition condition = DecompositionCondition::Ok;
  std::string message;
  int width = -1;

  bool ok() const { return condition == DecompositionCondition::Ok; }
  explicit operator bool() const { return ok(); }
};

DecompositionVerdict validate_decomposition(const Graph& g, const TreeDecomposition& d);

/// Decomposition induced by eliminating vertices in `order` (a permutation of V(g)).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

inline constexpr Vertex kExactTreewidthMaxVertices = 24;

/// Exact treewidth by dynamic programming over eliminated vertex subsets,
/// restricted to subsets that can still beat a min-fill upper bound. Runs per
/// connected component. Throws ResourceError when a component has more than
/// kExactTreewidthMaxVertices vertices or more than `state_budget` subsets are stored.
TreewidthResult treewidth_exact(const Graph& g, std::size_t state_budget = 2'000'000);

struct TreewidthBounds {
  int lower = -1;
  int upper = -1;
  TreeDecomposition upper_witness;
};

/// Upper bound: best of min-fill and min-degree elimination. Lower bound:
/// max of degeneracy, greedy clique size - 1 and contraction degeneracy
/// (minor-min-width) over a few deterministic tie-breaking variants.
TreewidthBounds treewidth_bounds(const Graph& g);

/// Minor-min-width lower bound. `seed` 0 breaks ties by smallest identifier,
/// other values break them pseudo-randomly.
int contraction_degeneracy(const Graph& g, std::uint64_t seed = 0);
int degeneracy(const Graph& g);

/// Exact check of the width inequality for contracting disjoint connected sets.
struct ContractionBoundReport {
  int tw_original = 0;
  int tw_contracted = 0;
  int q = 1;  ///< largest set size (1 when no set is given)
  bool inequality_holds = false;  ///< q * tw_contracted >= tw_original
  /// What the lifting argument actually gives: q * (tw_contracted + 1) >= tw_original + 1.
  /// The inequality above can fail (K2 contracted to a point) while this one cannot.
  bool lifted_bound_holds = false;
  /// Decomposition of the original graph from an optimal one of the contracted
  /// graph, with every contracted vertex replaced by its set.
  TreeDecomposition lifted;
  int lifted_width = -1;
  bool lifted_valid = false;
};

ContractionBoundReport check_contraction_bound(const Graph& g, const std::vector<VertexSet>& sets);

enum class Degree3Mode { Exhaustive, Heuristic };

inline constexpr std::size_t kExhaustiveDegree3MaxEdges = 20;

/// Spanning subgraph (same vertex set) of maximum degree at most 3.
/// Exhaustive: maximises exact treewidth over all inclusion-maximal edge
/// subsets, needs |E| <= kExhaustiveDegree3MaxEdges (ResourceError otherwise).
/// Heuristic: while some vertex has degree >= 4, delete the edge at a
/// maximum-degree vertex whose removal keeps the contraction-degeneracy
/// lower bound highest.
Graph degree3_subgraph(const Graph& g, Degree3Mode mode = Degree3Mode::Heuristic);

/// PACE .td text ("s td bags width+1 n", "b i v...", tree edge lines; 1-indexed).
std::string to_td_format(const TreeDecomposition& d, Vertex n);
/// Returns the decomposition and the declared vertex count.
std::pair<TreeDecomposition, Vertex> from_td_format(const std::string& text);

}  // namespace gim
