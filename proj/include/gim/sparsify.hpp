#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gim/graph.hpp"
#include "gim/graph_ops.hpp"
#include "gim/models.hpp"

namespace gim {

enum class SparsType { Type1, Type2, Type3, NotSparsifiable };

std::string to_string(SparsType t);

/// Type1: degree <= 2. Type2: degree 3, every neighbour of degree <= 2.
/// Type3: degree 3, not Type2, one neighbour of degree <= 2 and the other two adjacent.
SparsType classify_vertex(const Graph& g, Vertex v);

inline bool is_sparsifiable_vertex(const Graph& g, Vertex v) {
  return classify_vertex(g, v) != SparsType::NotSparsifiable;
}

struct SparsifiableVerdict {
  bool ok = true;
  Vertex offender = kAbsent;  ///< smallest non-sparsifiable vertex
  explicit operator bool() const { return ok; }
};

SparsifiableVerdict is_sparsifiable(const Graph& g);

enum class EliminationRule {
  ShrinkDegree2,   ///< a degree-2 endpoint leaves its branch set
  ShrinkTriangle,  ///< degree-3 endpoints, third triangle vertex in X_u, X_v or unassigned
  ShrinkAcross,    ///< third triangle vertex in X_w with w missing an edge to u or v
  MoveToThird,     ///< both endpoints move into X_w
};

std::string to_string(EliminationRule r);

struct EliminationStep {
  Edge edge;       ///< the violating host edge (a, b), a < b
  Vertex owner_a;  ///< pattern vertex whose branch set held a
  Vertex owner_b;
  EliminationRule rule;
  std::vector<Vertex> removed;  ///< host vertices leaving their branch set
  Vertex receiver = kAbsent;    ///< pattern vertex gaining them (MoveToThird only)
  std::size_t violations_before = 0;
  std::size_t violations_after = 0;
};

struct EliminationResult {
  BranchModel model;
  std::size_t initial_violations = 0;
  std::vector<EliminationStep> steps;
};

/// Rewrites a minor model of a minimum-degree-3 pattern in a sparsifiable
/// host into an induced minor model. Each step treats the lexicographically
/// smallest violating edge; the result of every step is re-validated and must
/// have strictly fewer violating edges, else InvariantViolation.
/// Throws PreconditionError if the host is not sparsifiable, the pattern has a
/// vertex of degree < 3, or the model is not a valid minor model.
EliminationResult eliminate_violating_edges(const BranchModel& m);

/// Greedy partition into sets with pairwise distances >= 5: vertices in
/// ascending order take the smallest class unused within distance 4.
std::vector<VertexSet> partition_distance5(const Graph& g);

bool is_distance5_independent(const Graph& g, const VertexSet& s);

/// Returns a spanning subgraph of its argument with maximum degree <= 3.
using Degree3Oracle = std::function<Graph(const Graph&)>;

/// degree3_subgraph in heuristic mode.
Degree3Oracle default_degree3_oracle();

enum class BallOutcome { DegreeAtMost2, Type2, Type3, CenterRemoved };

std::string to_string(BallOutcome o);

struct BallRecord {
  Vertex center;
  VertexSet ball;       ///< vertices within distance 2 of the center
  VertexSet terminals;  ///< all at distance exactly 2
  VertexSet surviving;  ///< ball members kept in S
  BallOutcome outcome;
};

/// One shrinking round. All vertex ids refer to `input` except in
/// `preserved`, whose host is `result.graph`.
struct SparsifyTrace {
  Graph input;
  VertexSet centers;
  Graph contracted;             ///< balls contracted to single vertices
  Contraction contraction;      ///< input -> contracted
  Graph degree3;                ///< oracle output on `contracted`
  bool degree3_padded = false;  ///< oracle dropped vertices; padded back as isolated ones
  std::vector<BallRecord> balls;
  VertexSet kept;               ///< the surviving set S
  Subgraph result;              ///< input[S]
  BranchModel preserved;        ///< model of `degree3` in result.graph
};

/// Throws PreconditionError if `centers` is not distance-5 independent or the
/// oracle returns something other than a degree-<=3 subgraph; InvariantViolation
/// if the preserved model or a center's sparsifiability fails re-checking.
SparsifyTrace sparsify_step(const Graph& g, const VertexSet& centers, const Degree3Oracle& oracle);

struct PipelineStep {
  std::size_t class_index = 0;
  VertexSet class_members;  ///< original ids
  VertexSet centers;        ///< ids in the graph entering this step
  bool skipped = false;     ///< every class member was gone or already sparsifiable
  std::optional<SparsifyTrace> trace;
  Vertex n_before = 0;
  Vertex n_after = 0;
};

struct PipelineResult {
  std::vector<VertexSet> classes;
  std::vector<PipelineStep> steps;
  Subgraph final_subgraph;  ///< G_final as an induced subgraph of the input
  const Graph& final_graph() const { return final_subgraph.graph; }
};

/// Applies sparsify_step to each distance-5 class in turn. Class members that
/// are already sparsifiable when their class comes up are not used as centers.
/// Checks after every step that sparsifiable vertices stay sparsifiable, and
/// at the end that the final graph is sparsifiable (InvariantViolation otherwise).
PipelineResult sparsify_pipeline(const Graph& g, const Degree3Oracle& oracle = default_degree3_oracle());

}  // namespace gim
