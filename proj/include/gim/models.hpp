#pragma once

#include <string>
#include <vector>

#include "gim/graph.hpp"
#include "gim/graph_ops.hpp"

namespace gim {

/// Branch sets realising `pattern` inside `host`: branch_sets[p] is the host
/// vertex set standing for pattern vertex p.
struct BranchModel {
  Graph host;
  Graph pattern;
  std::vector<VertexSet> branch_sets;
};

enum class ModelKind { Minor, InducedMinor };

enum class ModelCondition {
  Ok,
  KeyMismatch,       ///< branch set count differs from |V(pattern)|
  VertexOutOfRange,  ///< branch set mentions a vertex outside V(host)
  EmptyBranchSet,
  Overlap,           ///< two branch sets share a host vertex
  Disconnected,      ///< host[X_p] is not connected
  MissingEdge,       ///< pattern edge uv with no host edge between X_u and X_v
  InducedViolation,  ///< host edge between branch sets of non-adjacent pattern vertices
};

std::string to_string(ModelCondition c);
std::string to_string(ModelKind k);

/// First failed condition, with the offending pattern vertices / host elements.
struct ModelVerdict {
  ModelCondition condition = ModelCondition::Ok;
  std::string message;
  std::vector<Vertex> pattern_vertices;
  std::vector<Vertex> host_vertices;

  bool ok() const { return condition == ModelCondition::Ok; }
  explicit operator bool() const { return ok(); }
};

ModelVerdict validate_minor_model(const BranchModel& m);
ModelVerdict validate_induced_minor_model(const BranchModel& m);
ModelVerdict validate_model(const BranchModel& m, ModelKind kind);

/// Host edges ab (a < b, lexicographic order) joining branch sets of distinct,
/// non-adjacent pattern vertices. Throws PreconditionError unless m is a valid minor model.
std::vector<Edge> violating_edges(const BranchModel& m);

/// Singleton model of g in itself.
BranchModel identity_model(const Graph& g);

/// Model of outer.pattern in inner.host: each branch set is the union of the
/// inner branch sets of the outer branch set's members. Requires
/// outer.host == inner.pattern; throws PreconditionError otherwise.
BranchModel compose_models(const BranchModel& outer, const BranchModel& inner);

/// The contraction read as a model of c.graph inside g (preimages as branch sets).
BranchModel model_from_contraction(const Graph& g, const Contraction& c);

/// Pulls a model living in the contracted graph back to g.
BranchModel compose_models(const BranchModel& outer, const Graph& g, const Contraction& c);

/// Re-expresses a model in an induced subgraph in terms of the parent graph.
BranchModel lift_model(const BranchModel& m, const Graph& parent, const Subgraph& sub);

/// Given a model of H and a contraction H -> H', the model of H' whose branch
/// sets are unions over preimages.
BranchModel contract_pattern(const BranchModel& m, const Contraction& pattern_contraction);

/// The k x k grid with the row-direction edge at each corner contracted.
struct CornerContraction {
  Graph grid;
  Contraction to_contracted;  ///< grid -> contracted
  Graph contracted;           ///< k^2 - 4 vertices, minimum degree 3
  BranchModel inner_grid;     ///< induced model of the (k-2) x (k-2) grid in `contracted`
};

/// Throws InvalidInput for k < 4.
CornerContraction grid_corner_contract(int k);

}  // namespace gim
