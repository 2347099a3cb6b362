#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gim/graph.hpp"
#include "gim/treewidth.hpp"

namespace gim {

/// Graph with one non-negative integer weight per vertex.
struct WeightedGraph {
  Graph graph;
  std::vector<std::uint64_t> weights;

  /// Unit weights.
  static WeightedGraph unit(const Graph& g);
};

/// Throws InvalidInput unless there is exactly one weight per vertex.
void check_weights(const WeightedGraph& w);

struct MwisSolution {
  VertexSet set;
  std::uint64_t total = 0;
};

bool is_independent(const Graph& g, const VertexSet& s);
std::uint64_t weight_of(const WeightedGraph& w, const VertexSet& s);

/// All solvers return the same set: the maximum-weight independent set that,
/// among those of equal weight, contains the smallest vertex in which any two
/// of them differ.
inline constexpr Vertex kBruteForceMaxVertices = 24;

/// Subset enumeration per connected component; ResourceError above
/// kBruteForceMaxVertices vertices.
MwisSolution mwis_bruteforce(const WeightedGraph& w);

/// Dynamic programming over independent subsets of each bag. Throws
/// PreconditionError if `d` is not a valid decomposition of w.graph, and
/// ResourceError for bags of more than 30 vertices.
MwisSolution mwis_treewidth_dp(const WeightedGraph& w, const TreeDecomposition& d);

struct BranchingStats {
  std::uint64_t tree_nodes = 0;  ///< nodes of the branching tree, leaves included
  std::uint64_t branchings = 0;
  std::uint64_t leaves = 0;
  int max_branch_depth = 0;
  std::map<int, std::uint64_t> leaf_widths;  ///< decomposition width -> leaf count
};

struct BranchingResult {
  MwisSolution solution;
  BranchingStats stats;
};

/// While some vertex has degree >= threshold, branch on a maximum-degree
/// vertex (exclude it / take it and drop its neighbours); leaves are solved
/// with mwis_treewidth_dp on an exact decomposition (at most 20 vertices) or a
/// min-fill one. threshold must be >= 1.
BranchingResult mwis_branching(const WeightedGraph& w, int threshold);

/// max(2, ceil(log2(n / log2 n) ^ (1/5))), and 2 for n < 3.
int default_branching_threshold(Vertex n);

}  // namespace gim
