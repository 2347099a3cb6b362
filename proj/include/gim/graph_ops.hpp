#pragma once

#include <optional>
#include <vector>

#include "gim/graph.hpp"

namespace gim {

inline constexpr Vertex kAbsent = -1;

/// G[S] together with the identifier maps in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_new;  ///< parent vertex -> subgraph vertex, kAbsent if dropped
  std::vector<Vertex> to_old;  ///< subgraph vertex -> parent vertex
};

/// Result vertices keep the relative order of S. Throws InvalidInput for members outside V(G).
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Breadth-first distances from `source`; -1 marks unreachable vertices (or
/// vertices beyond `max_radius` when it is non-negative).
std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_radius = -1);

/// Number of edges on a shortest u-v path; nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Vertices at distance at most r from v.
VertexSet ball(const Graph& g, Vertex v, int r);

/// Whether G[s] is connected. The empty set is not connected.
bool is_connected(const Graph& g, const VertexSet& s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Quotient graph obtained by contracting each set to one vertex.
struct Contraction {
  Graph graph;
  std::vector<Vertex> map;           ///< input vertex -> result vertex
  std::vector<VertexSet> preimage;   ///< result vertex -> input vertices
};

/// Result vertices are numbered by the smallest input vertex they contain, so
/// contracting only singletons is the identity. Merged vertices are labelled
/// with their parts joined by '+'.
///
/// Throws PreconditionError if sets overlap, are empty, or induce a disconnected subgraph.
Contraction contract_sets(const Graph& g, const std::vector<VertexSet>& sets);

}  // namespace gim
