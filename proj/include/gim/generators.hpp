#pragma once

#include <cstdint>
#include <string>

#include "gim/graph.hpp"

namespace gim::gen {

/// k x k lattice; vertex (r, c) is r * k + c.
Graph grid(int k);
/// grid(k) plus the NW-SE diagonal of every unit face.
Graph triangulated_grid(int k);
/// Elementary wall: k rows of 2k vertices, rungs between consecutive rows at
/// alternating positions, pendant end vertices removed. Interior vertices have degree 3.
Graph elementary_wall(int k);
/// elementary_wall(k) with every edge subdivided once. Every degree-3 vertex
/// has only degree-2 neighbours.
Graph wall(int k);
Graph line_graph(const Graph& g);
Graph cycle(int n);
Graph path(int n);
Graph clique(int n);
/// Uniform pairing model with rejection of loops and multi-edges.
Graph random_regular(int n, int d, std::uint64_t seed);
/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Parses a family tag such as "grid:4", "wall:8", "clique:5",
/// "random_regular:100:3:7" (n, d, seed), "corner_grid:10".
Graph from_tag(const std::string& tag);

}  // namespace gim::gen
