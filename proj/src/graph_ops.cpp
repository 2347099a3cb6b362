#include "gim/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gim/errors.hpp"

namespace gim {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    throw InvalidInput("vertex " + std::to_string(v) + " is not in a graph with " + std::to_string(g.n()) +
                       " vertices");
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph out;
  out.to_new.assign(static_cast<std::size_t>(g.n()), kAbsent);
  out.to_old.reserve(s.size());
  for (Vertex v : s) {
    check_vertex(g, v);
    out.to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_old.size());
    out.to_old.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex v : s) {
    if (g.has_labels()) labels.push_back(g.label(v));
    for (Vertex w : g.neighbors(v)) {
      Vertex nw = out.to_new[static_cast<std::size_t>(w)];
      if (v < w && nw != kAbsent) edges.emplace_back(out.to_new[static_cast<std::size_t>(v)], nw);
    }
  }
  out.graph = Graph(static_cast<Vertex>(s.size()), edges, std::move(labels));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_radius) {
  check_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int dv = dist[static_cast<std::size_t>(v)];
    if (max_radius >= 0 && dv == max_radius) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  if (r < 0) throw InvalidInput("negative radius");
  auto dist = bfs_distances(g, v, r);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.n(); ++w)
    if (dist[static_cast<std::size_t>(w)] >= 0) out.push_back(w);
  return VertexSet(std::move(out));
}

bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{s.front()};
  seen[static_cast<std::size_t>(s.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)] && s.contains(w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    out.emplace_back(std::move(comp));
  }
  return out;
}

Contraction contract_sets(const Graph& g, const std::vector<VertexSet>& sets) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw PreconditionError("contraction set " + std::to_string(i) + " is empty");
    for (Vertex v : sets[i]) {
      check_vertex(g, v);
      if (owner[static_cast<std::size_t>(v)] >= 0)
        throw PreconditionError("contraction sets " + std::to_string(owner[static_cast<std::size_t>(v)]) + " and " +
                                std::to_string(i) + " share vertex " + std::to_string(v));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    if (!is_connected(g, sets[i]))
      throw PreconditionError("contraction set " + std::to_string(i) + " does not induce a connected subgraph");
  }

  Contraction out;
  out.map.assign(n, kAbsent);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (out.map[static_cast<std::size_t>(v)] != kAbsent) continue;
    const auto id = static_cast<Vertex>(out.preimage.size());
    int o = owner[static_cast<std::size_t>(v)];
    if (o < 0) {
      out.map[static_cast<std::size_t>(v)] = id;
      out.preimage.push_back(VertexSet{v});
    } else {
      for (Vertex w : sets[static_cast<std::size_t>(o)]) out.map[static_cast<std::size_t>(w)] = id;
      out.preimage.push_back(sets[static_cast<std::size_t>(o)]);
    }
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = out.map[static_cast<std::size_t>(u)];
    Vertex b = out.map[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::string> labels;
  const bool merged = std::any_of(sets.begin(), sets.end(), [](const VertexSet& s) { return s.size() > 1; });
  if (merged || g.has_labels())
  for (const auto& pre : out.preimage) {
    std::string l;
    for (Vertex v : pre) {
      if (!l.empty()) l += '+';
      l += g.label(v);
    }
    labels.push_back(std::move(l));
  }
  out.graph = Graph(static_cast<Vertex>(out.preimage.size()), edges, std::move(labels));
  return out;
}

}  // namespace gim
