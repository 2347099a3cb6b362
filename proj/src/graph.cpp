#include "gim/graph.hpp"

#include <algorithm>

#include "gim/errors.hpp"

namespace gim {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(std::max<Vertex>(n, 0)));
  for (Vertex v = 0; v < n; ++v) s.members_[static_cast<std::size_t>(v)] = v;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
  if (it == s.members_.end() || *it != v) s.members_.insert(it, v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
  if (it != s.members_.end() && *it == v) s.members_.erase(it);
  return s;
}

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(Vertex n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw InvalidInput("label count does not match vertex count");
  auto d = std::make_shared<Data>();
  d->adj.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " +
                         std::to_string(n));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    d->adj[static_cast<std::size_t>(u)].push_back(v);
    d->adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice_m = 0;
  for (auto& nb : d->adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice_m += nb.size();
  }
  d->m = twice_m / 2;
  d->labels = std::move(labels);
  data_ = std::move(d);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  if (nu.size() > nv.size()) std::swap(nu, nv), std::swap(u, v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n() == 0) return 0;
  int d = degree(0);
  for (Vertex v = 1; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

std::string Graph::label(Vertex v) const {
  if (has_labels()) return data_->labels[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (Vertex v = 0; v < a.n(); ++v) {
    auto x = a.neighbors(v);
    auto y = b.neighbors(v);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

}  // namespace gim
