#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gim {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex identifiers.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet range(Vertex n);

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  Vertex front() const { return members_.front(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Copies share storage, so passing graphs by value is cheap.
class Graph {
 public:
  Graph();
  /// Throws InvalidInput on self-loops or out-of-range endpoints. Duplicate
  /// edges (in either orientation) collapse to one.
  Graph(Vertex n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  Vertex n() const { return static_cast<Vertex>(data_->adj.size()); }
  std::size_t m() const { return data_->m; }

  std::span<const Vertex> neighbors(Vertex v) const { return data_->adj[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(data_->adj[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n(); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  int max_degree() const;
  int min_degree() const;

  bool has_labels() const { return !data_->labels.empty(); }
  /// Provenance label; the decimal identifier when the graph carries none.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return data_->labels; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    std::vector<std::vector<Vertex>> adj;
    std::size_t m = 0;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace gim
