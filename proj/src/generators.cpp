#include "gim/generators.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "gim/errors.hpp"
#include "gim/models.hpp"
#include "gim/rng.hpp"

namespace gim::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

Graph grid(int k) {
  require(k >= 2, "grid side must be at least 2");
  std::vector<Edge> e;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) e.emplace_back(r * k + c, r * k + c + 1);
      if (r + 1 < k) e.emplace_back(r * k + c, (r + 1) * k + c);
    }
  return Graph(k * k, e);
}

Graph triangulated_grid(int k) {
  require(k >= 1, "grid side must be at least 1");
  if (k == 1) return Graph(1, {});
  std::vector<Edge> e = grid(k).edges();
  for (int r = 0; r + 1 < k; ++r)
    for (int c = 0; c + 1 < k; ++c) e.emplace_back(r * k + c, (r + 1) * k + c + 1);
  return Graph(k * k, e);
}

Graph elementary_wall(int k) {
  require(k >= 2, "wall side must be at least 2");
  const int w = 2 * k;
  auto id = [w](int r, int c) { return r * w + c; };
  std::vector<Edge> e;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < w; ++c) {
      if (c + 1 < w) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < k && (r + c) % 2 == 0) e.emplace_back(id(r, c), id(r + 1, c));
    }
  Graph full(k * w, e);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < full.n(); ++v)
    if (full.degree(v) >= 2) keep.push_back(v);
  std::vector<Vertex> to_new(static_cast<std::size_t>(full.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) to_new[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Edge> kept;
  for (auto [u, v] : full.edges())
    if (to_new[static_cast<std::size_t>(u)] >= 0 && to_new[static_cast<std::size_t>(v)] >= 0)
      kept.emplace_back(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
  return Graph(static_cast<Vertex>(keep.size()), kept);
}

Graph wall(int k) {
  Graph base = elementary_wall(k);
  std::vector<Edge> e;
  Vertex next = base.n();
  for (auto [u, v] : base.edges()) {
    e.emplace_back(u, next);
    e.emplace_back(next, v);
    ++next;
  }
  return Graph(next, e);
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.n()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[static_cast<std::size_t>(edges[i].first)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(edges[i].second)].push_back(static_cast<Vertex>(i));
    labels.push_back(g.label(edges[i].first) + "-" + g.label(edges[i].second));
  }
  std::vector<Edge> e;
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) e.emplace_back(inc[i], inc[j]);
  return Graph(static_cast<Vertex>(edges.size()), e, std::move(labels));
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph clique(int n) {
  require(n >= 1, "clique needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 1 && d >= 0, "random regular graph needs n >= 1 and d >= 0");
  require(d < n, "random regular graph needs d < n");
  require((static_cast<long long>(n) * d) % 2 == 0, "random regular graph needs n * d even");
  Rng rng(seed);
  std::vector<Vertex> points;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.shuffle(points);
    std::vector<Edge> e;
    bool simple = true;
    std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      Vertex a = points[i], b = points[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      for (Vertex x : seen[static_cast<std::size_t>(a)])
        if (x == b) simple = false;
      seen[static_cast<std::size_t>(a)].push_back(b);
      seen[static_cast<std::size_t>(b)].push_back(a);
      e.emplace_back(a, b);
    }
    if (simple) return Graph(n, e);
  }
  throw InvalidInput("pairing model failed to produce a simple graph");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0.0 && p <= 1.0, "G(n, p) needs n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

long long to_int(const std::string& s, const std::string& tag) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InvalidInput("bad number '" + s + "' in tag '" + tag + "'");
  return v;
}

}  // namespace

Graph from_tag(const std::string& tag) {
  const auto parts = split(tag, ':');
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidInput("family tag '" + tag + "' is missing an argument");
    return to_int(parts[i], tag);
  };
  auto one = [&] {
    if (parts.size() != 2) throw InvalidInput("family tag '" + tag + "' takes exactly one argument");
    return static_cast<int>(arg(1));
  };
  if (kind == "grid") return grid(one());
  if (kind == "triangulated_grid") return triangulated_grid(one());
  if (kind == "wall") return wall(one());
  if (kind == "elementary_wall") return elementary_wall(one());
  if (kind == "cycle") return cycle(one());
  if (kind == "path") return path(one());
  if (kind == "clique") return clique(one());
  if (kind == "corner_grid") return grid_corner_contract(one()).contracted;
  if (kind == "line_grid") return line_graph(grid(one()));
  if (kind == "line_wall") return line_graph(wall(one()));
  if (kind == "random_regular") {
    if (parts.size() != 4) throw InvalidInput("random_regular tag is random_regular:n:d:seed");
    return random_regular(static_cast<int>(arg(1)), static_cast<int>(arg(2)), static_cast<std::uint64_t>(arg(3)));
  }
  throw InvalidInput("unknown graph family '" + kind + "'");
}

}  // namespace gim::gen
