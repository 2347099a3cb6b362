#include "instances.hpp"

#include <optional>
#include <stdexcept>

#include "gim/generators.hpp"
#include "gim/rng.hpp"
#include "gim/sparsify.hpp"

namespace gim::fixtures {

namespace {

Graph min_degree3_pattern(Rng& rng) {
  for (;;) {
    const int p = 4 + static_cast<int>(rng.below(5));
    const double density = 0.55 + 0.3 * rng.unit();
    Graph g = gen::random_gnp(p, density, rng.next());
    if (g.min_degree() < 3) continue;
    if (g.m() == static_cast<std::size_t>(p * (p - 1) / 2)) continue;  // need a non-edge
    return g;
  }
}

struct Builder {
  std::vector<Edge> edges;
  std::vector<int> owner;  // pattern vertex per host vertex, -1 unassigned

  Vertex add(int own) {
    owner.push_back(own);
    return static_cast<Vertex>(owner.size() - 1);
  }
  void edge(Vertex a, Vertex b) { edges.emplace_back(a, b); }

  /// Path with `s` interior vertices from a to b; the first `to_a` belong to
  /// own_a and the rest to own_b.
  void path(Vertex a, Vertex b, int s, int to_a, int own_a, int own_b) {
    Vertex prev = a;
    for (int i = 0; i < s; ++i) {
      const Vertex x = add(i < to_a ? own_a : own_b);
      edge(prev, x);
      prev = x;
    }
    edge(prev, b);
  }
};

std::optional<PlantedInstance> attempt(Rng& rng) {
  const Graph pattern = min_degree3_pattern(rng);
  const int p = pattern.n();
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = u + 1; v < p; ++v)
      if (!pattern.has_edge(u, v)) non_edges.emplace_back(u, v);

  // Extra structures: kind 0 = path across a non-edge; kind 1 = triangle hub
  // whose first two corners go to the ends of a non-edge.
  struct Extra {
    int kind;
    Vertex u, v, w;
    int c_mode;  // 0: X_w, 1: unassigned, 2: X_u with its path, 3: X_u alone
  };
  std::vector<Extra> extras;
  const int count = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < count; ++i) {
    const Edge ne = non_edges[rng.below(non_edges.size())];
    Extra x{static_cast<int>(rng.below(2)), ne.first, ne.second, kAbsent, static_cast<int>(rng.below(4))};
    if (rng.below(2)) std::swap(x.u, x.v);
    do x.w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(p)));
    while (x.w == x.u || x.w == x.v);
    extras.push_back(x);
  }

  // Ports needed per pattern vertex.
  std::vector<int> ports_needed(static_cast<std::size_t>(p), 0);
  for (Vertex v = 0; v < p; ++v) ports_needed[static_cast<std::size_t>(v)] = pattern.degree(v);
  for (const auto& x : extras) {
    ++ports_needed[static_cast<std::size_t>(x.u)];
    ++ports_needed[static_cast<std::size_t>(x.v)];
    if (x.kind == 1) ++ports_needed[static_cast<std::size_t>(x.w)];
  }

  Builder b;
  std::vector<std::vector<Vertex>> ports(static_cast<std::size_t>(p));
  for (Vertex x = 0; x < p; ++x) {
    const int d = ports_needed[static_cast<std::size_t>(x)];
    auto& pv = ports[static_cast<std::size_t>(x)];
    if (d == 3 && rng.below(2)) {
      const Vertex c = b.add(x);
      pv.assign(3, c);
    } else if (d == 3) {
      for (int i = 0; i < 3; ++i) pv.push_back(b.add(x));
      b.edge(pv[0], pv[1]);
      b.edge(pv[1], pv[2]);
      b.edge(pv[0], pv[2]);
    } else {
      for (int i = 0; i < d; ++i) pv.push_back(b.add(x));
      for (int i = 0; i < d; ++i) {
        const Vertex mid = b.add(x);
        b.edge(pv[static_cast<std::size_t>(i)], mid);
        b.edge(mid, pv[static_cast<std::size_t>((i + 1) % d)]);
      }
    }
    rng.shuffle(pv);
  }
  std::vector<std::size_t> next_port(static_cast<std::size_t>(p), 0);
  auto port = [&](Vertex x) { return ports[static_cast<std::size_t>(x)][next_port[static_cast<std::size_t>(x)]++]; };
  auto interior = [&] { return 1 + static_cast<int>(rng.below(3)); };

  for (auto [u, v] : pattern.edges()) {
    const int s = interior();
    b.path(port(u), port(v), s, static_cast<int>(rng.below(static_cast<std::uint64_t>(s + 1))), u, v);
  }
  for (const auto& x : extras) {
    if (x.kind == 0) {
      const int s = interior();
      b.path(port(x.u), port(x.v), s, static_cast<int>(rng.below(static_cast<std::uint64_t>(s + 1))), x.u, x.v);
      continue;
    }
    const Vertex a = b.add(x.u), bb = b.add(x.v);
    const int c_owner = x.c_mode == 0 ? x.w : x.c_mode == 1 ? -1 : x.u;
    const Vertex c = b.add(c_owner);
    b.edge(a, bb);
    b.edge(bb, c);
    b.edge(a, c);
    const int sa = interior(), sb = interior(), sc = interior();
    b.path(a, port(x.u), sa, sa, x.u, x.u);
    b.path(bb, port(x.v), sb, sb, x.v, x.v);
    if (x.c_mode == 0 || x.c_mode == 2) b.path(c, port(x.w), sc, sc, c_owner, c_owner);
    else b.path(c, port(x.w), sc, sc, -1, -1);
  }

  // Shuffle host identifiers so the lexicographic edge order varies.
  const auto n = static_cast<Vertex>(b.owner.size());
  std::vector<Vertex> relabel(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) relabel[static_cast<std::size_t>(i)] = i;
  rng.shuffle(relabel);
  std::vector<Edge> edges;
  for (auto [x, y] : b.edges) edges.emplace_back(relabel[static_cast<std::size_t>(x)], relabel[static_cast<std::size_t>(y)]);
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(p));
  for (Vertex i = 0; i < n; ++i)
    if (b.owner[static_cast<std::size_t>(i)] >= 0)
      sets[static_cast<std::size_t>(b.owner[static_cast<std::size_t>(i)])].push_back(relabel[static_cast<std::size_t>(i)]);

  BranchModel m{Graph(n, edges), pattern, {}};
  for (auto& s : sets) m.branch_sets.emplace_back(std::move(s));
  if (!is_sparsifiable(m.host)) throw std::logic_error("planted instance host is not sparsifiable");
  if (!validate_minor_model(m)) throw std::logic_error("planted instance is not a minor model");
  const std::size_t violations = violating_edges(m).size();
  if (violations < 1 || violations > 3) return std::nullopt;
  return PlantedInstance{std::move(m), violations};
}

}  // namespace

PlantedInstance planted_violation_instance(std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  for (;;)
    if (auto inst = attempt(rng)) return *std::move(inst);
}

std::vector<BranchModel> replay_elimination(const BranchModel& start, const EliminationResult& r) {
  std::vector<BranchModel> out;
  BranchModel cur = start;
  for (const auto& step : r.steps) {
    for (Vertex x : step.removed)
      for (auto& s : cur.branch_sets)
        if (s.contains(x)) s = s.without(x);
    if (step.receiver != kAbsent)
      for (Vertex x : step.removed) {
        auto& s = cur.branch_sets[static_cast<std::size_t>(step.receiver)];
        s = s.with(x);
      }
    out.push_back(cur);
  }
  return out;
}

}  // namespace gim::fixtures
