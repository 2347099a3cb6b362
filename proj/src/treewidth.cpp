#include "gim/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "bitset.hpp"
#include "gim/errors.hpp"
#include "gim/graph_ops.hpp"
#include "gim/rng.hpp"

namespace gim {

using detail::Bits;

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::string to_string(DecompositionCondition c) {
  switch (c) {
    case DecompositionCondition::Ok: return "ok";
    case DecompositionCondition::NotATree: return "not-a-tree";
    case DecompositionCondition::VertexOutOfRange: return "vertex-out-of-range";
    case DecompositionCondition::VertexUncovered: return "vertex-uncovered";
    case DecompositionCondition::EdgeUncovered: return "edge-uncovered";
    case DecompositionCondition::DisconnectedOccurrence: return "disconnected-occurrence";
  }
  return "unknown";
}

DecompositionVerdict validate_decomposition(const Graph& g, const TreeDecomposition& d) {
  auto fail = [](DecompositionCondition c, std::string msg) { return DecompositionVerdict{c, std::move(msg), -1}; };
  const std::size_t nodes = d.bags.size();
  if (nodes == 0) {
    if (g.n() == 0) return DecompositionVerdict{DecompositionCondition::Ok, {}, -1};
    return fail(DecompositionCondition::VertexUncovered, "no bags for a non-empty graph");
  }
  if (d.tree_edges.size() != nodes - 1)
    return fail(DecompositionCondition::NotATree, std::to_string(d.tree_edges.size()) + " tree edges for " +
                                                      std::to_string(nodes) + " nodes");
  std::vector<std::vector<int>> tadj(nodes);
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes || static_cast<std::size_t>(b) >= nodes || a == b)
      return fail(DecompositionCondition::NotATree, "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
    tadj[static_cast<std::size_t>(a)].push_back(b);
    tadj[static_cast<std::size_t>(b)].push_back(a);
  }
  {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != nodes) return fail(DecompositionCondition::NotATree, "tree is disconnected");
  }

  std::vector<std::vector<int>> occ(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < nodes; ++i)
    for (Vertex v : d.bags[i]) {
      if (!g.has_vertex(v))
        return fail(DecompositionCondition::VertexOutOfRange,
                    "bag " + std::to_string(i) + " holds non-vertex " + std::to_string(v));
      occ[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
  for (Vertex v = 0; v < g.n(); ++v)
    if (occ[static_cast<std::size_t>(v)].empty())
      return fail(DecompositionCondition::VertexUncovered, "vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : occ[static_cast<std::size_t>(u)])
      if (d.bags[static_cast<std::size_t>(i)].contains(v)) {
        covered = true;
        break;
      }
    if (!covered)
      return fail(DecompositionCondition::EdgeUncovered,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  std::vector<char> mark(nodes, 0), seen(nodes, 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& o = occ[static_cast<std::size_t>(v)];
    for (int i : o) mark[static_cast<std::size_t>(i)] = 1, seen[static_cast<std::size_t>(i)] = 0;
    std::vector<int> stack{o.front()};
    seen[static_cast<std::size_t>(o.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[static_cast<std::size_t>(x)])
        if (mark[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    for (int i : o) mark[static_cast<std::size_t>(i)] = 0;
    if (reached != o.size())
      return fail(DecompositionCondition::DisconnectedOccurrence,
                  "bags containing vertex " + std::to_string(v) + " do not form a subtree");
  }
  return DecompositionVerdict{DecompositionCondition::Ok, {}, d.width()};
}

namespace {

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(static_cast<std::size_t>(g.n()), Bits(static_cast<std::size_t>(g.n())));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  return adj;
}

enum class Greedy { MinFill, MinDegree };

std::vector<Vertex> greedy_order(const Graph& g, Greedy rule) {
  const auto n = static_cast<std::size_t>(g.n());
  auto adj = adjacency_bits(g);
  std::vector<char> gone(n, 0);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
  auto fill_of = [&](std::size_t v) {
    std::size_t missing = 0;
    adj[v].for_each([&](std::size_t a) { missing += deg[v] - 1 - adj[a].count_and(adj[v]); });
    return missing / 2;
  };
  std::vector<std::size_t> fill(n, 0);
  if (rule == Greedy::MinFill)
    for (std::size_t v = 0; v < n; ++v) fill[v] = fill_of(v);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (best == n) {
        best = v;
        continue;
      }
      if (rule == Greedy::MinFill) {
        if (fill[v] < fill[best] || (fill[v] == fill[best] && deg[v] < deg[best])) best = v;
      } else if (deg[v] < deg[best]) {
        best = v;
      }
    }
    const std::size_t v = best;
    order.push_back(static_cast<Vertex>(v));
    gone[v] = 1;
    std::vector<std::size_t> nb;
    adj[v].for_each([&](std::size_t a) { nb.push_back(a); });
    for (std::size_t a : nb) {
      adj[a].reset(v);
      for (std::size_t b : nb)
        if (a != b) adj[a].set(b);
    }
    for (std::size_t a : nb) deg[a] = adj[a].count();
    adj[v] = Bits(n);
    if (rule == Greedy::MinFill) {
      Bits touched(n);
      for (std::size_t a : nb) {
        touched.set(a);
        touched |= adj[a];
      }
      touched.for_each([&](std::size_t w) {
        if (!gone[w]) fill[w] = fill_of(w);
      });
    }
  }
  return order;
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.n());
  if (order.size() != n) throw PreconditionError("elimination order is not a permutation of the vertices");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_vertex(order[i]) || pos[static_cast<std::size_t>(order[i])] != n)
      throw PreconditionError("elimination order is not a permutation of the vertices");
    pos[static_cast<std::size_t>(order[i])] = i;
  }
  TreeDecomposition d;
  if (n == 0) return d;
  auto adj = adjacency_bits(g);
  std::vector<int> parent(n, -1);
  d.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    std::vector<Vertex> later;
    adj[v].for_each([&](std::size_t a) { later.push_back(static_cast<Vertex>(a)); });
    for (Vertex a : later) {
      adj[static_cast<std::size_t>(a)].reset(v);
      for (Vertex b : later)
        if (a != b) adj[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    }
    std::size_t first = n;
    for (Vertex a : later) first = std::min(first, pos[static_cast<std::size_t>(a)]);
    if (first < n) parent[i] = static_cast<int>(first);
    later.push_back(static_cast<Vertex>(v));
    d.bags[i] = VertexSet(std::move(later));
  }
  // Link the roots of the elimination forest into one tree.
  int prev_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      d.tree_edges.emplace_back(static_cast<int>(i), parent[i]);
    } else {
      if (prev_root >= 0) d.tree_edges.emplace_back(prev_root, static_cast<int>(i));
      prev_root = static_cast<int>(i);
    }
  }
  return d;
}

namespace {

// Exact treewidth and optimal order for a graph with at most 32 vertices.
std::pair<int, std::vector<Vertex>> exact_component(const Graph& g, std::size_t budget, int lower) {
  const int n = g.n();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  std::vector<Vertex> best_order = greedy_order(g, Greedy::MinFill);
  int best = decomposition_from_order(g, best_order).width();
  if (best <= lower || n <= 1) return {best, best_order};

  struct State {
    std::uint32_t mask;
    std::int8_t val;
    std::int8_t last;
  };
  std::vector<std::vector<State>> levels;
  levels.push_back({State{0, -1, -1}});
  std::size_t stored = 1;

  auto q_size = [&](std::uint32_t mask, int v) {
    std::uint32_t comp = 1u << v, frontier = comp, reach = adj[static_cast<std::size_t>(v)];
    for (;;) {
      std::uint32_t grow = reach & mask & ~comp;
      if (!grow) break;
      comp |= grow;
      frontier = grow;
      for (std::uint32_t f = frontier; f; f &= f - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    return std::popcount(reach & ~mask & ~(1u << v));
  };

  auto reconstruct = [&](std::size_t level, const State& s) {
    std::vector<Vertex> order;
    State cur = s;
    for (std::size_t t = level; t > 0; --t) {
      order.push_back(cur.last);
      const std::uint32_t prev_mask = cur.mask & ~(1u << cur.last);
      const auto& lv = levels[t - 1];
      auto it = std::lower_bound(lv.begin(), lv.end(), prev_mask,
                                 [](const State& a, std::uint32_t m) { return a.mask < m; });
      cur = *it;
    }
    std::reverse(order.begin(), order.end());
    for (int v = 0; v < n; ++v)
      if (!(s.mask >> v & 1)) order.push_back(v);
    return order;
  };

  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::size_t s = 0; s <= static_cast<std::size_t>(n); ++s) {
    const auto& cur = levels[s];
    const int remaining = n - static_cast<int>(s);
    for (const auto& st : cur) {
      const int finish = std::max<int>(st.val, remaining - 1);
      if (finish < best) {
        best = finish;
        best_order = reconstruct(s, st);
        if (best <= lower) return {best, best_order};
      }
    }
    if (s == static_cast<std::size_t>(n)) break;
    std::unordered_map<std::uint32_t, std::pair<std::int8_t, std::int8_t>> next;
    for (const auto& st : cur) {
      if (st.val >= best) continue;
      for (std::uint32_t free = full & ~st.mask; free; free &= free - 1) {
        const int v = std::countr_zero(free);
        const int nv = std::max<int>(st.val, q_size(st.mask, v));
        if (nv >= best) continue;
        const std::uint32_t m = st.mask | (1u << v);
        auto [it, inserted] = next.try_emplace(m, static_cast<std::int8_t>(nv), static_cast<std::int8_t>(v));
        if (!inserted && nv < it->second.first) it->second = {static_cast<std::int8_t>(nv), static_cast<std::int8_t>(v)};
      }
    }
    stored += next.size();
    if (stored > budget) throw ResourceError("treewidth_exact: state budget exceeded");
    if (next.empty()) break;
    std::vector<State> lv;
    lv.reserve(next.size());
    for (const auto& [m, p] : next) lv.push_back(State{m, p.first, p.second});
    std::sort(lv.begin(), lv.end(), [](const State& a, const State& b) { return a.mask < b.mask; });
    levels.push_back(std::move(lv));
  }
  return {best, best_order};
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, std::size_t state_budget) {
  TreewidthResult res;
  if (g.n() == 0) return res;
  std::vector<Vertex> order;
  res.width = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() > static_cast<std::size_t>(kExactTreewidthMaxVertices))
      throw ResourceError("treewidth_exact: component with " + std::to_string(comp.size()) + " vertices exceeds the " +
                          std::to_string(kExactTreewidthMaxVertices) + "-vertex limit");
    const Subgraph sub = induced_subgraph(g, comp);
    const int lower = std::max(degeneracy(sub.graph), contraction_degeneracy(sub.graph));
    auto [w, local] = exact_component(sub.graph, state_budget, lower);
    res.width = std::max(res.width, w);
    for (Vertex v : local) order.push_back(sub.to_old[static_cast<std::size_t>(v)]);
  }
  res.decomposition = decomposition_from_order(g, order);
  if (res.decomposition.width() != res.width) throw InvariantViolation("treewidth_exact: order width mismatch");
  return res;
}

int degeneracy(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  std::vector<char> gone(n, 0);
  int best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (Vertex w : g.neighbors(static_cast<Vertex>(pick)))
      if (!gone[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  return best;
}

int contraction_degeneracy(const Graph& g, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(g.n());
  if (n == 0) return 0;
  auto adj = adjacency_bits(g);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
  std::vector<char> gone(n, 0);
  Rng rng(seed);
  std::vector<std::uint64_t> tiebreak(n);
  for (std::size_t v = 0; v < n; ++v) tiebreak[v] = seed == 0 ? v : rng.next();
  std::size_t best = 0;
  for (std::size_t left = n; left >= 2; --left) {
    std::size_t v = n;
    for (std::size_t x = 0; x < n; ++x)
      if (!gone[x] && (v == n || deg[x] < deg[v] || (deg[x] == deg[v] && tiebreak[x] < tiebreak[v]))) v = x;
    best = std::max(best, deg[v]);
    gone[v] = 1;
    if (deg[v] == 0) continue;
    std::size_t u = n;
    adj[v].for_each([&](std::size_t a) {
      if (u == n || deg[a] < deg[u] || (deg[a] == deg[u] && tiebreak[a] < tiebreak[u])) u = a;
    });
    // Contract v into u.
    adj[v].for_each([&](std::size_t a) {
      adj[a].reset(v);
      if (a != u) {
        adj[a].set(u);
        adj[u].set(a);
      }
    });
    adj[u].reset(u);
    adj[v] = Bits(n);
    deg[u] = adj[u].count();
    adj[u].for_each([&](std::size_t a) { deg[a] = adj[a].count(); });
  }
  return static_cast<int>(best);
}

namespace {

int greedy_clique_lb(const Graph& g) {
  int best = g.n() > 0 ? 1 : 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> cand(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<Vertex> clique{v};
    for (Vertex c : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.has_edge(x, c); })) clique.push_back(c);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best - 1;
}

}  // namespace

TreewidthBounds treewidth_bounds(const Graph& g) {
  TreewidthBounds b;
  if (g.n() == 0) return b;
  auto fill = decomposition_from_order(g, greedy_order(g, Greedy::MinFill));
  auto mindeg = decomposition_from_order(g, greedy_order(g, Greedy::MinDegree));
  b.upper_witness = fill.width() <= mindeg.width() ? std::move(fill) : std::move(mindeg);
  b.upper = b.upper_witness.width();
  b.lower = std::max({degeneracy(g), greedy_clique_lb(g), contraction_degeneracy(g)});
  for (std::uint64_t seed = 1; seed <= 8 && b.lower < b.upper; ++seed)
    b.lower = std::max(b.lower, contraction_degeneracy(g, seed));
  return b;
}

ContractionBoundReport check_contraction_bound(const Graph& g, const std::vector<VertexSet>& sets) {
  const Contraction c = contract_sets(g, sets);
  ContractionBoundReport r;
  for (const auto& s : sets) r.q = std::max(r.q, static_cast<int>(s.size()));
  const auto orig = treewidth_exact(g);
  const auto contracted = treewidth_exact(c.graph);
  r.tw_original = orig.width;
  r.tw_contracted = contracted.width;
  r.inequality_holds = static_cast<long long>(r.q) * r.tw_contracted >= r.tw_original;
  r.lifted_bound_holds = static_cast<long long>(r.q) * (r.tw_contracted + 1) >= r.tw_original + 1;
  r.lifted.tree_edges = contracted.decomposition.tree_edges;
  for (const auto& bag : contracted.decomposition.bags) {
    std::vector<Vertex> members;
    for (Vertex x : bag) {
      const auto& pre = c.preimage[static_cast<std::size_t>(x)];
      members.insert(members.end(), pre.begin(), pre.end());
    }
    r.lifted.bags.emplace_back(std::move(members));
  }
  const auto v = validate_decomposition(g, r.lifted);
  r.lifted_valid = v.ok();
  r.lifted_width = r.lifted.width();
  return r;
}

namespace {

Graph degree3_exhaustive(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > kExhaustiveDegree3MaxEdges)
    throw ResourceError("degree3_subgraph: exhaustive mode needs at most " +
                        std::to_string(kExhaustiveDegree3MaxEdges) + " edges, got " + std::to_string(edges.size()));
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> chosen(edges.size(), 0);
  int best_tw = -2;
  std::vector<Edge> best;
  auto leaf = [&] {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!chosen[i] && deg[static_cast<std::size_t>(edges[i].first)] < 3 &&
          deg[static_cast<std::size_t>(edges[i].second)] < 3)
        return;  // not inclusion-maximal
    std::vector<Edge> sel;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (chosen[i]) sel.push_back(edges[i]);
    const int tw = treewidth_exact(Graph(g.n(), sel)).width;
    if (tw > best_tw) {
      best_tw = tw;
      best = std::move(sel);
    }
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) return leaf();
    auto [u, v] = edges[i];
    if (deg[static_cast<std::size_t>(u)] < 3 && deg[static_cast<std::size_t>(v)] < 3) {
      chosen[i] = 1;
      ++deg[static_cast<std::size_t>(u)], ++deg[static_cast<std::size_t>(v)];
      self(self, i + 1);
      --deg[static_cast<std::size_t>(u)], --deg[static_cast<std::size_t>(v)];
      chosen[i] = 0;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return Graph(g.n(), best);
}

Graph degree3_heuristic(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  auto snapshot = [&] {
    std::vector<Edge> e;
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w : adj[static_cast<std::size_t>(v)])
        if (v < w) e.emplace_back(v, w);
    return Graph(g.n(), e);
  };
  auto drop = [&](Vertex a, Vertex b) {
    auto& x = adj[static_cast<std::size_t>(a)];
    x.erase(std::find(x.begin(), x.end(), b));
    auto& y = adj[static_cast<std::size_t>(b)];
    y.erase(std::find(y.begin(), y.end(), a));
  };
  for (;;) {
    Vertex v = kAbsent;
    for (Vertex x = 0; x < g.n(); ++x)
      if (adj[static_cast<std::size_t>(x)].size() >= 4 &&
          (v == kAbsent || adj[static_cast<std::size_t>(x)].size() > adj[static_cast<std::size_t>(v)].size()))
        v = x;
    if (v == kAbsent) break;
    Vertex pick = kAbsent;
    int pick_lb = -1;
    std::size_t pick_deg = 0;
    const std::vector<Vertex> nbrs = adj[static_cast<std::size_t>(v)];
    for (Vertex u : nbrs) {
      drop(v, u);
      const int lb = contraction_degeneracy(snapshot());
      adj[static_cast<std::size_t>(v)].push_back(u);
      adj[static_cast<std::size_t>(u)].push_back(v);
      const std::size_t du = adj[static_cast<std::size_t>(u)].size();
      if (lb > pick_lb || (lb == pick_lb && du > pick_deg)) {
        pick = u;
        pick_lb = lb;
        pick_deg = du;
      }
    }
    drop(v, pick);
  }
  return snapshot();
}

}  // namespace

Graph degree3_subgraph(const Graph& g, Degree3Mode mode) {
  if (g.max_degree() <= 3) return g;
  Graph out = mode == Degree3Mode::Exhaustive ? degree3_exhaustive(g) : degree3_heuristic(g);
  if (out.max_degree() > 3) throw InvariantViolation("degree3_subgraph produced a vertex of degree >= 4");
  return out;
}

std::string to_td_format(const TreeDecomposition& d, Vertex n) {
  std::ostringstream out;
  out << "s td " << d.bags.size() << ' ' << (d.width() + 1) << ' ' << n << '\n';
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out << "b " << (i + 1);
    for (Vertex v : d.bags[i]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (auto [a, b] : d.tree_edges) out << (a + 1) << ' ' << (b + 1) << '\n';
  return out.str();
}

std::pair<TreeDecomposition, Vertex> from_td_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long declared_bags = -1, declared_n = -1;
  TreeDecomposition d;
  std::vector<char> seen_bag;
  auto bad = [&](const std::string& why) { return InvalidInput(".td line " + std::to_string(line_no) + ": " + why); };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "s") {
      std::string td;
      long long width_plus_one = 0;
      if (!(ls >> td >> declared_bags >> width_plus_one >> declared_n) || td != "td" || declared_bags < 0 || declared_n < 0)
        throw bad("malformed solution line");
      d.bags.assign(static_cast<std::size_t>(declared_bags), VertexSet{});
      seen_bag.assign(static_cast<std::size_t>(declared_bags), 0);
      continue;
    }
    if (declared_bags < 0) throw bad("content before the 's td' line");
    if (head == "b") {
      long long id = 0;
      if (!(ls >> id) || id < 1 || id > declared_bags) throw bad("bad bag id");
      if (seen_bag[static_cast<std::size_t>(id - 1)]) throw bad("duplicate bag id");
      seen_bag[static_cast<std::size_t>(id - 1)] = 1;
      std::vector<Vertex> members;
      long long v = 0;
      while (ls >> v) {
        if (v < 1 || v > declared_n) throw bad("bag vertex out of range");
        members.push_back(static_cast<Vertex>(v - 1));
      }
      if (!ls.eof()) throw bad("non-numeric bag entry");
      d.bags[static_cast<std::size_t>(id - 1)] = VertexSet(std::move(members));
      continue;
    }
    long long a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || b < 1 || a > declared_bags || b > declared_bags) throw bad("bad tree edge");
    std::string rest;
    if (es >> rest) throw bad("trailing content");
    d.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (declared_bags < 0) throw InvalidInput(".td: missing 's td' line");
  return {std::move(d), static_cast<Vertex>(declared_n)};
}

}  // namespace gim
