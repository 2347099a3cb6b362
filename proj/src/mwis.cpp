#include "gim/mwis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "gim/errors.hpp"
#include "gim/graph_ops.hpp"

namespace gim {

WeightedGraph WeightedGraph::unit(const Graph& g) {
  return WeightedGraph{g, std::vector<std::uint64_t>(static_cast<std::size_t>(g.n()), 1)};
}

void check_weights(const WeightedGraph& w) {
  if (w.weights.size() != static_cast<std::size_t>(w.graph.n()))
    throw InvalidInput("expected " + std::to_string(w.graph.n()) + " weights, got " + std::to_string(w.weights.size()));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) return false;
    for (Vertex u : g.neighbors(v))
      if (s.contains(u)) return false;
  }
  return true;
}

std::uint64_t weight_of(const WeightedGraph& w, const VertexSet& s) {
  std::uint64_t t = 0;
  for (Vertex v : s) t += w.weights[static_cast<std::size_t>(v)];
  return t;
}

namespace {

// Weight plus the set itself; the order is the tie-breaking rule, and it is
// additive over disjoint unions.
struct Score {
  std::uint64_t weight = 0;
  std::vector<std::uint64_t> bits;

  explicit Score(std::size_t n = 0) : bits((n + 63) / 64, 0) {}

  void add(Vertex v, std::uint64_t w) {
    weight += w;
    bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void merge(const Score& o) {
    weight += o.weight;
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] |= o.bits[i];
  }
  bool better_than(const Score& o) const {
    if (weight != o.weight) return weight > o.weight;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const std::uint64_t d = bits[i] ^ o.bits[i];
      if (d) return (bits[i] >> std::countr_zero(d)) & 1;
    }
    return false;
  }
  MwisSolution solution() const {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < bits.size(); ++i)
      for (std::uint64_t x = bits[i]; x; x &= x - 1) vs.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(x)));
    return MwisSolution{VertexSet(std::move(vs)), weight};
  }
};

void checked(const WeightedGraph& w, const MwisSolution& s, const char* who) {
  if (!is_independent(w.graph, s.set) || weight_of(w, s.set) != s.total)
    throw InvariantViolation(std::string(who) + " produced an inconsistent solution");
}

}  // namespace

MwisSolution mwis_bruteforce(const WeightedGraph& w) {
  check_weights(w);
  const Graph& g = w.graph;
  if (g.n() > kBruteForceMaxVertices)
    throw ResourceError("mwis_bruteforce: " + std::to_string(g.n()) + " vertices exceeds the limit of " +
                        std::to_string(kBruteForceMaxVertices));
  Score total(static_cast<std::size_t>(g.n()));
  for (const auto& comp : components(g)) {
    const auto& vs = comp.members();
    const std::size_t k = vs.size();
    std::vector<std::uint32_t> adj(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (g.has_edge(vs[i], vs[j])) adj[i] |= 1u << j;
    std::uint32_t best = 0;
    std::uint64_t best_w = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      bool ok = true;
      std::uint64_t sum = 0;
      for (std::uint32_t r = mask; r; r &= r - 1) {
        const int i = std::countr_zero(r);
        if (adj[static_cast<std::size_t>(i)] & mask) {
          ok = false;
          break;
        }
        sum += w.weights[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])];
      }
      if (!ok) continue;
      const std::uint32_t d = mask ^ best;
      if (sum > best_w || (sum == best_w && ((mask >> std::countr_zero(d)) & 1))) {
        best = mask;
        best_w = sum;
      }
    }
    for (std::uint32_t r = best; r; r &= r - 1) {
      const Vertex v = vs[static_cast<std::size_t>(std::countr_zero(r))];
      total.add(v, w.weights[static_cast<std::size_t>(v)]);
    }
  }
  auto s = total.solution();
  checked(w, s, "mwis_bruteforce");
  return s;
}

MwisSolution mwis_treewidth_dp(const WeightedGraph& w, const TreeDecomposition& d) {
  check_weights(w);
  const Graph& g = w.graph;
  if (auto v = validate_decomposition(g, d); !v)
    throw PreconditionError("mwis_treewidth_dp: invalid decomposition: " + v.message);
  if (g.n() == 0) return {};
  const std::size_t nodes = d.bags.size();
  for (const auto& b : d.bags)
    if (b.size() > 30) throw ResourceError("mwis_treewidth_dp: bag of " + std::to_string(b.size()) + " vertices");

  std::vector<std::vector<int>> tadj(nodes);
  for (auto [a, b] : d.tree_edges) {
    tadj[static_cast<std::size_t>(a)].push_back(b);
    tadj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> parent(nodes, -1), order{0};
  std::vector<char> seen(nodes, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : tadj[static_cast<std::size_t>(order[i])])
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        parent[static_cast<std::size_t>(c)] = order[i];
        order.push_back(c);
      }

  const auto n = static_cast<std::size_t>(g.n());
  // table[t]: independent bag subsets (as masks over bag positions) -> best
  // score of the part of the solution strictly below the bag.
  std::vector<std::unordered_map<std::uint32_t, Score>> table(nodes);
  std::vector<std::vector<std::uint32_t>> bag_adj(nodes);
  for (std::size_t t = 0; t < nodes; ++t) {
    const auto& b = d.bags[t].members();
    bag_adj[t].assign(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (g.has_edge(b[i], b[j])) bag_adj[t][i] |= 1u << j;
  }
  auto bag_score = [&](std::size_t t, std::uint32_t mask, std::uint32_t skip) {
    Score s(n);
    const auto& b = d.bags[t].members();
    for (std::uint32_t r = mask & ~skip; r; r &= r - 1) {
      const Vertex v = b[static_cast<std::size_t>(std::countr_zero(r))];
      s.add(v, w.weights[static_cast<std::size_t>(v)]);
    }
    return s;
  };

  auto independent_masks = [&](std::size_t t) {
    std::vector<std::uint32_t> out;
    const std::size_t k = d.bags[t].size();
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t mask, std::uint32_t blocked) -> void {
      if (i == k) {
        out.push_back(mask);
        return;
      }
      self(self, i + 1, mask, blocked);
      if (!(blocked >> i & 1)) self(self, i + 1, mask | (1u << i), blocked | bag_adj[t][i]);
    };
    rec(rec, 0, 0, 0);
    return out;
  };

  struct ChildTable {
    std::uint32_t visible = 0;  ///< positions of B_t that also lie in the child bag
    std::unordered_map<std::uint32_t, Score> best;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto t = static_cast<std::size_t>(*it);
    const auto& bt = d.bags[t].members();
    // Per child: best f_c(U_c) + score(U_c \ B_t), keyed by U_c ∩ B_t over B_t positions.
    std::vector<ChildTable> children;
    for (int c : tadj[t]) {
      if (c == parent[t]) continue;
      const auto cs = static_cast<std::size_t>(c);
      const auto& bc = d.bags[cs].members();
      std::vector<int> pos_in_t(bc.size(), -1);
      std::uint32_t shared = 0;
      ChildTable ct;
      for (std::size_t i = 0; i < bc.size(); ++i) {
        auto f = std::lower_bound(bt.begin(), bt.end(), bc[i]);
        if (f != bt.end() && *f == bc[i]) {
          pos_in_t[i] = static_cast<int>(f - bt.begin());
          shared |= 1u << i;
          ct.visible |= 1u << pos_in_t[i];
        }
      }
      for (auto& [mask, sc] : table[cs]) {
        std::uint32_t key = 0;
        for (std::uint32_t r = mask & shared; r; r &= r - 1)
          key |= 1u << pos_in_t[static_cast<std::size_t>(std::countr_zero(r))];
        Score total = bag_score(cs, mask, shared);
        total.merge(sc);
        auto [slot, fresh] = ct.best.try_emplace(key, total);
        if (!fresh && total.better_than(slot->second)) slot->second = std::move(total);
      }
      table[cs].clear();
      children.push_back(std::move(ct));
    }
    for (std::uint32_t mask : independent_masks(t)) {
      Score s(n);
      bool ok = true;
      for (const auto& ct : children) {
        auto f = ct.best.find(mask & ct.visible);
        if (f == ct.best.end()) {
          ok = false;
          break;
        }
        s.merge(f->second);
      }
      if (ok) table[t].emplace(mask, std::move(s));
    }
  }
  Score best(n);
  bool any = false;
  for (auto& [mask, sc] : table[0]) {
    Score total = bag_score(0, mask, 0);
    total.merge(sc);
    if (!any || total.better_than(best)) {
      best = std::move(total);
      any = true;
    }
  }
  auto s = best.solution();
  checked(w, s, "mwis_treewidth_dp");
  return s;
}

namespace {

class Brancher {
 public:
  Brancher(const WeightedGraph& w, int threshold) : w_(w), threshold_(threshold) {}

  Score solve(std::vector<char>& alive, int depth) {
    ++stats.tree_nodes;
    stats.max_branch_depth = std::max(stats.max_branch_depth, depth);
    const Graph& g = w_.graph;
    Vertex pick = kAbsent;
    int pick_deg = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int deg = 0;
      for (Vertex u : g.neighbors(v)) deg += alive[static_cast<std::size_t>(u)];
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    if (pick == kAbsent || pick_deg < threshold_) return leaf(alive);
    ++stats.branchings;
    const auto pv = static_cast<std::size_t>(pick);
    alive[pv] = 0;
    Score without = solve(alive, depth + 1);
    std::vector<Vertex> dropped;
    for (Vertex u : g.neighbors(pick))
      if (alive[static_cast<std::size_t>(u)]) {
        alive[static_cast<std::size_t>(u)] = 0;
        dropped.push_back(u);
      }
    Score with = solve(alive, depth + 1);
    with.add(pick, w_.weights[pv]);
    for (Vertex u : dropped) alive[static_cast<std::size_t>(u)] = 1;
    alive[pv] = 1;
    return with.better_than(without) ? with : without;
  }

  BranchingStats stats;

 private:
  Score leaf(const std::vector<char>& alive) {
    ++stats.leaves;
    const Graph& g = w_.graph;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
      if (alive[static_cast<std::size_t>(v)]) keep.push_back(v);
    const Subgraph sub = induced_subgraph(g, VertexSet(keep));
    WeightedGraph local{sub.graph, {}};
    for (Vertex v : sub.to_old) local.weights.push_back(w_.weights[static_cast<std::size_t>(v)]);
    TreeDecomposition d = sub.graph.n() <= 20 ? treewidth_exact(sub.graph).decomposition
                                              : treewidth_bounds(sub.graph).upper_witness;
    ++stats.leaf_widths[d.width()];
    const MwisSolution part = mwis_treewidth_dp(local, d);
    Score s(static_cast<std::size_t>(g.n()));
    for (Vertex v : part.set) {
      const Vertex x = sub.to_old[static_cast<std::size_t>(v)];
      s.add(x, w_.weights[static_cast<std::size_t>(x)]);
    }
    return s;
  }

  const WeightedGraph& w_;
  int threshold_;
};

}  // namespace

BranchingResult mwis_branching(const WeightedGraph& w, int threshold) {
  check_weights(w);
  if (threshold < 1) throw InvalidInput("mwis_branching: threshold must be at least 1");
  Brancher b(w, threshold);
  std::vector<char> alive(static_cast<std::size_t>(w.graph.n()), 1);
  BranchingResult r{b.solve(alive, 0).solution(), {}};
  r.stats = std::move(b.stats);
  checked(w, r.solution, "mwis_branching");
  return r;
}

int default_branching_threshold(Vertex n) {
  if (n < 3) return 2;
  const double lg = std::log2(static_cast<double>(n));
  const double inner = std::log2(static_cast<double>(n) / lg);
  if (inner <= 0) return 2;
  return std::max(2, static_cast<int>(std::ceil(std::pow(inner, 0.2))));
}

}  // namespace gim
