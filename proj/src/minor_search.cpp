#include "gim/minor_search.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "gim/errors.hpp"
#include "gim/generators.hpp"
#include "gim/graph_ops.hpp"
#include "gim/rng.hpp"
#include "gim/treewidth.hpp"

namespace gim {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  bool spend(std::uint64_t k = 1) {
    used += k;
    return used <= limit;
  }
};

// Pattern vertices in an order where each vertex after the first of its
// component has as many already placed neighbours as possible.
std::vector<Vertex> placement_order(const Graph& h) {
  const Vertex n = h.n();
  std::vector<Vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
  while (static_cast<Vertex>(order.size()) < n) {
    Vertex best = kAbsent;
    for (Vertex p = 0; p < n; ++p) {
      if (placed[static_cast<std::size_t>(p)]) continue;
      if (best == kAbsent) {
        best = p;
        continue;
      }
      const int a = placed_nbrs[static_cast<std::size_t>(p)], b = placed_nbrs[static_cast<std::size_t>(best)];
      if (a > b || (a == b && h.degree(p) > h.degree(best))) best = p;
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = 1;
    for (Vertex q : h.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(q)];
  }
  return order;
}

BranchModel make_model(const Graph& host, const Graph& pattern, const std::vector<std::vector<Vertex>>& sets) {
  BranchModel m{host, pattern, {}};
  for (const auto& s : sets) m.branch_sets.emplace_back(s);
  return m;
}

// Singleton models: (induced) subgraph isomorphism by backtracking.
class SingletonSearch {
 public:
  SingletonSearch(const Graph& g, const Graph& h, ModelKind kind, Budget& budget)
      : g_(g), h_(h), induced_(kind == ModelKind::InducedMinor), budget_(budget), order_(placement_order(h)),
        image_(static_cast<std::size_t>(h.n()), kAbsent), used_(static_cast<std::size_t>(g.n()), 0) {}

  std::optional<BranchModel> run() {
    if (!place(0)) return std::nullopt;
    std::vector<std::vector<Vertex>> sets;
    for (Vertex x : image_) sets.push_back({x});
    return make_model(g_, h_, sets);
  }

 private:
  bool fits(Vertex p, Vertex x) const {
    if (used_[static_cast<std::size_t>(x)] || g_.degree(x) < h_.degree(p)) return false;
    for (Vertex q = 0; q < h_.n(); ++q) {
      const Vertex y = image_[static_cast<std::size_t>(q)];
      if (y == kAbsent) continue;
      const bool he = h_.has_edge(p, q), ge = g_.has_edge(x, y);
      if (he && !ge) return false;
      if (induced_ && !he && ge) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const Vertex p = order_[idx];
    Vertex anchor = kAbsent;
    for (Vertex q : h_.neighbors(p))
      if (image_[static_cast<std::size_t>(q)] != kAbsent) {
        anchor = image_[static_cast<std::size_t>(q)];
        break;
      }
    auto attempt = [&](Vertex x) {
      if (!budget_.spend()) return false;
      if (!fits(p, x)) return false;
      image_[static_cast<std::size_t>(p)] = x;
      used_[static_cast<std::size_t>(x)] = 1;
      if (place(idx + 1)) return true;
      image_[static_cast<std::size_t>(p)] = kAbsent;
      used_[static_cast<std::size_t>(x)] = 0;
      return false;
    };
    if (anchor != kAbsent) {
      for (Vertex x : g_.neighbors(anchor)) {
        if (attempt(x)) return true;
        if (budget_.used > budget_.limit) return false;
      }
    } else {
      for (Vertex x = 0; x < g_.n(); ++x) {
        if (attempt(x)) return true;
        if (budget_.used > budget_.limit) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  Budget& budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

// Complete search. Pattern vertices are placed in placement_order; each gets
// a connected set of free host vertices. A vertex with a placed neighbour q
// only tries sets meeting the free neighbourhood of X_q; the first vertex of
// a pattern component tries every set, starting near the host's centre.
// Sets are tried by increasing size, and each set is produced once, from its
// lowest-ranked anchor.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Graph& g, const Graph& h, const SearchConfig& cfg, Budget& budget)
      : g_(g), h_(h), induced_(cfg.kind == ModelKind::InducedMinor), cap_(cfg.max_branch_set_size),
        budget_(budget), order_(placement_order(h)), sets_(static_cast<std::size_t>(h.n())),
        owner_(static_cast<std::size_t>(g.n()), kAbsent), central_(central_order(g, cfg.seed)) {}

  std::optional<BranchModel> run() {
    if (place(0)) return make_model(g_, h_, sets_);
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  bool cap_bound() const { return cap_bound_; }

 private:
  // By eccentricity; seed 0 breaks ties by identifier, other seeds pseudo-randomly.
  static std::vector<Vertex> central_order(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::tuple<int, std::uint64_t, Vertex>> key;
    for (Vertex v = 0; v < g.n(); ++v) {
      const auto d = bfs_distances(g, v);
      key.emplace_back(*std::max_element(d.begin(), d.end()), seed == 0 ? 0 : rng.next(), v);
    }
    std::sort(key.begin(), key.end());
    std::vector<Vertex> out;
    for (const auto& k : key) out.push_back(std::get<2>(k));
    return out;
  }

  bool is_free(Vertex x) const { return owner_[static_cast<std::size_t>(x)] == kAbsent; }

  bool compatible(Vertex p, const std::vector<Vertex>& xs) const {
    for (Vertex q = 0; q < h_.n(); ++q) {
      if (q == p || sets_[static_cast<std::size_t>(q)].empty()) continue;
      bool touch = false;
      for (Vertex x : xs) {
        for (Vertex y : g_.neighbors(x))
          if (owner_[static_cast<std::size_t>(y)] == q) {
            touch = true;
            break;
          }
        if (touch) break;
      }
      const bool want = h_.has_edge(p, q);
      if (want && !touch) return false;
      if (induced_ && !want && touch) return false;
    }
    return true;
  }

  std::size_t free_boundary(const std::vector<Vertex>& xs, std::vector<char>& seen) const {
    std::size_t count = 0;
    std::vector<Vertex> touched;
    for (Vertex x : xs)
      for (Vertex y : g_.neighbors(x))
        if (is_free(y) && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          touched.push_back(y);
          ++count;
        }
    for (Vertex y : touched) seen[static_cast<std::size_t>(y)] = 0;
    return count;
  }

  // Each unplaced pattern neighbour of a placed vertex r needs its own free
  // host vertex next to X_r.
  bool frontier_ok() {
    std::vector<char>& seen = scratch_;
    for (Vertex q = 0; q < h_.n(); ++q) {
      const auto& xs = sets_[static_cast<std::size_t>(q)];
      if (xs.empty()) continue;
      std::size_t pending = 0;
      for (Vertex r : h_.neighbors(q)) pending += sets_[static_cast<std::size_t>(r)].empty();
      if (pending && free_boundary(xs, seen) < pending) return false;
    }
    return true;
  }

  bool try_set(std::size_t idx, Vertex p, std::vector<Vertex> xs) {
    if (!budget_.spend()) {
      exhausted_ = true;
      return false;
    }
    std::sort(xs.begin(), xs.end());
    if (!compatible(p, xs)) return false;
    for (Vertex x : xs) owner_[static_cast<std::size_t>(x)] = p;
    sets_[static_cast<std::size_t>(p)] = xs;
    if (frontier_ok() && place(idx + 1)) return true;
    for (Vertex x : xs) owner_[static_cast<std::size_t>(x)] = kAbsent;
    sets_[static_cast<std::size_t>(p)].clear();
    return false;
  }

  bool allowed(Vertex u, int anchor_rank, const std::vector<int>& rank) const {
    if (!is_free(u)) return false;
    const int r = rank[static_cast<std::size_t>(u)];
    return r < 0 || r > anchor_rank;
  }

  // Connected sets of exactly `size` allowed vertices containing the anchor,
  // each once (extension by exclusive neighbourhoods).
  bool extend(std::size_t idx, Vertex p, std::size_t size, int anchor_rank, const std::vector<int>& rank,
              std::vector<Vertex>& sub, std::vector<Vertex> ext, std::vector<char>& mark) {
    if (sub.size() == size) return try_set(idx, p, sub);
    while (!ext.empty()) {
      if (exhausted_) return false;
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next(ext);
      std::vector<Vertex> marked;
      for (Vertex u : g_.neighbors(w))
        if (!mark[static_cast<std::size_t>(u)] && allowed(u, anchor_rank, rank)) {
          next.push_back(u);
          marked.push_back(u);
        }
      for (Vertex u : marked) mark[static_cast<std::size_t>(u)] = 1;
      sub.push_back(w);
      const bool done = extend(idx, p, size, anchor_rank, rank, sub, std::move(next), mark);
      sub.pop_back();
      for (Vertex u : marked) mark[static_cast<std::size_t>(u)] = 0;
      if (done) return true;
    }
    return false;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const Vertex p = order_[idx];
    std::size_t free = 0;
    for (Vertex x = 0; x < g_.n(); ++x) free += is_free(x);
    const std::size_t later = order_.size() - idx - 1;
    if (free < later + 1) return false;
    const std::size_t room = free - later;
    if (cap_ < room) cap_bound_ = true;
    const std::size_t max_size = std::min(cap_, room);

    // Anchors: free neighbours of the placed neighbour with the fewest of
    // them, or every free vertex when no neighbour is placed yet.
    std::vector<Vertex> anchors;
    bool have_neighbour = false;
    for (Vertex q : h_.neighbors(p)) {
      const auto& xq = sets_[static_cast<std::size_t>(q)];
      if (xq.empty()) continue;
      std::vector<Vertex> cand;
      for (Vertex x : xq)
        for (Vertex y : g_.neighbors(x))
          if (is_free(y)) cand.push_back(y);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      if (!have_neighbour || cand.size() < anchors.size()) anchors = std::move(cand);
      have_neighbour = true;
    }
    if (!have_neighbour)
      for (Vertex x : central_)
        if (is_free(x)) anchors.push_back(x);
    if (anchors.empty()) return false;

    std::vector<int> rank(static_cast<std::size_t>(g_.n()), -1);
    for (std::size_t i = 0; i < anchors.size(); ++i) rank[static_cast<std::size_t>(anchors[i])] = static_cast<int>(i);
    std::vector<char> mark(static_cast<std::size_t>(g_.n()), 0);
    for (std::size_t size = 1; size <= max_size; ++size) {
      for (std::size_t i = 0; i < anchors.size(); ++i) {
        const Vertex a = anchors[i];
        const int r = static_cast<int>(i);
        std::vector<Vertex> sub{a};
        std::vector<Vertex> ext;
        mark[static_cast<std::size_t>(a)] = 1;
        for (Vertex u : g_.neighbors(a))
          if (allowed(u, r, rank)) {
            ext.push_back(u);
            mark[static_cast<std::size_t>(u)] = 1;
          }
        const bool done = extend(idx, p, size, r, rank, sub, ext, mark);
        mark[static_cast<std::size_t>(a)] = 0;
        for (Vertex u : ext) mark[static_cast<std::size_t>(u)] = 0;
        if (done) return true;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  std::size_t cap_;
  Budget& budget_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<Vertex> owner_;
  std::vector<Vertex> central_;
  std::vector<char> scratch_ = std::vector<char>(static_cast<std::size_t>(g_.n()), 0);
  bool exhausted_ = false;
  bool cap_bound_ = false;
};

int pattern_treewidth_lower(const Graph& h) {
  if (h.n() <= 16) {
    try {
      return treewidth_exact(h).width;
    } catch (const ResourceError&) {
    }
  }
  return treewidth_bounds(h).lower;
}

}  // namespace

SearchResult find_model(const Graph& host, const Graph& pattern, const SearchConfig& cfg) {
  SearchResult res;
  auto found = [&](BranchModel m, const char* stage) {
    if (!validate_model(m, cfg.kind)) throw InvariantViolation(std::string("find_model: ") + stage + " produced an invalid model");
    res.status = SearchStatus::Found;
    res.model = std::move(m);
    res.decided_by = stage;
    return res;
  };
  auto none = [&](const char* stage) {
    res.status = SearchStatus::None;
    res.decided_by = stage;
    return res;
  };

  if (pattern.n() == 0) return found(BranchModel{host, pattern, {}}, "trivial");
  if (pattern.n() > host.n() || pattern.m() > host.m()) return none("bounds");
  if (cfg.max_branch_set_size == 0) {
    res.decided_by = "bounds";
    return res;
  }
  if (pattern.m() > 0 && treewidth_bounds(host).upper < pattern_treewidth_lower(pattern)) return none("bounds");

  Budget budget{0, cfg.node_budget / 4};
  if (auto m = SingletonSearch(host, pattern, cfg.kind, budget).run()) {
    res.nodes = budget.used;
    return found(std::move(*m), "singleton");
  }
  budget.used = std::min(budget.used, budget.limit);
  budget.limit = cfg.node_budget;
  ExhaustiveSearch search(host, pattern, cfg, budget);
  auto m = search.run();
  res.nodes = std::min(budget.used, budget.limit);
  if (m) return found(std::move(*m), "exhaustive");
  res.decided_by = "exhaustive";
  if (search.exhausted() || search.cap_bound()) return res;
  res.status = SearchStatus::None;
  return res;
}

GridSearchResult find_largest_grid(const Graph& host, const SearchConfig& cfg) {
  GridSearchResult res;
  if (host.n() == 0) return res;
  int k = static_cast<int>(std::sqrt(static_cast<double>(host.n())));
  while ((k + 1) * (k + 1) <= host.n()) ++k;
  while (k * k > host.n()) --k;
  k = std::min(k, std::max(1, treewidth_bounds(host).upper));
  for (; k >= 2; --k) {
    const auto r = find_model(host, gen::grid(k), cfg);
    res.attempts.push_back(GridAttempt{k, r.status, r.nodes});
    if (r.status == SearchStatus::Found) {
      res.k = k;
      res.model = *r.model;
      return res;
    }
  }
  res.k = 1;
  res.model = BranchModel{host, gen::path(1), {VertexSet{0}}};
  res.attempts.push_back(GridAttempt{1, SearchStatus::Found, 1});
  return res;
}

}  // namespace gim
