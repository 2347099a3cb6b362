#include "gim/sparsify.hpp"

#include <algorithm>

#include "gim/errors.hpp"
#include "gim/treewidth.hpp"

namespace gim {

std::string to_string(SparsType t) {
  switch (t) {
    case SparsType::Type1: return "type1";
    case SparsType::Type2: return "type2";
    case SparsType::Type3: return "type3";
    case SparsType::NotSparsifiable: return "not_sparsifiable";
  }
  return "unknown";
}

SparsType classify_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidInput("classify_vertex: no vertex " + std::to_string(v));
  if (g.degree(v) <= 2) return SparsType::Type1;
  if (g.degree(v) > 3) return SparsType::NotSparsifiable;
  const auto nb = g.neighbors(v);
  int low = 0;
  for (Vertex u : nb) low += g.degree(u) <= 2;
  if (low == 3) return SparsType::Type2;
  for (int i = 0; i < 3; ++i) {
    if (g.degree(nb[static_cast<std::size_t>(i)]) > 2) continue;
    const Vertex x = nb[static_cast<std::size_t>((i + 1) % 3)];
    const Vertex y = nb[static_cast<std::size_t>((i + 2) % 3)];
    if (g.has_edge(x, y)) return SparsType::Type3;
  }
  return SparsType::NotSparsifiable;
}

SparsifiableVerdict is_sparsifiable(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (!is_sparsifiable_vertex(g, v)) return SparsifiableVerdict{false, v};
  return {};
}

std::string to_string(EliminationRule r) {
  switch (r) {
    case EliminationRule::ShrinkDegree2: return "shrink_degree2";
    case EliminationRule::ShrinkTriangle: return "shrink_triangle";
    case EliminationRule::ShrinkAcross: return "shrink_across";
    case EliminationRule::MoveToThird: return "move_to_third";
  }
  return "unknown";
}

EliminationResult eliminate_violating_edges(const BranchModel& m) {
  if (auto s = is_sparsifiable(m.host); !s)
    throw PreconditionError("eliminate_violating_edges: host vertex " + std::to_string(s.offender) +
                            " is not sparsifiable");
  for (Vertex p = 0; p < m.pattern.n(); ++p)
    if (m.pattern.degree(p) < 3)
      throw PreconditionError("eliminate_violating_edges: pattern vertex " + std::to_string(p) + " has degree " +
                              std::to_string(m.pattern.degree(p)) + " < 3");
  if (auto v = validate_minor_model(m); !v)
    throw PreconditionError("eliminate_violating_edges: not a minor model: " + v.message);

  const Graph& g = m.host;
  EliminationResult res{m, 0, {}};
  std::vector<Vertex> owner(static_cast<std::size_t>(g.n()), kAbsent);
  auto owner_of = [&](Vertex x) { return owner[static_cast<std::size_t>(x)]; };
  for (Vertex p = 0; p < m.pattern.n(); ++p)
    for (Vertex x : m.branch_sets[static_cast<std::size_t>(p)]) owner[static_cast<std::size_t>(x)] = p;

  auto violations = violating_edges(res.model);
  res.initial_violations = violations.size();
  while (!violations.empty()) {
    auto [a, b] = violations.front();
    const Vertex u = owner_of(a), v = owner_of(b);
    EliminationStep step{{a, b}, u, v, EliminationRule::ShrinkDegree2, {}, kAbsent, violations.size(), 0};
    auto& sets = res.model.branch_sets;
    auto shrink = [&](Vertex x, Vertex p) {
      sets[static_cast<std::size_t>(p)] = sets[static_cast<std::size_t>(p)].without(x);
      owner[static_cast<std::size_t>(x)] = kAbsent;
      step.removed.push_back(x);
    };

    if (g.degree(a) <= 2 || g.degree(b) <= 2) {
      const bool take_a = g.degree(a) <= 2 && (g.degree(b) > 2 || u < v);
      if (take_a) shrink(a, u);
      else shrink(b, v);
    } else {
      Vertex c = kAbsent;
      for (Vertex x : g.neighbors(a))
        if (g.has_edge(b, x)) {
          c = x;
          break;
        }
      if (c == kAbsent)
        throw InvariantViolation("eliminate_violating_edges: degree-3 endpoints " + std::to_string(a) + ", " +
                                 std::to_string(b) + " share no triangle");
      const Vertex w = owner_of(c);
      if (w == v || w == kAbsent) {
        step.rule = EliminationRule::ShrinkTriangle;
        shrink(a, u);
      } else if (w == u) {
        step.rule = EliminationRule::ShrinkTriangle;
        shrink(b, v);
      } else if (!m.pattern.has_edge(w, u)) {
        step.rule = EliminationRule::ShrinkAcross;
        shrink(a, u);
      } else if (!m.pattern.has_edge(w, v)) {
        step.rule = EliminationRule::ShrinkAcross;
        shrink(b, v);
      } else {
        step.rule = EliminationRule::MoveToThird;
        shrink(a, u);
        shrink(b, v);
        sets[static_cast<std::size_t>(w)] = sets[static_cast<std::size_t>(w)].with(a).with(b);
        owner[static_cast<std::size_t>(a)] = owner[static_cast<std::size_t>(b)] = w;
        step.receiver = w;
      }
    }

    if (auto check = validate_minor_model(res.model); !check)
      throw InvariantViolation("eliminate_violating_edges: step on edge " + std::to_string(a) + "-" +
                               std::to_string(b) + " broke the model: " + check.message);
    auto next = violating_edges(res.model);
    if (next.size() >= violations.size())
      throw InvariantViolation("eliminate_violating_edges: step on edge " + std::to_string(a) + "-" +
                               std::to_string(b) + " did not reduce the violating edges");
    step.violations_after = next.size();
    res.steps.push_back(std::move(step));
    violations = std::move(next);
  }
  return res;
}

std::vector<VertexSet> partition_distance5(const Graph& g) {
  std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto dist = bfs_distances(g, v, 4);
    std::vector<char> used(classes.size() + 1, 0);
    for (Vertex w = 0; w < v; ++w)
      if (dist[static_cast<std::size_t>(w)] >= 0) used[static_cast<std::size_t>(cls[static_cast<std::size_t>(w)])] = 1;
    std::size_t c = 0;
    while (used[c]) ++c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
    cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::vector<VertexSet> out;
  for (auto& c : classes) out.emplace_back(std::move(c));
  return out;
}

bool is_distance5_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    const auto dist = bfs_distances(g, v, 4);
    for (Vertex w : s)
      if (w != v && dist[static_cast<std::size_t>(w)] >= 0) return false;
  }
  return true;
}

Degree3Oracle default_degree3_oracle() {
  return [](const Graph& h) { return degree3_subgraph(h, Degree3Mode::Heuristic); };
}

std::string to_string(BallOutcome o) {
  switch (o) {
    case BallOutcome::DegreeAtMost2: return "degree_at_most_2";
    case BallOutcome::Type2: return "type2";
    case BallOutcome::Type3: return "type3";
    case BallOutcome::CenterRemoved: return "center_removed";
  }
  return "unknown";
}

namespace {

Graph checked_oracle_output(const Graph& h, const Degree3Oracle& oracle, bool& padded) {
  Graph out = oracle(h);
  padded = false;
  if (out.n() > h.n()) throw PreconditionError("degree-3 oracle returned more vertices than its input");
  if (out.n() < h.n()) {
    out = Graph(h.n(), out.edges());
    padded = true;
  }
  if (out.max_degree() > 3)
    throw PreconditionError("degree-3 oracle returned a vertex of degree " + std::to_string(out.max_degree()));
  for (auto [x, y] : out.edges())
    if (!h.has_edge(x, y))
      throw PreconditionError("degree-3 oracle returned edge " + std::to_string(x) + "-" + std::to_string(y) +
                              " missing from its input");
  return out;
}

}  // namespace

SparsifyTrace sparsify_step(const Graph& g, const VertexSet& centers, const Degree3Oracle& oracle) {
  for (Vertex v : centers)
    if (!g.has_vertex(v)) throw InvalidInput("sparsify_step: no vertex " + std::to_string(v));
  if (!is_distance5_independent(g, centers))
    throw PreconditionError("sparsify_step: centers are not distance-5 independent");

  SparsifyTrace tr;
  tr.input = g;
  tr.centers = centers;
  std::vector<VertexSet> balls;
  for (Vertex v : centers) balls.push_back(ball(g, v, 2));
  tr.contraction = contract_sets(g, balls);
  tr.contracted = tr.contraction.graph;
  tr.degree3 = checked_oracle_output(tr.contracted, oracle, tr.degree3_padded);

  const auto& map = tr.contraction.map;
  auto node_of = [&](Vertex x) { return map[static_cast<std::size_t>(x)]; };
  // contracted node -> index into centers, or -1 for uncontracted vertices
  std::vector<int> center_index(static_cast<std::size_t>(tr.contracted.n()), -1);
  for (std::size_t i = 0; i < balls.size(); ++i) center_index[static_cast<std::size_t>(node_of(centers.members()[i]))] = static_cast<int>(i);

  std::vector<std::vector<Vertex>> terminals(balls.size());
  auto in_ball = [&](std::size_t i, Vertex x) { return node_of(x) == node_of(centers.members()[i]); };
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const Vertex xv = node_of(centers.members()[i]);
    for (Vertex y : tr.degree3.neighbors(xv)) {
      const int j = center_index[static_cast<std::size_t>(y)];
      Vertex t = kAbsent;
      if (j < 0) {
        const Vertex q = tr.contraction.preimage[static_cast<std::size_t>(y)].front();
        for (Vertex x : balls[i])
          if (g.has_edge(x, q)) {
            t = x;
            break;
          }
      } else {
        // Both balls must agree on the realizing edge: the lower center picks
        // its endpoint first, the other side takes that endpoint's smallest neighbour.
        const auto lo = std::min(i, static_cast<std::size_t>(j)), hi = std::max(i, static_cast<std::size_t>(j));
        Vertex t_lo = kAbsent, t_hi = kAbsent;
        for (Vertex x : balls[lo]) {
          for (Vertex z : g.neighbors(x))
            if (in_ball(hi, z) && (t_hi == kAbsent || z < t_hi)) t_hi = z;
          if (t_hi != kAbsent) {
            t_lo = x;
            break;
          }
        }
        t = i == lo ? t_lo : t_hi;
      }
      if (t == kAbsent) throw InvariantViolation("sparsify_step: contracted edge with no realizing host edge");
      terminals[i].push_back(t);
    }
  }

  std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
  for (const auto& b : balls)
    for (Vertex x : b) keep[static_cast<std::size_t>(x)] = 0;

  for (std::size_t i = 0; i < balls.size(); ++i) {
    const Vertex v = centers.members()[i];
    BallRecord rec{v, balls[i], VertexSet(terminals[i]), {}, BallOutcome::DegreeAtMost2};
    std::vector<Vertex> kept{v};
    std::vector<Vertex> middles;
    const auto dv = bfs_distances(g, v, 2);
    for (Vertex t : rec.terminals) {
      if (dv[static_cast<std::size_t>(t)] != 2)
        throw InvariantViolation("sparsify_step: terminal " + std::to_string(t) + " not at distance 2");
      Vertex mid = kAbsent;
      for (Vertex u : g.neighbors(t))
        if (g.has_edge(u, v)) {
          mid = u;
          break;
        }
      kept.push_back(t);
      middles.push_back(mid);
    }
    VertexSet mids(middles);
    auto has_private = [&](Vertex u, const VertexSet& ns) {
      for (Vertex t : rec.terminals) {
        if (!g.has_edge(u, t)) continue;
        bool alone = true;
        for (Vertex o : ns)
          if (o != u && g.has_edge(o, t)) alone = false;
        if (alone) return true;
      }
      return false;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex u : mids)
        if (!has_private(u, mids)) {
          mids = mids.without(u);
          changed = true;
          break;
        }
    }
    kept.insert(kept.end(), mids.begin(), mids.end());
    if (mids.size() == 3) {
      int inner = 0;
      for (Vertex a : mids)
        for (Vertex b : mids) inner += a < b && g.has_edge(a, b);
      if (is_connected(g, mids)) {
        rec.outcome = BallOutcome::CenterRemoved;
        kept.erase(kept.begin());
      } else {
        rec.outcome = inner == 0 ? BallOutcome::Type2 : BallOutcome::Type3;
      }
    }
    for (Vertex x : kept) keep[static_cast<std::size_t>(x)] = 1;
    rec.surviving = VertexSet(std::move(kept));
    tr.balls.push_back(std::move(rec));
  }

  std::vector<Vertex> s;
  for (Vertex x = 0; x < g.n(); ++x)
    if (keep[static_cast<std::size_t>(x)]) s.push_back(x);
  tr.kept = VertexSet(std::move(s));
  tr.result = induced_subgraph(g, tr.kept);

  tr.preserved.host = tr.result.graph;
  tr.preserved.pattern = tr.degree3;
  tr.preserved.branch_sets.resize(static_cast<std::size_t>(tr.degree3.n()));
  for (Vertex y = 0; y < tr.contracted.n(); ++y) {
    const int j = center_index[static_cast<std::size_t>(y)];
    const VertexSet& src = j < 0 ? tr.contraction.preimage[static_cast<std::size_t>(y)]
                                 : tr.balls[static_cast<std::size_t>(j)].surviving;
    std::vector<Vertex> mapped;
    for (Vertex x : src) mapped.push_back(tr.result.to_new[static_cast<std::size_t>(x)]);
    tr.preserved.branch_sets[static_cast<std::size_t>(y)] = VertexSet(std::move(mapped));
  }
  if (auto v = validate_minor_model(tr.preserved); !v)
    throw InvariantViolation("sparsify_step: preserved degree-3 model fails: " + v.message);
  for (Vertex v : centers) {
    const Vertex nv = tr.result.to_new[static_cast<std::size_t>(v)];
    if (nv != kAbsent && !is_sparsifiable_vertex(tr.result.graph, nv))
      throw InvariantViolation("sparsify_step: center " + std::to_string(v) + " is not sparsifiable afterwards");
  }
  return tr;
}

PipelineResult sparsify_pipeline(const Graph& g, const Degree3Oracle& oracle) {
  PipelineResult res;
  res.classes = partition_distance5(g);
  Graph cur = g;
  std::vector<Vertex> to_orig(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) to_orig[static_cast<std::size_t>(v)] = v;

  for (std::size_t c = 0; c < res.classes.size(); ++c) {
    PipelineStep step;
    step.class_index = c;
    step.class_members = res.classes[c];
    step.n_before = cur.n();
    std::vector<Vertex> to_cur(static_cast<std::size_t>(g.n()), kAbsent);
    for (std::size_t i = 0; i < to_orig.size(); ++i) to_cur[static_cast<std::size_t>(to_orig[i])] = static_cast<Vertex>(i);
    std::vector<Vertex> centers;
    for (Vertex x : res.classes[c]) {
      const Vertex y = to_cur[static_cast<std::size_t>(x)];
      if (y != kAbsent && !is_sparsifiable_vertex(cur, y)) centers.push_back(y);
    }
    step.centers = VertexSet(std::move(centers));
    if (step.centers.empty()) {
      step.skipped = true;
      step.n_after = cur.n();
      res.steps.push_back(std::move(step));
      continue;
    }
    SparsifyTrace tr = sparsify_step(cur, step.centers, oracle);
    const Graph& next = tr.result.graph;
    for (Vertex y = 0; y < cur.n(); ++y) {
      const Vertex z = tr.result.to_new[static_cast<std::size_t>(y)];
      if (z != kAbsent && is_sparsifiable_vertex(cur, y) && !is_sparsifiable_vertex(next, z))
        throw InvariantViolation("sparsify_pipeline: vertex " + std::to_string(to_orig[static_cast<std::size_t>(y)]) +
                                 " lost sparsifiability");
    }
    std::vector<Vertex> next_orig;
    for (Vertex y : tr.result.to_old) next_orig.push_back(to_orig[static_cast<std::size_t>(y)]);
    to_orig = std::move(next_orig);
    cur = next;
    step.n_after = cur.n();
    step.trace = std::move(tr);
    res.steps.push_back(std::move(step));
  }
  if (auto s = is_sparsifiable(cur); !s)
    throw InvariantViolation("sparsify_pipeline: final graph has non-sparsifiable vertex " +
                             std::to_string(to_orig[static_cast<std::size_t>(s.offender)]));
  res.final_subgraph = induced_subgraph(g, VertexSet(to_orig));
  return res;
}

}  // namespace gim
