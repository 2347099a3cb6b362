#include "gim/models.hpp"

#include <algorithm>

#include "gim/errors.hpp"
#include "gim/generators.hpp"

namespace gim {

std::string to_string(ModelCondition c) {
  switch (c) {
    case ModelCondition::Ok: return "ok";
    case ModelCondition::KeyMismatch: return "key-mismatch";
    case ModelCondition::VertexOutOfRange: return "vertex-out-of-range";
    case ModelCondition::EmptyBranchSet: return "empty-branch-set";
    case ModelCondition::Overlap: return "overlap";
    case ModelCondition::Disconnected: return "disconnected-branch-set";
    case ModelCondition::MissingEdge: return "missing-edge";
    case ModelCondition::InducedViolation: return "induced-violation";
  }
  return "unknown";
}

std::string to_string(ModelKind k) { return k == ModelKind::Minor ? "minor" : "induced_minor"; }

namespace {

ModelVerdict fail(ModelCondition c, std::string msg, std::vector<Vertex> pv = {}, std::vector<Vertex> hv = {}) {
  return ModelVerdict{c, std::move(msg), std::move(pv), std::move(hv)};
}

// Owner of each host vertex, or the verdict explaining why the sets are not a partial partition.
ModelVerdict owners(const BranchModel& m, std::vector<Vertex>& owner) {
  const auto& sets = m.branch_sets;
  if (sets.size() != static_cast<std::size_t>(m.pattern.n()))
    return fail(ModelCondition::KeyMismatch, std::to_string(sets.size()) + " branch sets for a pattern with " +
                                                 std::to_string(m.pattern.n()) + " vertices");
  owner.assign(static_cast<std::size_t>(m.host.n()), kAbsent);
  for (Vertex p = 0; p < static_cast<Vertex>(sets.size()); ++p) {
    const auto& x = sets[static_cast<std::size_t>(p)];
    if (x.empty()) return fail(ModelCondition::EmptyBranchSet, "branch set of " + std::to_string(p) + " is empty", {p});
    for (Vertex h : x) {
      if (!m.host.has_vertex(h))
        return fail(ModelCondition::VertexOutOfRange,
                    "branch set of " + std::to_string(p) + " contains non-host vertex " + std::to_string(h), {p}, {h});
      Vertex& o = owner[static_cast<std::size_t>(h)];
      if (o != kAbsent)
        return fail(ModelCondition::Overlap,
                    "host vertex " + std::to_string(h) + " is in the branch sets of " + std::to_string(o) + " and " +
                        std::to_string(p),
                    {o, p}, {h});
      o = p;
    }
  }
  for (Vertex p = 0; p < static_cast<Vertex>(sets.size()); ++p)
    if (!is_connected(m.host, sets[static_cast<std::size_t>(p)]))
      return fail(ModelCondition::Disconnected, "branch set of " + std::to_string(p) + " is not connected", {p});
  return {};
}

// realised[u][v] for pattern pairs, computed from host edges.
std::vector<std::vector<char>> realised_pairs(const BranchModel& m, const std::vector<Vertex>& owner) {
  const auto np = static_cast<std::size_t>(m.pattern.n());
  std::vector<std::vector<char>> r(np, std::vector<char>(np, 0));
  for (auto [a, b] : m.host.edges()) {
    Vertex oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
    if (oa != kAbsent && ob != kAbsent && oa != ob)
      r[static_cast<std::size_t>(oa)][static_cast<std::size_t>(ob)] = r[static_cast<std::size_t>(ob)][static_cast<std::size_t>(oa)] = 1;
  }
  return r;
}

ModelVerdict check_minor(const BranchModel& m, std::vector<Vertex>& owner) {
  if (auto v = owners(m, owner); !v) return v;
  const auto r = realised_pairs(m, owner);
  for (auto [u, v] : m.pattern.edges())
    if (!r[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
      return fail(ModelCondition::MissingEdge,
                  "no host edge between the branch sets of pattern edge " + std::to_string(u) + "-" + std::to_string(v),
                  {u, v});
  return {};
}

}  // namespace

ModelVerdict validate_minor_model(const BranchModel& m) {
  std::vector<Vertex> owner;
  return check_minor(m, owner);
}

ModelVerdict validate_induced_minor_model(const BranchModel& m) {
  std::vector<Vertex> owner;
  if (auto v = check_minor(m, owner); !v) return v;
  for (auto [a, b] : m.host.edges()) {
    Vertex oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
    if (oa != kAbsent && ob != kAbsent && oa != ob && !m.pattern.has_edge(oa, ob))
      return fail(ModelCondition::InducedViolation,
                  "host edge " + std::to_string(a) + "-" + std::to_string(b) + " joins branch sets of non-adjacent " +
                      std::to_string(oa) + " and " + std::to_string(ob),
                  {oa, ob}, {a, b});
  }
  return {};
}

ModelVerdict validate_model(const BranchModel& m, ModelKind kind) {
  return kind == ModelKind::Minor ? validate_minor_model(m) : validate_induced_minor_model(m);
}

std::vector<Edge> violating_edges(const BranchModel& m) {
  std::vector<Vertex> owner;
  if (auto v = check_minor(m, owner); !v) throw PreconditionError("violating_edges: not a minor model: " + v.message);
  std::vector<Edge> out;
  for (auto [a, b] : m.host.edges()) {
    Vertex oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
    if (oa != kAbsent && ob != kAbsent && oa != ob && !m.pattern.has_edge(oa, ob)) out.emplace_back(a, b);
  }
  return out;
}

BranchModel identity_model(const Graph& g) {
  BranchModel m{g, g, {}};
  for (Vertex v = 0; v < g.n(); ++v) m.branch_sets.push_back(VertexSet{v});
  return m;
}

BranchModel compose_models(const BranchModel& outer, const BranchModel& inner) {
  if (!(outer.host == inner.pattern))
    throw PreconditionError("compose_models: outer host and inner pattern differ");
  if (inner.branch_sets.size() != static_cast<std::size_t>(inner.pattern.n()))
    throw PreconditionError("compose_models: inner model has the wrong number of branch sets");
  BranchModel out{inner.host, outer.pattern, {}};
  for (const auto& x : outer.branch_sets) {
    std::vector<Vertex> members;
    for (Vertex h : x) {
      if (!outer.host.has_vertex(h)) throw PreconditionError("compose_models: outer branch set leaves its host");
      const auto& y = inner.branch_sets[static_cast<std::size_t>(h)];
      members.insert(members.end(), y.begin(), y.end());
    }
    out.branch_sets.emplace_back(std::move(members));
  }
  return out;
}

BranchModel model_from_contraction(const Graph& g, const Contraction& c) {
  if (c.map.size() != static_cast<std::size_t>(g.n()) || c.preimage.size() != static_cast<std::size_t>(c.graph.n()))
    throw PreconditionError("contraction mapping does not match the graph");
  return BranchModel{g, c.graph, c.preimage};
}

BranchModel compose_models(const BranchModel& outer, const Graph& g, const Contraction& c) {
  return compose_models(outer, model_from_contraction(g, c));
}

BranchModel lift_model(const BranchModel& m, const Graph& parent, const Subgraph& sub) {
  if (!(m.host == sub.graph)) throw PreconditionError("lift_model: model host is not the given subgraph");
  BranchModel out{parent, m.pattern, {}};
  for (const auto& x : m.branch_sets) {
    std::vector<Vertex> members;
    for (Vertex h : x) members.push_back(sub.to_old[static_cast<std::size_t>(h)]);
    out.branch_sets.emplace_back(std::move(members));
  }
  return out;
}

BranchModel contract_pattern(const BranchModel& m, const Contraction& pc) {
  if (pc.map.size() != static_cast<std::size_t>(m.pattern.n()))
    throw PreconditionError("contract_pattern: contraction is not of the model's pattern");
  BranchModel out{m.host, pc.graph, {}};
  for (const auto& pre : pc.preimage) {
    std::vector<Vertex> members;
    for (Vertex p : pre) {
      const auto& x = m.branch_sets[static_cast<std::size_t>(p)];
      members.insert(members.end(), x.begin(), x.end());
    }
    out.branch_sets.emplace_back(std::move(members));
  }
  return out;
}

CornerContraction grid_corner_contract(int k) {
  if (k < 4) throw InvalidInput("grid_corner_contract needs k >= 4");
  CornerContraction out;
  out.grid = gen::grid(k);
  auto id = [k](int r, int c) { return static_cast<Vertex>(r * k + c); };
  const std::vector<VertexSet> corners = {
      VertexSet{id(0, 0), id(0, 1)},
      VertexSet{id(0, k - 2), id(0, k - 1)},
      VertexSet{id(k - 1, 0), id(k - 1, 1)},
      VertexSet{id(k - 1, k - 2), id(k - 1, k - 1)},
  };
  out.to_contracted = contract_sets(out.grid, corners);
  out.contracted = out.to_contracted.graph;

  // Interior vertices stay singletons; contracted(interior) is exactly the (k-2)-grid.
  const int s = k - 2;
  out.inner_grid = BranchModel{out.contracted, gen::grid(s), {}};
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      out.inner_grid.branch_sets.push_back(VertexSet{out.to_contracted.map[static_cast<std::size_t>(id(r + 1, c + 1))]});
  if (auto v = validate_induced_minor_model(out.inner_grid); !v)
    throw InvariantViolation("grid_corner_contract: inner grid model invalid: " + v.message);
  return out;
}

}  // namespace gim
