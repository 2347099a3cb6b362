#include "gim/pipeline.hpp"

#include "gim/errors.hpp"
#include "gim/generators.hpp"

namespace gim {

std::string to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Found: return "found";
    case PipelineStatus::NotFound: return "not_found";
    case PipelineStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

GridPipelineResult grid_induced_minor_pipeline(const Graph& g, int k, const SearchConfig& cfg,
                                               const Degree3Oracle& oracle) {
  if (k < 4) throw InvalidInput("grid pipeline needs k >= 4, got " + std::to_string(k));
  GridPipelineResult res;
  res.stage = "sparsify";
  res.sparsified = sparsify_pipeline(g, oracle);
  const Graph& sparse = res.sparsified->final_graph();

  res.stage = "grid_search";
  SearchConfig minor_cfg = cfg;
  minor_cfg.kind = ModelKind::Minor;
  res.search = find_model(sparse, gen::grid(k), minor_cfg);
  if (res.search->status != SearchStatus::Found) {
    res.status = res.search->status == SearchStatus::None ? PipelineStatus::NotFound : PipelineStatus::BudgetExhausted;
    return res;
  }

  res.stage = "eliminate";
  const CornerContraction corners = grid_corner_contract(k);
  const BranchModel contracted = contract_pattern(*res.search->model, corners.to_contracted);
  res.elimination = eliminate_violating_edges(contracted);

  res.stage = "certificate";
  const BranchModel inner = compose_models(corners.inner_grid, res.elimination->model);
  Certificate cert;
  cert.model = lift_model(inner, g, res.sparsified->final_subgraph);
  cert.kind = ModelKind::InducedMinor;
  cert.pattern_tag = "grid:" + std::to_string(k - 2);
  std::size_t steps = 0;
  for (const auto& s : res.sparsified->steps) steps += !s.skipped;
  cert.provenance = "sparsify: " + std::to_string(g.n()) + " -> " + std::to_string(sparse.n()) + " vertices, " +
                    std::to_string(steps) + " of " + std::to_string(res.sparsified->classes.size()) +
                    " distance-5 classes used; grid:" + std::to_string(k) + " minor by " +
                    res.search->decided_by + " search; corners contracted; " +
                    std::to_string(res.elimination->initial_violations) + " violating edges removed in " +
                    std::to_string(res.elimination->steps.size()) + " steps; inner grid:" + std::to_string(k - 2) +
                    " lifted to input";
  if (auto v = cert.validate(); !v)
    throw InvariantViolation("grid pipeline produced an invalid certificate: " + v.message);
  res.certificate = std::move(cert);
  res.status = PipelineStatus::Found;
  return res;
}

}  // namespace gim
