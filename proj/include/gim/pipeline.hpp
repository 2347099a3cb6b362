#pragma once

#include <optional>
#include <string>

#include "gim/certificate.hpp"
#include "gim/minor_search.hpp"
#include "gim/sparsify.hpp"

namespace gim {

enum class PipelineStatus { Found, NotFound, BudgetExhausted };

std::string to_string(PipelineStatus s);

struct GridPipelineResult {
  PipelineStatus status = PipelineStatus::NotFound;
  /// Last stage entered: "sparsify", "grid_search", "eliminate" or "certificate".
  std::string stage;
  std::optional<PipelineResult> sparsified;
  std::optional<SearchResult> search;
  std::optional<EliminationResult> elimination;
  std::optional<Certificate> certificate;  ///< (k-2) x (k-2) grid as an induced minor of the input
};

/// Sparsify, find a k x k grid minor in the sparsified graph, contract its
/// corners, remove violating edges and keep the inner (k-2) x (k-2) grid,
/// expressed in the input graph. The certificate is re-validated before it is
/// returned (InvariantViolation on failure). Throws InvalidInput for k < 4.
GridPipelineResult grid_induced_minor_pipeline(const Graph& g, int k, const SearchConfig& cfg = {},
                                               const Degree3Oracle& oracle = default_degree3_oracle());

}  // namespace gim
