#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gim/models.hpp"

namespace gim {

struct SearchConfig {
  ModelKind kind = ModelKind::Minor;
  std::size_t max_branch_set_size = std::numeric_limits<std::size_t>::max();
  std::uint64_t node_budget = 2'000'000;
  std::uint64_t seed = 0;  ///< reorders equally central start vertices; 0 keeps identifier order
};

enum class SearchStatus { Found, None, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<BranchModel> model;  ///< set iff Found; always validated
  std::uint64_t nodes = 0;
  /// Which stage decided: "trivial", "bounds", "singleton" or "exhaustive".
  std::string decided_by;
};

/// Searches for a model of `pattern` in `host` of the configured kind.
///
/// Stages: cheap necessary conditions (vertex and edge counts, treewidth),
/// singleton models by (induced) subgraph isomorphism using a quarter of the
/// budget, then a complete backtracking search over connected branch sets.
/// None is reported only when a complete stage proved absence within the
/// budget; with a binding size cap the answer is BudgetExhausted instead.
SearchResult find_model(const Graph& host, const Graph& pattern, const SearchConfig& cfg = {});

struct GridAttempt {
  int k = 0;
  SearchStatus status = SearchStatus::None;
  std::uint64_t nodes = 0;
};

struct GridSearchResult {
  int k = 0;  ///< 0 only for an empty host
  BranchModel model;
  std::vector<GridAttempt> attempts;
};

/// Tries k x k grids for decreasing k, starting from the largest side the
/// vertex count and treewidth upper bound allow, and returns the first found.
/// Every host with a vertex has k >= 1.
GridSearchResult find_largest_grid(const Graph& host, const SearchConfig& cfg = {});

}  // namespace gim
