#pragma once

#include <cstdint>
#include <vector>

#include "gim/models.hpp"
#include "gim/sparsify.hpp"

namespace gim::fixtures {

/// A minor model with planted violating edges in a sparsifiable host.
///
/// The pattern is a random graph of minimum degree 3. The host replaces each
/// pattern vertex by a gadget (a single vertex, a triangle, or a subdivided
/// cycle), each pattern edge by a subdivided path, and adds one to three extra
/// structures that create violations: a subdivided path between two
/// non-adjacent pattern vertices, or a triangle hub whose corners are pulled
/// into different branch sets. Host identifiers are shuffled.
struct PlantedInstance {
  BranchModel model;
  std::size_t planted_violations = 0;
};

PlantedInstance planted_violation_instance(std::uint64_t seed);

/// Re-applies a step log to its input model and returns every model after a
/// step, so each one can be validated on its own.
std::vector<BranchModel> replay_elimination(const BranchModel& start, const EliminationResult& r);

}  // namespace gim::fixtures
