#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "headliner/scoring.hpp"

namespace headliner::pareto {

/// a >= b in every objective and a > b in at least one.
bool dominates(const ObjectiveVector &a, const ObjectiveVector &b);

struct Front {
  std::size_t rank = 0;               // 0 is the Pareto front
  std::vector<std::size_t> members;   // ascending input indices
};

/// Fast non-dominated sorting: domination counts and dominated sets from one
/// pass of pairwise comparisons, then fronts peeled by decrementing counts.
/// Equal vectors never dominate each other and so share a front.
/// Throws EmptyInput for an empty list.
std::vector<Front> non_dominated_sort(std::span<const ObjectiveVector> vectors);

/// Crowding distance of each member within its front (same order as
/// `members`). Boundary points on any objective get +infinity.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> vectors,
                                      const std::vector<std::size_t> &members);

}  // namespace headliner::pareto
