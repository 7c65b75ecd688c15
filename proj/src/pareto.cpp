#include "headliner/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "headliner/error.hpp"

namespace headliner::pareto {

bool dominates(const ObjectiveVector &a, const ObjectiveVector &b) {
  const auto va = a.values();
  const auto vb = b.values();
  bool strictly = false;
  for (std::size_t i = 0; i < ObjectiveVector::kSize; ++i) {
    if (va[i] < vb[i]) return false;
    if (va[i] > vb[i]) strictly = true;
  }
  return strictly;
}

std::vector<Front> non_dominated_sort(std::span<const ObjectiveVector> vectors) {
  const auto n = vectors.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "non_dominated_sort needs at least one vector");

  std::vector<std::size_t> dominated_by_count(n, 0);
  std::vector<std::vector<std::size_t>> dominates_set(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(vectors[p], vectors[q])) {
        dominates_set[p].push_back(q);
        ++dominated_by_count[q];
      } else if (dominates(vectors[q], vectors[p])) {
        dominates_set[q].push_back(p);
        ++dominated_by_count[p];
      }
    }
  }

  std::vector<Front> fronts;
  Front current{0, {}};
  for (std::size_t p = 0; p < n; ++p)
    if (dominated_by_count[p] == 0) current.members.push_back(p);

  while (!current.members.empty()) {
    Front next{current.rank + 1, {}};
    for (auto p : current.members) {
      for (auto q : dominates_set[p]) {
        if (--dominated_by_count[q] == 0) next.members.push_back(q);
      }
    }
    std::sort(next.members.begin(), next.members.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> vectors,
                                      const std::vector<std::size_t> &members) {
  const auto m = members.size();
  std::vector<double> dist(m, 0.0);
  if (m <= 2) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    return dist;
  }
  std::vector<std::size_t> order(m);
  for (std::size_t obj = 0; obj < ObjectiveVector::kSize; ++obj) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto value = [&](std::size_t k) { return vectors[members[k]][obj]; };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return value(a) < value(b); });
    const double lo = value(order.front());
    const double hi = value(order.back());
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    if (hi <= lo) continue;
    for (std::size_t k = 1; k + 1 < m; ++k) dist[order[k]] += (value(order[k + 1]) - value(order[k - 1])) / (hi - lo);
  }
  return dist;
}

}  // namespace headliner::pareto
