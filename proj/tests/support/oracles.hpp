#pragma once

// Slow, obviously-correct reimplementations used to check the real code.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::array<double, 4>;

bool dominates(const Vec &a, const Vec &b);

/// Front of each input index by repeated peeling: a point is in the next
/// front iff no remaining point dominates it. O(N^3).
std::vector<std::size_t> front_ranks(const std::vector<Vec> &v);

/// Fronts as sorted index lists, rank order.
std::vector<std::vector<std::size_t>> fronts(const std::vector<Vec> &v);

struct Cooccurrence {
  std::map<std::pair<std::string, std::string>, double> count;  // key ordered (a <= b)
  std::map<std::string, double> total;
  std::map<std::string, long> freq;
  double grand = 0.0;

  double get(const std::string &a, const std::string &b) const;
  double ppmi(const std::string &a, const std::string &b) const;
  /// Neighbours with positive PPMI, excluding w, by score desc then word asc.
  std::vector<std::pair<std::string, double>> top(const std::string &w, std::size_t k) const;
};

/// Direct window scan over token lists (already lowercased).
Cooccurrence recount(const std::vector<std::vector<std::string>> &sentences, int window, int min_count);

}  // namespace oracle
