#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace headliner {

/// Seeded generator shared by every random decision in a run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws do not go through std::uniform_int_distribution
/// (implementation-defined); they use rejection sampling on the raw 64-bit
/// output so a seed reproduces the same picks on any conforming toolchain:
///
///   limit = (2^64 - n) mod n;  draw r until r >= limit;  return r mod n
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+reject-mod/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// k distinct indices from [0, n), in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

/// Per-record seed: mixes the run seed with a stable hash of the record id
/// (SplitMix64 finalizer) so records can be processed in any order.
std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view record_id);

}  // namespace headliner
