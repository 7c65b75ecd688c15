#include "headliner/rng.hpp"

#include <numeric>
#include <stdexcept>

#include "headliner/text.hpp"

namespace headliner {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  const std::uint64_t limit = (0 - n) % n;
  std::uint64_t r = 0;
  do {
    r = engine_();
  } while (r < limit);
  return r % n;
}

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
  if (k > n) k = n;
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    auto j = i + static_cast<std::size_t>(below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view record_id) {
  std::uint64_t z = run_seed ^ text::fnv1a64(record_id);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace headliner
