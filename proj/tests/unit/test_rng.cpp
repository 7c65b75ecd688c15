#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "headliner/rng.hpp"

using namespace headliner;

TEST_CASE("engine output is the standard mt19937_64 sequence") {
  Rng r(5489);
  for (int i = 0; i < 9999; ++i) r.next();
  CHECK(r.next() == 9981545732273789042ULL);
}

TEST_CASE("below stays in range and is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    auto x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
  }
  Rng c(1);
  CHECK(c.below(1) == 0);
}

TEST_CASE("below matches rejection-mod on the raw stream") {
  std::mt19937_64 eng(99);
  Rng r(99);
  const std::uint64_t n = 10;
  const std::uint64_t limit = (0 - n) % n;
  for (int i = 0; i < 200; ++i) {
    std::uint64_t x;
    do x = eng(); while (x < limit);
    CHECK(r.below(n) == x % n);
  }
}

TEST_CASE("sample_indices draws distinct indices") {
  Rng r(3);
  auto s = r.sample_indices(1000, 500);
  CHECK(s.size() == 500);
  CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 500);
  CHECK(*std::max_element(s.begin(), s.end()) < 1000);
  Rng q(3);
  CHECK(q.sample_indices(1000, 500) == s);
  Rng all(8);
  auto full = all.sample_indices(5, 5);
  std::sort(full.begin(), full.end());
  CHECK(full == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("derive_seed depends on run seed and id") {
  CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
  CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
}
