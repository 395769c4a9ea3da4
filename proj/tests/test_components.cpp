#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "surf/components.hpp"
#include "test_helpers.hpp"

using namespace surf;
using surf::testing::W;

namespace {

using Cover = std::set<std::pair<int, int>>;

std::set<Cover> partition_of(const std::vector<ComponentData>& comps, std::size_t m,
                             std::size_t n) {
  std::set<Cover> parts;
  for (const auto& c : comps) {
    const auto pairs = covered_pairs(c, m, n);
    parts.insert(Cover(pairs.begin(), pairs.end()));
  }
  return parts;
}

Cover transpose(const Cover& s) {
  Cover t;
  for (auto [k, l] : s) t.insert({l, k});
  return t;
}

}  // namespace

TEST_CASE("genus-2 worked example: the full ten-component table") {
  const Genus g(2);
  const CyclicWord mu(W(g, {4, 3, 4, -1}));
  const CyclicWord nu(W(g, {-4, 3, 4, -3}));
  const auto comps = enumerate_components(mu, nu);
  REQUIRE(comps.size() == 10);

  using K = ComponentKind;
  const std::vector<ComponentData> expected = {
      {1, 1, K::ParallelRun, 2},  {1, 2, K::Isolated, 0}, {2, 4, K::AntiparallelRun, 1},
      {2, 4, K::Isolated, 0},     {3, 1, K::Isolated, 0}, {3, 2, K::Isolated, 0},
      {4, 2, K::ParallelRun, 1},  {4, 3, K::AntiparallelRun, 2},
      {4, 3, K::Isolated, 0},     {4, 4, K::Isolated, 0},
  };
  CHECK(comps == expected);
}

TEST_CASE("identical single letters give one wrap-around parallel component") {
  const Genus g(2);
  const auto comps = enumerate_components(CyclicWord(W(g, {1})), CyclicWord(W(g, {1})));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == ComponentKind::InfiniteParallel);
  CHECK(covered_points(comps[0], 1, 1) == 1);
}

TEST_CASE("a letter against its inverse gives one wrap-around antiparallel component") {
  const Genus g(2);
  const auto comps = enumerate_components(CyclicWord(W(g, {1})), CyclicWord(W(g, {-1})));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == ComponentKind::InfiniteAntiparallel);
}

TEST_CASE("distinct single letters give one isolated point") {
  const Genus g(2);
  const auto comps = enumerate_components(CyclicWord(W(g, {1})), CyclicWord(W(g, {2})));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == ComponentData{1, 1, ComponentKind::Isolated, 0});
}

TEST_CASE("self grid of a single letter is the diagonal") {
  const Genus g(2);
  const auto comps = self_components(CyclicWord(W(g, {1})));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == ComponentKind::InfiniteParallel);
}

TEST_CASE("self grid of a power word consists of diagonal wraps") {
  const Genus g(2);
  const auto comps = self_components(CyclicWord(W(g, {1, 1, 1})));
  REQUIRE(comps.size() == 3);
  std::size_t covered = 0;
  for (const auto& c : comps) {
    CHECK(c.kind == ComponentKind::InfiniteParallel);
    covered += covered_points(c, 3, 3);
  }
  CHECK(covered == 9);
}

TEST_CASE("a word against its square: one wrap-around diagonal plus isolated points") {
  const Genus g(2);
  const CyclicWord mu(W(g, {1, 2}));
  const CyclicWord nu(W(g, {1, 2, 1, 2}));
  const auto comps = enumerate_components(mu, nu);
  // base pairs with k = l mod 2 form one orbit of size lcm(2,4) = 4; the
  // other four points are isolated
  REQUIRE(comps.size() == 5);
  int infinite = 0, isolated = 0;
  std::size_t covered = 0;
  for (const auto& c : comps) {
    covered += covered_points(c, 2, 4);
    if (c.kind == ComponentKind::InfiniteParallel) ++infinite;
    if (c.kind == ComponentKind::Isolated) ++isolated;
  }
  CHECK(infinite == 1);
  CHECK(isolated == 4);
  CHECK(covered == 8);
}

TEST_CASE("a wrap-around orbit through shifted copies of the same letters") {
  const Genus g(2);
  // u matches v shifted by one place, so the off-diagonal points form one
  // orbit wrapping both subscripts; the diagonal points are isolated
  const auto comps = enumerate_components(CyclicWord(W(g, {1, 2})), CyclicWord(W(g, {2, 1})));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == ComponentData{1, 1, ComponentKind::Isolated, 0});
  CHECK(comps[1] == ComponentData{1, 2, ComponentKind::InfiniteParallel, 0});
  CHECK(comps[2] == ComponentData{2, 2, ComponentKind::Isolated, 0});
}

TEST_CASE("self components are closed under transposition") {
  const Genus g(2);
  const CyclicWord mu(W(g, {4, 3, 4, -1}));
  const auto parts = partition_of(self_components(mu), 4, 4);
  for (const auto& part : parts) CHECK(parts.count(transpose(part)) == 1);
}

TEST_CASE("swapping the words transposes the components") {
  std::mt19937_64 rng(808);
  for (int gv : {2, 3}) {
    const Genus g(gv);
    for (int trial = 0; trial < 60; ++trial) {
      const CyclicWord mu = surf::testing::random_cyclic_word(rng, g, 7);
      const CyclicWord nu = surf::testing::random_cyclic_word(rng, g, 7);
      const auto ab = partition_of(enumerate_components(mu, nu), mu.size(), nu.size());
      const auto ba = partition_of(enumerate_components(nu, mu), nu.size(), mu.size());
      std::set<Cover> ab_t;
      for (const auto& part : ab) ab_t.insert(transpose(part));
      CHECK(ab_t == ba);
    }
  }
}

TEST_CASE("components partition the grid exactly") {
  std::mt19937_64 rng(1618);
  for (int gv : {2, 3, 4}) {
    const Genus g(gv);
    for (int trial = 0; trial < 80; ++trial) {
      const CyclicWord mu = surf::testing::random_cyclic_word(rng, g, 8);
      const CyclicWord nu = surf::testing::random_cyclic_word(rng, g, 8);
      const std::size_t m = mu.size(), n = nu.size();
      const auto comps = enumerate_components(mu, nu);
      std::set<std::pair<int, int>> seen;
      std::size_t total = 0;
      const long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
      for (const auto& c : comps) {
        const auto pairs = covered_pairs(c, m, n);
        CHECK(pairs.size() == covered_points(c, m, n));
        total += pairs.size();
        for (auto p : pairs) CHECK(seen.insert(p).second);
        if (!is_infinite(c.kind)) CHECK(c.run < L);  // finite run bound
      }
      CHECK(total == m * n);
    }
  }
}

TEST_CASE("enumeration rejects empty input and genus mismatch") {
  const Genus g(2);
  const CyclicWord one(W(g, {1}));
  CHECK_THROWS_AS(enumerate_components(CyclicWord(Word(g)), one), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_components(one, CyclicWord(Word(g))), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_components(one, CyclicWord(W(Genus(3), {1}))), std::invalid_argument);
}
