#include <doctest.h>

#include <random>

#include "cutsparse/coin.hpp"
#include "cutsparse/ladder.hpp"
#include "cutsparse/union_find.hpp"

using namespace cutsparse;

TEST_CASE("union-find basics") {
  UnionFind uf(3);
  CHECK_FALSE(uf.connected(0, 1));
  CHECK(uf.components() == 3);

  CHECK(uf.unite(0, 1));
  CHECK(uf.connected(0, 1));
  CHECK(uf.components() == 2);

  CHECK_FALSE(uf.unite(0, 1));
  CHECK(uf.components() == 2);

  CHECK_THROWS_AS(uf.find(3), std::out_of_range);
}

TEST_CASE("union-find component count under random interleaving") {
  std::mt19937_64 rng(11);
  UnionFind uf(64);
  uint32_t successes = 0;
  for (int i = 0; i < 500; ++i) {
    uint32_t a = static_cast<uint32_t>(rng() % 64);
    uint32_t b = static_cast<uint32_t>(rng() % 64);
    if (a == b) continue;
    if (uf.unite(a, b)) ++successes;
    CHECK(uf.components() == 64 - successes);
  }
}

TEST_CASE("ladder thresholds on constructed states") {
  RefinementLadder fresh(4, 3, 4);
  CHECK(fresh.threshold(0, 1) == 1);
  CHECK(fresh.threshold(2, 2) == 3 * 4 + 1);
  CHECK(fresh.level_threshold(0, 1) == 1);
  CHECK(fresh.level_threshold(2, 2) == 3 + 1);

  // insert (0,1) into D_1..D_5 only
  RefinementLadder lad(4, 3, 4);
  for (uint32_t j = 1; j <= 5; ++j) lad.insert(j, 0, 1);
  CHECK(lad.threshold(0, 1) == 6);
  // D_{1,4} = cell 4 holds the edge, D_{2,4} = cell 8 does not
  CHECK(lad.level_threshold(0, 1) == 2);
  CHECK(lad.chain_monotone(0, 1));
  CHECK(lad.insertions(3) == 1);
  CHECK(lad.insertions(6) == 0);
  CHECK(lad.total_insertions() == 5);
}

TEST_CASE("ladder cell addressing") {
  RefinementLadder lad(2, 5, 7);
  CHECK(lad.cell_count() == 35);
  for (uint32_t l = 1; l <= 5; ++l)
    for (uint32_t k = 1; k <= 7; ++k) {
      uint32_t j = lad.cell_index(l, k);
      CHECK(lad.level_of(j) == l);
      CHECK(lad.round_of(j) == k);
    }
  CHECK(lad.connected(0, 0, 1));  // virtual D_0
}

TEST_CASE("chain monotonicity audit under random guarded insertions") {
  std::mt19937_64 rng(23);
  RefinementLadder lad(16, 4, 5);
  const uint32_t cells = lad.cell_count();
  for (int step = 0; step < 2000; ++step) {
    uint32_t u = static_cast<uint32_t>(rng() % 16);
    uint32_t v = static_cast<uint32_t>(rng() % 16);
    if (u == v) continue;
    // honor the insertion guard: only insert where the predecessor connects
    uint32_t jstar = lad.threshold(u, v);
    if (jstar <= cells && (rng() & 1)) lad.insert(jstar, u, v);
  }
  for (int probe = 0; probe < 1000; ++probe) {
    uint32_t u = static_cast<uint32_t>(rng() % 16);
    uint32_t v = static_cast<uint32_t>(rng() % 16);
    if (u == v) continue;
    CHECK(lad.chain_monotone(u, v));
    uint32_t jstar = lad.threshold(u, v);
    REQUIRE(jstar >= 1);
    REQUIRE(jstar <= cells + 1);
    if (jstar > 1) CHECK(lad.connected(jstar - 1, u, v));
    if (jstar <= cells) CHECK_FALSE(lad.connected(jstar, u, v));
  }
}

TEST_CASE("coin oracle is a pure function of its key") {
  CoinOracle a(42), b(42), c(43);
  double x = a.coin(7, 2, 3, CoinRole::Fair);
  CHECK(x == a.coin(7, 2, 3, CoinRole::Fair));
  CHECK(x == b.coin(7, 2, 3, CoinRole::Fair));
  CHECK(x != c.coin(7, 2, 3, CoinRole::Fair));
  CHECK(x != a.coin(7, 2, 3, CoinRole::Geom));
  CHECK(x != a.coin(8, 2, 3, CoinRole::Fair));
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}

TEST_CASE("coin oracle values look uniform") {
  CoinOracle coins(5);
  double sum = 0.0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) sum += coins.coin(static_cast<uint64_t>(i), 1, 1, CoinRole::Geom);
  double mean = sum / trials;
  CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
}
