#include <doctest.h>

#include <cmath>

#include "cutsparse/refinement.hpp"

#include "helpers.hpp"

using namespace cutsparse;
using cutsparse::testing::ConstCoins;

namespace {

EdgeStream triangle_bridge() { return generate_clique_chain(2, 3); }

}  // namespace

TEST_CASE("partition refines relation") {
  Partition whole = Partition::whole(4);
  Partition fine = Partition::singletons(4);
  CHECK(whole.class_count() == 1);
  CHECK(fine.class_count() == 4);
  CHECK(fine.refines(whole));
  CHECK_FALSE(whole.refines(fine));
  CHECK(whole.refines(whole));

  Partition p({0, 0, 1, 1});
  Partition q({0, 1, 2, 2});
  CHECK(q.refines(p));
  CHECK_FALSE(p.refines(q));
}

TEST_CASE("refine base cases") {
  EdgeStream b = triangle_bridge();
  Partition whole = Partition::whole(6);

  Partition none = refine(whole, 0.0, b, [](uint64_t) { return 0.5; });
  CHECK(none.class_count() == 6);

  Partition all = refine(whole, 1.0, b, [](uint64_t) { return 0.5; });
  CHECK(all.class_count() == 1);

  // sample exactly the six triangle edges, never the bridge (index 3)
  Partition split = refine(whole, 0.5, b, [&](uint64_t t) {
    return (b.edges[t].u <= 2) == (b.edges[t].v <= 2) ? 0.0 : 0.9;
  });
  CHECK(split.class_count() == 2);
  CHECK(split.same_class(0, 2));
  CHECK(split.same_class(3, 5));
  CHECK_FALSE(split.same_class(2, 3));
  CHECK(split.refines(whole));
}

TEST_CASE("refine never merges across the input partition") {
  EdgeStream b = triangle_bridge();
  Partition halves({0, 0, 0, 1, 1, 1});
  Partition r = refine(halves, 1.0, b, [](uint64_t) { return 0.0; });
  CHECK(r.refines(halves));
  CHECK_FALSE(r.same_class(2, 3));  // the bridge may not merge the halves
  CHECK(r.class_count() == 2);
}

TEST_CASE("crossing_edges") {
  EdgeStream b = triangle_bridge();
  CHECK(crossing_edges(Partition::singletons(6), b).size() == b.m());
  CHECK(crossing_edges(Partition::whole(6), b).empty());

  std::vector<uint32_t> x = crossing_edges(Partition({0, 0, 0, 1, 1, 1}), b);
  REQUIRE(x.size() == 1);
  CHECK(b.edges[x[0]] == Edge{2, 3, 1});
}

TEST_CASE("refinement_sample saturates at small n") {
  EdgeStream g = generate_gnp(16, 0.4, 3);
  RefineParams params = RefineParams::defaults(16);
  CoinOracle coins(9);
  RefinementSampleResult r = refinement_sample(g, params, coins, CoinRole::Alg1, true);
  REQUIRE(r.sample.size() == g.m());
  for (const SparsifierEdge& e : r.sample.edges) {
    CHECK(e.weight == 1.0);
    CHECK(e.prob == 1.0);
  }
  REQUIRE(r.levels.size() == g.m());
}

TEST_CASE("single edge with all-tails coins separates at level 1") {
  EdgeStream g = parse_edge_stream("2\n0 1\n");
  RefineParams params = RefineParams::defaults(2);
  ConstCoins tails(0.999);
  RefinementSampleResult r = refinement_sample(g, params, tails);
  REQUIRE(r.levels.size() == 1);
  CHECK(r.levels[0] == 1);
}

TEST_CASE("level map is deterministic per seed and within range") {
  EdgeStream g = generate_gnp(24, 0.3, 17);
  RefineParams params = RefineParams::defaults(24);
  params.seed = 5;
  CoinOracle coins(params.seed);
  RefinementSampleResult a = refinement_sample(g, params, coins, CoinRole::Alg1, true);
  RefinementSampleResult b = refinement_sample(g, params, coins);
  CHECK(a.levels == b.levels);
  for (uint32_t lvl : a.levels) {
    CHECK(lvl >= 1);
    CHECK(lvl <= params.L + 1);
  }
}

TEST_CASE("params defaults follow the stated formulas") {
  RefineParams p = RefineParams::defaults(16);
  CHECK(p.L == 5);   // ceil(log2(2*16))
  CHECK(p.K == 11);  // ceil(log_{4/3} 16) + 1 = ceil(9.63..) + 1
  CHECK(p.rho_theory() == doctest::Approx(16.0 * 3.0 * std::log(16.0)));
  CHECK(p.phi() == doctest::Approx(4.0 * p.rho()));

  // z = min{1, 4 rho / (eps^2 2^level)}
  CHECK(p.keep_probability(1) == 1.0);
  CHECK(p.keep_probability(p.L + 1) == 1.0);
  RefineParams tiny = p;
  tiny.rho_scale = 1e-6;
  CHECK(tiny.keep_probability(1) ==
        doctest::Approx(4.0 * tiny.rho() / (0.25 * 2.0)));

  RefineParams bad = p;
  bad.eps = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("weighted parameter defaults use n*W") {
  RefineParams p = RefineParams::defaults(16, 8);
  CHECK(p.L == 8);   // ceil(log2(2*16*8))
  CHECK(p.K == 18);  // ceil(log_{4/3} 128) + 1
}

TEST_CASE("mean output weight is unbiased when sampling is non-trivial") {
  EdgeStream g = generate_gnp(48, 0.25, 21);
  RefineParams params = RefineParams::defaults(48);
  params.rho_scale = 0.002;
  double total = 0.0;
  const int seeds = 120;
  for (int s = 0; s < seeds; ++s) {
    CoinOracle coins(static_cast<uint64_t>(s));
    total += refinement_sample(g, params, coins).sample.total_weight();
  }
  double mean = total / seeds;
  CHECK(mean == doctest::Approx(static_cast<double>(g.m())).epsilon(0.05));
}
