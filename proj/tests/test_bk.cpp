#include <doctest.h>

#include <cmath>

#include "cutsparse/bk.hpp"

#include "helpers.hpp"

using namespace cutsparse;
using cutsparse::testing::ConstCoins;

TEST_CASE("rho formula") {
  CHECK(bk_rho(100, 1.0) == doctest::Approx(16.0 * 3.0 * std::log(100.0)));
  CHECK(bk_rho(100, 1.0) == doctest::Approx(221.03).epsilon(1e-3));
}

TEST_CASE("probabilities follow min{rho/(eps^2 s), 1}") {
  WeightedGraph g;
  g.n = 100;
  g.edges.push_back({0, 1, 1.0});
  g.edges.push_back({1, 2, 1.0});
  StrengthMap s;
  s.s = {1000.0, 10.0};
  SampleProbabilities p = bk_probabilities(g, s, 0.5, 1.0);
  CHECK(p.provenance == ProbProvenance::Theory);
  CHECK(p.p[0] == doctest::Approx(bk_rho(100, 1.0) / (0.25 * 1000.0)));
  CHECK(p.p[0] == doctest::Approx(0.884).epsilon(1e-3));
  CHECK(p.p[1] == 1.0);  // rho/(eps^2 s) >= 1, clamped

  // non-increasing in s, saturated for s <= rho/eps^2
  StrengthMap s2;
  s2.s = {500.0, 2000.0};
  SampleProbabilities p2 = bk_probabilities(g, s2, 0.5, 1.0);
  CHECK(p2.p[0] >= p2.p[1]);

  StrengthMap missing;
  missing.s = {1.0};
  CHECK_THROWS_AS(bk_probabilities(g, missing, 0.5, 1.0), GraphError);
}

TEST_CASE("bk sampling saturates on small graphs") {
  WeightedGraph g = to_weighted(generate_gnp(64, 0.3, 5));
  StrengthMap s = exact_strengths(g);
  CoinOracle coins(3);
  Sparsifier out = bk_sample(g, s, 0.5, 1.0, 1.0, coins);
  REQUIRE(out.size() == g.m());
  for (const SparsifierEdge& e : out.edges) CHECK(e.weight == doctest::Approx(1.0));
}

TEST_CASE("kept edges carry weight w/p") {
  WeightedGraph g;
  g.n = 100;
  g.edges.push_back({0, 1, 3.0});
  StrengthMap s;
  s.s = {2000.0};
  ConstCoins heads(0.0);
  Sparsifier out = bk_sample(g, s, 0.5, 1.0, 1.0, heads);
  double p = bk_rho(100, 1.0) / (0.25 * 2000.0);
  REQUIRE(out.size() == 1);
  CHECK(out.edges[0].weight == doctest::Approx(3.0 / p));
  CHECK(out.edges[0].prob == doctest::Approx(p));

  ConstCoins tails(0.9999);
  CHECK(bk_sample(g, s, 0.5, 1.0, 1.0, tails).size() == 0);
}

TEST_CASE("oversample") {
  WeightedGraph g = to_weighted(generate_gnp(16, 0.5, 2));
  CoinOracle coins(8);

  SampleProbabilities ones;
  ones.p.assign(g.m(), 1.0);
  ones.provenance = ProbProvenance::Overridden;
  Sparsifier out = oversample(g, ones, coins);
  REQUIRE(out.size() == g.m());
  for (const SparsifierEdge& e : out.edges) CHECK(e.weight == doctest::Approx(1.0));

  SampleProbabilities bad;
  bad.p.assign(g.m(), 0.0);
  CHECK_THROWS_AS(oversample(g, bad, coins), GraphError);

  // domination contract: p below the theory probability is rejected
  StrengthMap s = exact_strengths(g);
  SampleProbabilities low;
  low.p.assign(g.m(), 1e-6);
  low.provenance = ProbProvenance::Overridden;
  CHECK_THROWS_AS(oversample(g, low, coins, s, 0.5, 1.0), GraphError);
  CHECK_NOTHROW(oversample(g, ones, coins, s, 0.5, 1.0));
}

TEST_CASE("oversample at theory probabilities matches bk_sample") {
  WeightedGraph g;
  g.n = 200;
  for (uint32_t i = 0; i + 1 < 30; ++i) g.edges.push_back({i, i + 1, 1.0});
  StrengthMap s;
  s.s.assign(g.m(), 5000.0);
  CoinOracle coins(4);
  Sparsifier a = bk_sample(g, s, 0.5, 1.0, 1.0, coins);
  Sparsifier b = oversample(g, bk_probabilities(g, s, 0.5, 1.0), coins);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a.edges[i].stream_index == b.edges[i].stream_index);
    CHECK(a.edges[i].weight == doctest::Approx(b.edges[i].weight));
  }
}

TEST_CASE("unbiased cut values") {
  WeightedGraph g;
  g.n = 400;
  for (uint32_t i = 0; i < 20; ++i) g.edges.push_back({0, i + 1, 1.0});
  StrengthMap s;
  s.s.assign(g.m(), 50000.0);  // forces small p
  double p = bk_rho(400, 1.0) / (0.25 * 50000.0);
  REQUIRE(p < 1.0);

  const int seeds = 500;
  double sum = 0.0, sumsq = 0.0;
  for (int seed = 0; seed < seeds; ++seed) {
    CoinOracle coins(static_cast<uint64_t>(seed));
    double w = bk_sample(g, s, 0.5, 1.0, 1.0, coins).total_weight();
    sum += w;
    sumsq += w * w;
  }
  double mean = sum / seeds;
  double var = sumsq / seeds - mean * mean;
  double se = std::sqrt(var / seeds);
  CHECK(std::abs(mean - 20.0) <= 3.0 * se + 1e-9);
}

TEST_CASE("expected sample size") {
  WeightedGraph g = to_weighted(generate_gnp(64, 0.4, 10));
  StrengthMap s = exact_strengths(g);
  double rho_scale = 0.02;
  SampleProbabilities probs = bk_probabilities(g, s, 0.5, 1.0, rho_scale);
  double expected = 0.0;
  for (double p : probs.p) expected += p;
  REQUIRE(expected < static_cast<double>(g.m()));

  const int seeds = 500;
  double total = 0.0;
  for (int seed = 0; seed < seeds; ++seed) {
    CoinOracle coins(static_cast<uint64_t>(seed));
    total += static_cast<double>(bk_sample(g, s, 0.5, 1.0, rho_scale, coins).size());
  }
  CHECK(total / seeds == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("shrink pipeline") {
  // already saturated input passes through unchanged
  Sparsifier in;
  in.n = 32;
  EdgeStream g = generate_gnp(32, 0.4, 7);
  for (size_t t = 0; t < g.m(); ++t)
    in.edges.push_back({g.edges[t].u, g.edges[t].v, 1.0, t, 1, 1.0});
  Sparsifier out = shrink_pipeline(in, 0.5, 1.0, 3);
  REQUIRE(out.size() == in.size());
  for (const SparsifierEdge& e : out.edges) CHECK(e.weight == doctest::Approx(1.0));

  // subsampling never adds edges
  Sparsifier heavy;
  heavy.n = 16;
  EdgeStream h = generate_gnp(16, 0.8, 9);
  for (size_t t = 0; t < h.m(); ++t)
    heavy.edges.push_back({h.edges[t].u, h.edges[t].v, 2.0, t, 1, 0.5});
  CHECK(shrink_pipeline(heavy, 0.5, 1.0, 3).size() <= heavy.size());

  // weight cap: n^4 for n=2 is 16
  Sparsifier capped;
  capped.n = 2;
  capped.edges.push_back({0, 1, 17.0, 0, 1, 1.0});
  CHECK_THROWS_AS(shrink_pipeline(capped, 0.5, 1.0, 0), GraphError);
}
