#include <doctest.h>

#include <random>
#include <set>

#include "cutsparse/graph.hpp"

using namespace cutsparse;

namespace {

// Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
EdgeStream triangle_bridge() { return generate_clique_chain(2, 3); }

}  // namespace

TEST_CASE("parse_edge_stream basic formats") {
  EdgeStream s = parse_edge_stream("3\n0 1\n1 2\n");
  CHECK(s.n == 3);
  REQUIRE(s.edges.size() == 2);
  CHECK(s.edges[0] == Edge{0, 1, 1});
  CHECK(s.edges[1] == Edge{1, 2, 1});

  EdgeStream w = parse_edge_stream("4\n0 1 7\n");
  CHECK(w.n == 4);
  REQUIRE(w.edges.size() == 1);
  CHECK(w.edges[0] == Edge{0, 1, 7});

  EdgeStream c = parse_edge_stream("# comment\n2\n# another\n0 1\n");
  CHECK(c.m() == 1);
}

TEST_CASE("parse_edge_stream rejects malformed input") {
  CHECK_THROWS_AS(parse_edge_stream("2\n0 0\n"), GraphError);      // self-loop
  CHECK_THROWS_AS(parse_edge_stream("2\n0 2\n"), GraphError);      // id out of range
  CHECK_THROWS_AS(parse_edge_stream("2\n0 1 0\n"), GraphError);    // non-positive weight
  CHECK_THROWS_AS(parse_edge_stream("2\n0 1 -3\n"), GraphError);   // negative weight
  CHECK_THROWS_AS(parse_edge_stream("2\nnope\n"), GraphError);     // malformed line
  CHECK_THROWS_AS(parse_edge_stream(""), GraphError);              // missing n
  CHECK_THROWS_AS(parse_edge_stream("0\n"), GraphError);           // n < 1
}

TEST_CASE("parse error names the line number") {
  try {
    parse_edge_stream("# header\n3\n0 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("parse / serialize round trip") {
  EdgeStream s = parse_edge_stream("5\n0 1\n3 4 9\n1 2\n");
  EdgeStream again = parse_edge_stream(format_edge_stream(s));
  CHECK(s == again);
}

TEST_CASE("cut_value on fixtures") {
  // K4, side {0}: vertex degree 3.
  WeightedGraph k4 = to_weighted(generate_clique_chain(1, 4));
  CHECK(cut_value(k4, CutSpec{{0}}) == doctest::Approx(3.0));

  WeightedGraph b = to_weighted(triangle_bridge());
  CHECK(cut_value(b, CutSpec{{0, 1, 2}}) == doctest::Approx(1.0));
  CHECK(cut_value(b, CutSpec{{0}}) == doctest::Approx(2.0));

  CHECK_THROWS_AS(cut_value(b, CutSpec{{}}), GraphError);
  CHECK_THROWS_AS(cut_value(b, CutSpec{{0, 1, 2, 3, 4, 5}}), GraphError);
}

TEST_CASE("cut symmetry and singleton-degree identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    uint32_t n = 4 + static_cast<uint32_t>(rng() % 8);
    WeightedGraph g = to_weighted(generate_gnp(n, 0.5, rng()));
    if (g.edges.empty()) continue;

    // cut(S) == cut(V \ S)
    std::vector<uint32_t> side, other;
    for (uint32_t v = 0; v < n; ++v) (rng() & 1 ? side : other).push_back(v);
    if (side.empty() || other.empty()) continue;
    CHECK(cut_value(g, CutSpec{side}) == doctest::Approx(cut_value(g, CutSpec{other})));

    // sum of singleton cuts = 2 * total weight
    double sum = 0.0;
    for (uint32_t v = 0; v < n; ++v) sum += cut_value(g, CutSpec{{v}});
    CHECK(sum == doctest::Approx(2.0 * g.total_weight()).epsilon(1e-9));
  }
}

TEST_CASE("generators") {
  EdgeStream star = generate_star(5);
  CHECK(star.n == 5);
  REQUIRE(star.m() == 4);
  for (uint32_t i = 0; i < 4; ++i) CHECK(star.edges[i] == Edge{0, i + 1, 1});

  EdgeStream b = generate_clique_chain(2, 3);
  CHECK(b.n == 6);
  CHECK(b.m() == 7);  // 3 + 3 triangle edges + 1 bridge
  std::set<std::pair<uint32_t, uint32_t>> have;
  for (const Edge& e : b.edges) have.insert({e.u, e.v});
  CHECK(have.count({2, 3}) == 1);  // the bridge

  EdgeStream k8 = generate_gnp(8, 1.0, 123);
  CHECK(k8.m() == 28);

  EdgeStream grid = generate_grid(3, 4);
  CHECK(grid.n == 12);
  CHECK(grid.m() == 3 * 3 + 2 * 4);  // horizontal + vertical

  CHECK(generate_gnp(16, 0.3, 5) == generate_gnp(16, 0.3, 5));
  CHECK_THROWS_AS(generate_gnp(4, 1.5, 0), GraphError);
  CHECK_THROWS_AS(generate_star(1), GraphError);
}

TEST_CASE("shuffle_stream modes") {
  EdgeStream s = parse_edge_stream("4\n0 1\n1 2\n2 3\n");
  EdgeStream rev = shuffle_stream(s, StreamOrder::Reversed, 0);
  CHECK(rev.edges.front() == Edge{2, 3, 1});
  CHECK(rev.edges.back() == Edge{0, 1, 1});

  CHECK(shuffle_stream(s, StreamOrder::AsGiven, 99) == s);

  EdgeStream r1 = shuffle_stream(s, StreamOrder::Random, 42);
  EdgeStream r2 = shuffle_stream(s, StreamOrder::Random, 42);
  CHECK(r1 == r2);

  EdgeStream sorted = shuffle_stream(rev, StreamOrder::SortedByEndpoint, 0);
  CHECK(sorted == s);

  CHECK_THROWS_AS(parse_stream_order("bogus"), GraphError);
}
