#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "eccspec/edge_list.hpp"
#include "eccspec/expression.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph.hpp"
#include "support/brute.hpp"

using namespace eccspec;

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return e;
}

}  // namespace

TEST_CASE("build_graph") {
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  const Graph g = build_graph(3, p3);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g == path(3));

  CHECK(build_graph(4, all_pairs(4)) == complete(4));
  CHECK(build_graph(1, {}).order() == 1);

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(build_graph(2, dup).size() == 1);

  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(build_graph(2, loop), std::invalid_argument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(build_graph(3, far), std::invalid_argument);
}

TEST_CASE("named families") {
  const Graph f = windmill(2, 2);
  CHECK(f.order() == 5);
  CHECK(f.size() == 6);

  const Graph s = s_n3(5);
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}});

  CHECK(double_star(1, 1) == path(4));
  CHECK(star(3).degree(0) == 3);
  CHECK(cycle(5).size() == 5);
  CHECK(petersen().size() == 15);
  CHECK(is_regular(petersen()) == 3);
  CHECK(wheel(4).size() == 8);
  CHECK(barbell(3).size() == 7);  // two triangles and a bridge

  const std::vector<std::size_t> parts{2, 3};
  CHECK(multipartite(parts).size() == 6);
}

TEST_CASE("family dispatch rejects bad input") {
  const std::vector<std::int64_t> two{2};
  const std::vector<std::int64_t> four{4};
  const std::vector<std::int64_t> one{1};
  CHECK_THROWS_AS(family("nope", two), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle", two), std::invalid_argument);
  CHECK_THROWS_AS(family("s_n3", four), std::invalid_argument);
  CHECK_THROWS_AS(family("barbell", one), std::invalid_argument);
  CHECK(family("cycle", four) == cycle(4));
  for (const auto& name : family_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("double star order and size") {
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; b <= 5; ++b) {
      const Graph g = double_star(a, b);
      CHECK(g.order() == a + b + 2);
      CHECK(g.size() == a + b + 1);
    }
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty(5));
  const Graph c = complement(cycle(4));
  CHECK(c.size() == 2);
  CHECK(c.adjacent(0, 2));
  CHECK(c.adjacent(1, 3));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = brute::random_graph(rng, brute::uniform(rng, 1, 9));
    const Graph h = complement(g);
    CHECK(complement(h) == g);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.degree(v) + h.degree(v) == g.order() - 1);
  }
}

TEST_CASE("metric profile") {
  const MetricProfile p4 = metric_profile(path(4));
  CHECK(p4.ecc == std::vector<std::int64_t>{3, 2, 2, 3});
  CHECK(p4.radius == 2);
  CHECK(p4.diameter == 3);

  for (std::size_t t = 2; t <= 6; ++t)
    for (auto e : metric_profile(cycle(2 * t)).ecc) CHECK(e == static_cast<std::int64_t>(t));

  for (std::size_t m = 2; m <= 5; ++m) {
    const MetricProfile s = metric_profile(star(m));
    CHECK(s.ecc[0] == 1);
    for (std::size_t v = 1; v <= m; ++v) CHECK(s.ecc[v] == 2);
  }

  CHECK_THROWS_AS(metric_profile(empty(2)), DisconnectedGraphError);
  try {
    metric_profile(empty(3));
  } catch (const DisconnectedGraphError& e) {
    CHECK(std::string(e.what()).find("metric undefined") != std::string::npos);
  }
}

TEST_CASE("degree helpers") {
  CHECK(is_regular(cycle(5)) == 2);
  CHECK_FALSE(is_regular(path(4)).has_value());
  CHECK(max_degree(star(3)) == 3);
  CHECK(is_complete(complete(4)));
  CHECK_FALSE(is_complete(cycle(4)));
  CHECK(is_connected(path(5)));
  CHECK_FALSE(is_connected(empty(2)));
}

TEST_CASE("metric profile agrees with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = brute::random_connected(rng, brute::uniform(rng, 1, 12));
    const MetricProfile p = metric_profile(g);
    const auto d = brute::floyd_warshall(g);
    const std::size_t n = g.order();
    std::int64_t lo = p.ecc[0], hi = p.ecc[0];
    for (std::size_t u = 0; u < n; ++u) {
      std::int64_t row_max = 0;
      for (std::size_t v = 0; v < n; ++v) {
        REQUIRE(p.dist(u, v) == d[u][v]);
        CHECK(p.dist(u, v) == p.dist(v, u));
        row_max = std::max(row_max, p.dist(u, v));
        for (std::size_t w = 0; w < n; ++w) CHECK(p.dist(u, w) <= p.dist(u, v) + p.dist(v, w));
      }
      CHECK(p.ecc[u] == row_max);
      lo = std::min(lo, p.ecc[u]);
      hi = std::max(hi, p.ecc[u]);
    }
    CHECK(p.radius == lo);
    CHECK(p.diameter == hi);
    CHECK(p.radius <= p.diameter);
    CHECK(p.diameter <= 2 * p.radius);
  }
}

TEST_CASE("edge list round trip") {
  std::istringstream in("# P3\n3 2\n0 1   # first\n\n1 2\n");
  const Graph g = read_edge_list(in);
  CHECK(g == path(3));

  std::ostringstream out;
  write_edge_list(out, petersen());
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == petersen());

  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS(read_edge_list(short_list));
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS(read_edge_list(loop));
  std::istringstream junk("x y\n");
  CHECK_THROWS(read_edge_list(junk));
}

TEST_CASE("graph expressions") {
  CHECK(parse_graph_expression("P4") == path(4));
  CHECK(parse_graph_expression("K5") == complete(5));
  CHECK(parse_graph_expression("Kbar3") == empty(3));
  CHECK(parse_graph_expression("C6") == cycle(6));
  CHECK(parse_graph_expression("S 2 3") == double_star(2, 3));
  CHECK(parse_graph_expression("Petersen") == petersen());
  CHECK(parse_graph_expression("G 3 0 1 1 2") == path(3));
  CHECK(parse_graph_expression("join(K1, C4)") == wheel(4));
  CHECK(parse_graph_expression("hjoin(P4; Kbar2, K1, K1, Kbar3)") == double_star(2, 3));
  CHECK(parse_graph_expression("lex(C6, K2)").size() == 30);
  CHECK(parse_graph_expression("corona(K2; K1, K1)").order() == 4);
  CHECK(parse_graph_expression("coalesce(K3@0, K4@0)").order() == 6);
  CHECK(parse_graph_expression("union(K2, K2)").size() == 2);

  CHECK_THROWS_AS(parse_graph_expression("hjoin(P4;"), ParseError);
  CHECK_THROWS_AS(parse_graph_expression("join(K1 K2)"), ParseError);
  CHECK_THROWS_AS(parse_graph_expression(""), ParseError);
  CHECK_THROWS_AS(parse_graph_expression("hjoin(P4; K1, K1)"), std::invalid_argument);
}

TEST_CASE("to_expression parses back to the same graph") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = brute::random_graph(rng, brute::uniform(rng, 1, 8));
    CHECK(parse_graph_expression(to_expression(g)) == g);
  }
  CHECK(to_expression(complete(1)) == "K1");
  CHECK(parse_graph_expression(to_expression(complete(4))) == complete(4));
  CHECK(parse_graph_expression(to_expression(empty(3))) == empty(3));
}
