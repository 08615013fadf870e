#include <doctest.h>

#include <random>
#include <vector>

#include "eccspec/families.hpp"
#include "eccspec/operators.hpp"
#include "support/brute.hpp"

using namespace eccspec;

namespace {

JoinScheme scheme(Graph host, std::vector<Graph> factors) {
  return JoinScheme(std::move(host), std::move(factors));
}

}  // namespace

TEST_CASE("h_join examples") {
  CHECK(h_join(scheme(star(2), {complete(1), complete(1), complete(1)})) == star(2));
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b)
      CHECK(h_join(scheme(path(4), {empty(a), complete(1), complete(1), empty(b)})) ==
            double_star(a, b));
  const Graph w = h_join(scheme(star(2), {complete(1), complete(2), complete(2)}));
  CHECK(w.order() == 5);
  CHECK(w.size() == 6);
  CHECK(w == windmill(2, 2));
  CHECK(h_join(scheme(path(4), {complete(2), complete(1), complete(1), complete(2)})) ==
        barbell(3));
}

TEST_CASE("join scheme validation") {
  CHECK_THROWS_AS(scheme(complete(1), {complete(1)}), std::invalid_argument);
  CHECK_THROWS_AS(scheme(path(3), {complete(1), complete(1)}), std::invalid_argument);
  CHECK_THROWS_AS(scheme(empty(2), {complete(1), complete(1)}), DisconnectedGraphError);

  const JoinScheme s = scheme(path(3), {complete(2), empty(3), complete(1)});
  CHECK(s.offset(0) == 0);
  CHECK(s.offset(1) == 2);
  CHECK(s.offset(2) == 5);
  CHECK(s.total_order() == 6);
  CHECK(s.sizes() == std::vector<std::size_t>{2, 3, 1});
}

TEST_CASE("lexicographic product") {
  const Graph g = cycle(4);
  CHECK(lexicographic(complete(2), g) == join(g, g));
  const Graph c6k2 = lexicographic(cycle(6), complete(2));
  CHECK(c6k2.order() == 12);
  CHECK(c6k2.size() == 6 * 1 + 6 * 4);
  CHECK(lexicographic(petersen(), complete(1)) == petersen());
}

TEST_CASE("join") {
  CHECK(join(complete(1), cycle(4)) == wheel(4));
  const std::vector<std::size_t> parts{2, 3};
  CHECK(join(empty(2), empty(3)) == multipartite(parts));
  for (std::size_t m = 1; m <= 5; ++m) CHECK(join(complete(1), empty(m)) == star(m));
}

TEST_CASE("generalized corona") {
  const Graph p = generalized_corona(complete(2), {complete(1), complete(1)});
  CHECK(p.order() == 4);
  // Pendants 2, 3 hang off host vertices 0, 1: the path 2-0-1-3.
  const std::vector<std::size_t> order{2, 0, 1, 3};
  CHECK(p.induced(order) == path(4));

  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::vector<Graph> f(k, path(n));
      CHECK(generalized_corona(complete(k), f).order() == k * (1 + n));
    }

  const Graph net = generalized_corona(complete(3), {complete(1), complete(1), complete(1)});
  CHECK(net.order() == 6);
  CHECK(net.size() == 6);
  for (Vertex v = 0; v < 3; ++v) CHECK(net.degree(v) == 3);
  for (Vertex v = 3; v < 6; ++v) CHECK(net.degree(v) == 1);

  CHECK_THROWS_AS(generalized_corona(complete(3), {complete(1)}), std::invalid_argument);
}

TEST_CASE("coalescence") {
  for (std::size_t a = 3; a <= 6; ++a)
    for (std::size_t b = 3; b <= 6; ++b) {
      const Graph g = coalescence(complete(a), 0, complete(b), 0);
      CHECK(g.order() == a + b - 1);
      const Graph h = h_join(scheme(path(3).induced(std::vector<std::size_t>{1, 0, 2}),
                                    {complete(1), complete(a - 1), complete(b - 1)}));
      CHECK(brute::signature(g) == brute::signature(h));
    }

  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 2; t <= 4; ++t) {
      Graph g = complete(n + 1);
      for (std::size_t i = 1; i < t; ++i) g = coalescence(g, 0, complete(n + 1), 0);
      CHECK(brute::signature(g) == brute::signature(windmill(n, t)));
    }

  CHECK_THROWS_AS(coalescence(complete(3), 3, complete(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(coalescence(complete(3), 0, complete(2), 5), std::invalid_argument);
}

TEST_CASE("h_join counts, connectivity and trivial factors") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = brute::uniform(rng, 2, 6);
    const Graph host = brute::random_connected(rng, k);
    std::vector<Graph> factors;
    for (std::size_t i = 0; i < k; ++i)
      factors.push_back(brute::random_graph(rng, brute::uniform(rng, 1, 5)));
    const Graph g = h_join(scheme(host, factors));

    std::size_t order = 0, size = 0;
    for (const auto& f : factors) {
      order += f.order();
      size += f.size();
    }
    for (const auto& [i, j] : host.edges()) size += factors[i].order() * factors[j].order();
    CHECK(g.order() == order);
    CHECK(g.size() == size);
    CHECK(is_connected(g));

    CHECK(h_join(scheme(host, std::vector<Graph>(k, complete(1)))) == host);
  }
}
