#include <doctest.h>

#include <random>
#include <vector>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/families.hpp"
#include "eccspec/operators.hpp"
#include "support/brute.hpp"

using namespace eccspec;

namespace {

// Complete, empty or random factor, picked uniformly.
Graph mixed_factor(std::mt19937_64& rng) {
  const std::size_t n = brute::uniform(rng, 1, 5);
  switch (rng() % 3) {
    case 0: return complete(n);
    case 1: return empty(n);
    default: return brute::random_graph(rng, n);
  }
}

JoinScheme random_scheme(std::mt19937_64& rng) {
  const std::size_t k = brute::uniform(rng, 2, 6);
  Graph host = brute::random_connected(rng, k, 0.25);
  std::vector<Graph> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(mixed_factor(rng));
  return JoinScheme(std::move(host), std::move(factors));
}

}  // namespace

TEST_CASE("definitional examples") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const EccMatrix e = ecc_matrix(complete(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(e(i, j) == (i == j ? 0 : 1));
  }
  CHECK(ecc_matrix(star(2)).entries() == IntMatrix{{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  // P4 relabelled so the ends come first: 0-2-3-1.
  const std::vector<Edge> e{{0, 2}, {2, 3}, {3, 1}};
  CHECK(ecc_matrix(path(4)).entries() ==
        IntMatrix{{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}});
  CHECK(ecc_matrix(build_graph(4, e)).entries() ==
        IntMatrix{{0, 3, 0, 2}, {3, 0, 2, 0}, {0, 2, 0, 0}, {2, 0, 0, 0}});
  CHECK_THROWS_AS(ecc_matrix(empty(3)), DisconnectedGraphError);
}

TEST_CASE("EccMatrix validation") {
  CHECK_THROWS_AS(EccMatrix(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(EccMatrix(IntMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(EccMatrix(IntMatrix{{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(EccMatrix(IntMatrix(2, 3)), std::invalid_argument);
  CHECK_NOTHROW(EccMatrix(IntMatrix{{0, 2}, {2, 0}}));
}

TEST_CASE("factor partition") {
  const JoinScheme s(path(3), {complete(3), empty(2), path(3)});
  const FactorPartition p = factor_partition(s);
  REQUIRE(p.size() == 3);
  CHECK(p[0].dominating == std::vector<Vertex>{0, 1, 2});
  CHECK(p[0].other.empty());
  CHECK(p[1].dominating.empty());
  CHECK(p[1].other == std::vector<Vertex>{0, 1});
  CHECK(p[2].dominating == std::vector<Vertex>{1});
  CHECK(p[2].other == std::vector<Vertex>{0, 2});
}

TEST_CASE("block construction examples") {
  // Every host vertex of C6 has eccentricity 3: blocks are a_ij J, diagonals zero.
  const JoinScheme c6(cycle(6), {empty(2), complete(3), complete(1), path(3), empty(1), cycle(4)});
  const HJoinEccMatrix hc = ecc_matrix_hjoin(c6);
  const EccMatrix host = ecc_matrix(cycle(6));
  const EccMatrix natural = hc.natural_order();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t x = 0; x < c6.factor_size(i); ++x)
        for (std::size_t y = 0; y < c6.factor_size(j); ++y)
          CHECK(natural(c6.offset(i) + x, c6.offset(j) + y) == (i == j ? 0 : host(i, j)));

  // P3 host: the end vertices have eccentricity 2, so an empty end factor
  // gets 2A(K2) on its diagonal.
  const JoinScheme p3(path(3), {empty(2), complete(1), complete(1)});
  const EccMatrix m = ecc_matrix_hjoin(p3).natural_order();
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 2);
  CHECK(m(0, 0) == 0);

  const JoinScheme b33(path(4), {complete(2), complete(1), complete(1), complete(2)});
  const HJoinEccMatrix hb = ecc_matrix_hjoin(b33);
  CHECK(hb.matrix == ecc_matrix(h_join(b33)).permuted(hb.order));
  CHECK(hb.natural_order() == ecc_matrix(barbell(3)));
}

TEST_CASE("block construction with two universal host vertices") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = brute::uniform(rng, 2, 4);
    std::vector<Graph> factors;
    for (std::size_t i = 0; i < k; ++i) factors.push_back(mixed_factor(rng));
    const JoinScheme s(complete(k), factors);
    CHECK(ecc_matrix_hjoin(s).natural_order() == ecc_matrix(h_join(s)));
  }
}

TEST_CASE("block construction agrees with the definition on random schemes") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const JoinScheme s = random_scheme(rng);
    const Graph g = h_join(s);
    const HJoinEccMatrix h = ecc_matrix_hjoin(s);
    REQUIRE(h.matrix == ecc_matrix(g).permuted(h.order));
    CHECK(h.natural_order().entries() == brute::ecc_matrix(g));
  }
}

TEST_CASE("eccentricities in a join dominate host eccentricities") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const JoinScheme s = random_scheme(rng);
    const MetricProfile ph = metric_profile(s.host());
    const MetricProfile pg = metric_profile(h_join(s));
    for (std::size_t i = 0; i < s.k(); ++i) {
      const Graph& f = s.factor(i);
      for (Vertex x = 0; x < f.order(); ++x) {
        const std::int64_t eg = pg.ecc[s.offset(i) + x];
        CHECK(ph.ecc[i] <= eg);
        if (ph.ecc[i] >= 2) CHECK(eg == ph.ecc[i]);
        if (ph.ecc[i] == 1) CHECK(eg == (f.degree(x) + 1 == f.order() ? 1 : 2));
      }
    }
  }
}

TEST_CASE("nonzero entries are distances at the smaller eccentricity") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = brute::random_connected(rng, brute::uniform(rng, 2, 12), 0.2);
    const MetricProfile p = metric_profile(g);
    const EccMatrix e = ecc_matrix(p);
    CHECK(e.entries() == brute::ecc_matrix(g));
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) {
        CHECK(e(u, v) <= p.diameter);
        if (e(u, v) != 0) {
          CHECK(e(u, v) == p.dist(u, v));
          CHECK(e(u, v) == std::min(p.ecc[u], p.ecc[v]));
        }
      }
  }
}
