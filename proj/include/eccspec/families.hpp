#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

// Named graph families with a fixed vertex order.
//
//   path(n)            P_n: 0-1-...-(n-1)
//   cycle(n)           C_n: i ~ i+1 mod n, n >= 3
//   complete(n)        K_n
//   empty(n)           complement of K_n
//   star(m)            K_{1,m}: centre 0, leaves 1..m
//   multipartite(ns)   K_{n_1,...,n_k}: parts occupy consecutive index ranges
//   double_star(a, b)  S_{a,b}: a leaves, centre a, centre a+1, b leaves
//                      (the block order of P4[Kbar_a, K1, K1, Kbar_b])
//   barbell(n)         B_{n,n}: n-1 clique vertices, bridge ends n-1 and n,
//                      n-1 clique vertices (block order of P4[K_{n-1},K1,K1,K_{n-1}])
//   windmill(n, t)     W_{n+1}^t: shared vertex 0, then t blocks of n clique vertices
//   wheel(n)           W_{n+1}: hub 0, rim cycle on 1..n, n >= 3
//   s_n3(n)            S_{n,3}: triangle 0,1,2 with pendants 3..n-1 on vertex 2, n >= 5
//   petersen()         outer cycle 0..4, spokes i-(i+5), inner pentagram
//   edges n u v ...    explicit graph on n vertices (dispatcher only)
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph star(std::size_t m);
Graph multipartite(std::span<const std::size_t> part_sizes);
Graph double_star(std::size_t a, std::size_t b);
Graph barbell(std::size_t n);
Graph windmill(std::size_t n, std::size_t t);
Graph wheel(std::size_t n);
Graph s_n3(std::size_t n);
Graph petersen();

// Dispatch by name ("path", "cycle", "complete", "empty", "star", "multipartite",
// "double_star", "barbell", "windmill", "wheel", "s_n3", "petersen", "edges").
// Throws std::invalid_argument on unknown names or bad parameters.
Graph family(std::string_view name, std::span<const std::int64_t> params);

std::vector<std::string> family_names();

}  // namespace eccspec
