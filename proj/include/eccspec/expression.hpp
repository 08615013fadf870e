#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eccspec/graph.hpp"

namespace eccspec {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses a graph composition expression.
//
//   expr  := op '(' args ')' | leaf
//   join(A, B)            lex(H, G)
//   hjoin(H; G1, ..., Gk) corona(H; G1, ..., Gk)
//   coalesce(A@v, B@w)    union(A, B)
//   leaf  := NAME INT*    e.g. P4, C6, K5, Kbar3, "K 2 3" (multipartite),
//                         "S 2 3" (double star), Star 4, B 3 (barbell),
//                         Wheel 5, Windmill 2 3, Sn3 5, Petersen,
//                         "G 3 0 1 1 2" (3 vertices, edges 01 and 12),
//                         or any family name followed by its parameters.
//
// Throws ParseError on malformed input and std::invalid_argument when a
// family or operator rejects its parameters.
Graph parse_graph_expression(std::string_view text);

// An expression that parses back to g with the same vertex order: "K1",
// "K n", "Kbar n", or the explicit "G n u v ..." form.
std::string to_expression(const Graph& g);

}  // namespace eccspec
