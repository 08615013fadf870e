#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "eccspec/graph.hpp"

namespace eccspec {

// Edge-list text format: a header line "n m" followed by m lines "u v"
// (0-based). Blank lines and anything after '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace eccspec
