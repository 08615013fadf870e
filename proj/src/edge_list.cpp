#include "eccspec/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eccspec/expression.hpp"

namespace eccspec {

namespace {

// Next non-empty line with comments stripped; false at end of stream.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw ParseError("edge list line " + std::to_string(line_no) + ": " + what, 0);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError("edge list: missing header", 0);
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 1 || m < 0)
      bad_line(line_no, "header must be \"n m\" with n >= 1, m >= 0");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(in, line, line_no))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                           std::to_string(e),
                       0);
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0)
      bad_line(line_no, "expected two non-negative vertex indices");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(in, line, line_no)) bad_line(line_no, "more edges than declared in the header");
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace eccspec
