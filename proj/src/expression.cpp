#include "eccspec/expression.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <vector>

#include "eccspec/families.hpp"
#include "eccspec/operators.hpp"

namespace eccspec {

namespace {

const std::map<std::string, std::string, std::less<>>& leaf_aliases() {
  static const std::map<std::string, std::string, std::less<>> aliases{
      {"P", "path"},        {"C", "cycle"},         {"Kbar", "empty"},     {"Star", "star"},
      {"S", "double_star"}, {"B", "barbell"},       {"Wheel", "wheel"},    {"Windmill", "windmill"},
      {"Sn3", "s_n3"},      {"Petersen", "petersen"}, {"G", "edges"},
  };
  return aliases;
}

bool is_digit_name(std::string_view word) {
  if (leaf_aliases().count(word)) return true;
  for (const auto& f : family_names())
    if (f == word) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a graph name or operator");
    // Names such as Sn3 end in digits; anything else keeps its digits as a parameter.
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end > pos_ && is_digit_name(text_.substr(start, end - start))) pos_ = end;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_integer() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t integer() {
    if (!at_integer()) fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Graph expr() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (peek('(')) {
      ++pos_;
      Graph g = call(name, start);
      expect(')');
      return g;
    }
    return leaf(name, start);
  }

  std::vector<Graph> list() {
    std::vector<Graph> out{expr()};
    while (peek(',')) {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  Vertex anchor() {
    expect('@');
    return static_cast<Vertex>(integer());
  }

  Graph call(const std::string& op, std::size_t start) {
    if (op == "join" || op == "lex" || op == "union") {
      Graph a = expr();
      expect(',');
      Graph b = expr();
      if (op == "join") return join(a, b);
      if (op == "lex") return lexicographic(a, b);
      return disjoint_union(a, b);
    }
    if (op == "hjoin" || op == "corona") {
      Graph h = expr();
      expect(';');
      std::vector<Graph> factors = list();
      if (op == "hjoin") return h_join(JoinScheme(std::move(h), std::move(factors)));
      return generalized_corona(h, factors);
    }
    if (op == "coalesce") {
      Graph a = expr();
      const Vertex v = anchor();
      expect(',');
      Graph b = expr();
      const Vertex w = anchor();
      return coalescence(a, v, b, w);
    }
    pos_ = start;
    fail("unknown operator '" + op + "'");
  }

  Graph leaf(const std::string& name, std::size_t start) {
    std::vector<std::int64_t> params;
    while (at_integer()) params.push_back(integer());
    try {
      if (name == "K") {
        if (params.size() <= 1) return family("complete", params);
        return family("multipartite", params);
      }
      if (auto it = leaf_aliases().find(name); it != leaf_aliases().end())
        return family(it->second, params);
      return family(name, params);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_expression(const Graph& g) {
  const std::string n = std::to_string(g.order());
  if (g.order() == 1) return "K1";
  if (is_complete(g)) return "K" + n;
  if (g.size() == 0) return "Kbar" + n;
  std::string out = "G " + n;
  for (const auto& [u, v] : g.edges()) out += " " + std::to_string(u) + " " + std::to_string(v);
  return out;
}

}  // namespace eccspec
