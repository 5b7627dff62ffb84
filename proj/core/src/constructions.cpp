#include "cliquecolor/constructions.hpp"

#include <utility>
#include <vector>

#include "cliquecolor/errors.hpp"

namespace cliquecolor {

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u) g.add_edge(v, u);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw contract_error("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph lex_product_cycle_clique(int a, int b) {
  if (a < 3) throw contract_error("cycle factor needs at least 3 blocks");
  if (b < 1) throw contract_error("clique factor needs at least 1 vertex");
  Graph g(a * b);
  auto id = [b](int block, int k) { return block * b + k; };
  for (int block = 0; block < a; ++block) {
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) g.add_edge(id(block, i), id(block, j));
    int next = (block + 1) % a;
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) g.add_edge(id(block, i), id(next, j));
  }
  return g;
}

Graph construct_bk8() {
  Graph g(15);
  auto id = [](int tri, int k) { return tri * 3 + k; };
  for (int tri = 0; tri < 5; ++tri) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g.add_edge(id(tri, i), id(tri, j));
    int next = (tri + 1) % 5;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.add_edge(id(tri, i), id(next, j));
  }
  return g;
}

Graph construct_o5() {
  Graph g(9);
  static const std::pair<int, int> edges[] = {
      {1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {2, 3}, {5, 4}, {6, 4}, {6, 5},
      {6, 7}, {7, 4}, {7, 5}, {4, 8}, {6, 8}, {5, 3}, {7, 3}, {0, 8}, {1, 8},
      {2, 8}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph moser_spindle() {
  Graph g(7);
  static const std::pair<int, int> edges[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3},
                                              {2, 3}, {0, 4}, {0, 5}, {4, 5},
                                              {4, 6}, {5, 6}, {3, 6}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

namespace {

// Splits a join argument "x:y" at the top-level colon, respecting nested
// join:/lex: forms which consume their own colons.
std::pair<std::string, std::string> split_join_args(const std::string& rest) {
  int pending = 0;  // colons the construction at the cursor still owns
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest.compare(i, 5, "join:") == 0) {
      pending += 2;
      i += 4;
      continue;
    }
    if (rest.compare(i, 4, "lex:") == 0) {
      pending += 2;
      i += 3;
      continue;
    }
    if (rest[i] == ':') {
      if (pending == 0) return {rest.substr(0, i), rest.substr(i + 1)};
      --pending;
    }
  }
  throw contract_error("join needs two ':'-separated constructions, got '" +
                       rest + "'");
}

int parse_count(const std::string& name, std::size_t from) {
  if (from >= name.size()) throw contract_error("missing size in '" + name + "'");
  int value = 0;
  for (std::size_t i = from; i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9')
      throw contract_error("malformed size in '" + name + "'");
    value = value * 10 + (c - '0');
    if (value > 100000) throw contract_error("size too large in '" + name + "'");
  }
  return value;
}

}  // namespace

Graph parse_construction(const std::string& name) {
  if (name == "o5") return construct_o5();
  if (name == "bk8") return construct_bk8();
  if (name == "moser") return moser_spindle();
  if (name.rfind("lex:", 0) == 0) {
    std::string rest = name.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw contract_error("lex needs two parameters, got '" + name + "'");
    int a = parse_count("lex a " + rest.substr(0, colon), 6);
    int b = parse_count("lex b " + rest.substr(colon + 1), 6);
    return lex_product_cycle_clique(a, b);
  }
  if (name.rfind("join:", 0) == 0) {
    auto [left, right] = split_join_args(name.substr(5));
    return join(parse_construction(left), parse_construction(right));
  }
  if (!name.empty() && (name[0] == 'k' || name[0] == 'c' || name[0] == 'e' ||
                        name[0] == 'p')) {
    int n = parse_count(name, 1);
    switch (name[0]) {
      case 'k': return complete_graph(n);
      case 'c': return cycle_graph(n);
      case 'e': return edgeless_graph(n);
      case 'p': return path_graph(n);
    }
  }
  throw contract_error("unknown construction '" + name + "'");
}

}  // namespace cliquecolor
