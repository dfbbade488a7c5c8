#include "unigraph/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace unigraph::catalog {

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int m, int n) {
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) g.add_edge(u, m + v);
  }
  return g;
}

Graph chair() { return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}}); }

Graph kite() { return complement(chair()); }

Graph four_pan() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

Graph co_four_pan() { return complement(four_pan()); }

Graph r_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {4, 5}});
}

Graph r_bar() { return complement(r_graph()); }

Graph s_graph() {
  return Graph(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

Graph s_bar() { return complement(s_graph()); }

Graph u_graph(int s) {
  if (s < 1) throw std::invalid_argument("U_s needs s >= 1");
  Graph g(4 + 2 * s);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  for (int i = 0; i < s; ++i) {
    const Vertex a = 4 + 2 * i;
    g.add_edge(0, a);
    g.add_edge(0, a + 1);
    g.add_edge(a, a + 1);
  }
  return g;
}

Graph spider_net(int k) {
  if (k < 2) throw std::invalid_argument("a spider needs at least 2 feet");
  Graph g(2 * k);
  for (Vertex i = 0; i < k; ++i) {
    g.add_edge(i, k + i);
    for (Vertex j = i + 1; j < k; ++j) g.add_edge(k + i, k + j);
  }
  return g;
}

Graph co_net(int k) { return complement(spider_net(k)); }

Graph two_p3() { return disjoint_union(path(3), path(3)); }
Graph co_two_p3() { return complement(two_p3()); }
Graph k2_plus_k3() { return disjoint_union(complete(2), complete(3)); }
Graph k2_plus_p4() { return disjoint_union(complete(2), path(4)); }
Graph co_k2_plus_p4() { return complement(k2_plus_p4()); }
Graph k2_plus_c4() { return disjoint_union(complete(2), cycle(4)); }
Graph co_k2_plus_c4() { return complement(k2_plus_c4()); }
Graph k23() { return complete_bipartite(2, 3); }
Graph p5() { return path(5); }
Graph co_p5() { return complement(p5()); }

Graph matching(int r) {
  Graph g(2 * r);
  for (Vertex i = 0; i < r; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph star_plus_matching(int r, int s) {
  return disjoint_union(complete_bipartite(1, r), matching(s));
}

namespace {

std::vector<int> parse_args(std::string_view text, std::string_view& base) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    base = text;
    return {};
  }
  if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in graph name");
  base = text.substr(0, open);
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<int> args;
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    const std::string_view tok = inner.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
      throw std::invalid_argument("bad parameter in graph name");
    }
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return args;
}

void expect_args(const std::vector<int>& args, std::size_t count, std::string_view name) {
  if (args.size() != count) {
    throw std::invalid_argument(std::string(name) + " expects " + std::to_string(count) +
                                " parameter(s)");
  }
}

}  // namespace

Graph by_name(std::string_view text) {
  std::string_view base;
  const auto args = parse_args(text, base);
  struct Fixed {
    std::string_view name;
    Graph (*make)();
  };
  static const Fixed fixed[] = {
      {"chair", chair},           {"kite", kite},
      {"fourPan", four_pan},      {"coFourPan", co_four_pan},
      {"R", r_graph},             {"Rbar", r_bar},
      {"S", s_graph},             {"Sbar", s_bar},
      {"twoP3", two_p3},          {"coTwoP3", co_two_p3},
      {"K2plusK3", k2_plus_k3},   {"K2plusP4", k2_plus_p4},
      {"coK2plusP4", co_k2_plus_p4}, {"K2plusC4", k2_plus_c4},
      {"coK2plusC4", co_k2_plus_c4}, {"K23", k23},
      {"P5", p5},                 {"coP5", co_p5},
  };
  for (const Fixed& f : fixed) {
    if (base == f.name) {
      expect_args(args, 0, base);
      return f.make();
    }
  }
  if (base == "Kn") return expect_args(args, 1, base), complete(args[0]);
  if (base == "Cn") return expect_args(args, 1, base), cycle(args[0]);
  if (base == "Pn") return expect_args(args, 1, base), path(args[0]);
  if (base == "Kmn") return expect_args(args, 2, base), complete_bipartite(args[0], args[1]);
  if (base == "Us") return expect_args(args, 1, base), u_graph(args[0]);
  if (base == "net") return expect_args(args, 1, base), spider_net(args[0]);
  if (base == "coNet") return expect_args(args, 1, base), co_net(args[0]);
  if (base == "rK2") return expect_args(args, 1, base), matching(args[0]);
  if (base == "K1rSK2") return expect_args(args, 2, base), star_plus_matching(args[0], args[1]);
  throw std::invalid_argument("unknown graph name '" + std::string(text) + "'");
}

std::vector<std::string> names() {
  return {"Kn(n)",     "Cn(n)",      "Pn(n)",      "Kmn(m,n)",   "chair",      "kite",
          "fourPan",   "coFourPan",  "R",          "Rbar",       "S",          "Sbar",
          "Us(s)",     "net(k)",     "coNet(k)",   "twoP3",      "coTwoP3",    "K2plusK3",
          "K2plusP4",  "coK2plusP4", "K2plusC4",   "coK2plusC4", "K23",        "P5",
          "coP5",      "rK2(r)",     "K1rSK2(r,s)"};
}

std::vector<NamedPattern> threshold_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}, {"P4", path(4)}};
}

std::vector<NamedPattern> split_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}, {"C5", cycle(5)}};
}

std::vector<NamedPattern> pseudo_split_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}};
}

std::vector<NamedPattern> chair_free_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}, {"chair", chair()}};
}

std::vector<NamedPattern> kite_free_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}, {"kite", kite()}};
}

std::vector<NamedPattern> class_g_forbidden() {
  return {{"2K2", matching(2)}, {"C4", cycle(4)}, {"R", r_graph()}, {"Rbar", r_bar()}};
}

std::vector<NamedPattern> forcibly_class_g_forbidden() {
  auto out = class_g_forbidden();
  out.push_back({"S", s_graph()});
  out.push_back({"Sbar", s_bar()});
  return out;
}

std::vector<NamedPattern> hereditary_unigraph_forbidden() {
  return {
      {"P5", p5()},
      {"coP5", co_p5()},
      {"K2plusK3", k2_plus_k3()},
      {"K23", k23()},
      {"fourPan", four_pan()},
      {"coFourPan", co_four_pan()},
      {"twoP3", two_p3()},
      {"coTwoP3", co_two_p3()},
      {"K2plusP4", k2_plus_p4()},
      {"coK2plusP4", co_k2_plus_p4()},
      {"K2plusC4", k2_plus_c4()},
      {"coK2plusC4", co_k2_plus_c4()},
      {"R", r_graph()},
      {"Rbar", r_bar()},
      {"S", s_graph()},
      {"Sbar", s_bar()},
  };
}

}  // namespace unigraph::catalog
