#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/graph.hpp"

using namespace relipoly;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("edge list parsing keeps file order and first-appearance ids") {
  const Graph g = parse_edge_list("# comment\n\nS 1\n1 2\n  2 T  \n# another\nS 3\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.label(0) == "S");
  CHECK(g.label(3) == "T");
  CHECK(g.vertex("3") == 4);
  CHECK(g.edge(3).a == 0);
  CHECK(g.edge(3).b == 4);
  CHECK_FALSE(g.find_vertex("missing").has_value());
  CHECK_THROWS_AS(g.vertex("missing"), ConstraintError);
}

TEST_CASE("parsing the same text twice gives the same edges") {
  const std::string text = "a b\nb c\nc a\na b\n";
  const Graph g1 = parse_edge_list(text);
  const Graph g2 = parse_edge_list(text);
  REQUIRE(g1.edge_count() == g2.edge_count());
  for (int e = 0; e < g1.edge_count(); ++e) {
    CHECK(g1.edge(e).a == g2.edge(e).a);
    CHECK(g1.edge(e).b == g2.edge(e).b);
  }
  CHECK(format_edge_list(parse_edge_list(format_edge_list(g1))) == format_edge_list(g1));
}

TEST_CASE("parse errors carry the line number") {
  CHECK(parse_error_line("a b\nb\n") == 2);
  CHECK(parse_error_line("a b\nb c d\n") == 2);
  CHECK(parse_error_line("# x\na a\n") == 2);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.edges"), IoError);
}

TEST_CASE("parallel edges are kept") {
  const Graph g = parse_edge_list("a b\na b\n");
  CHECK(g.edge_count() == 2);
  CHECK(spanning_tree_count(g) == 2);
}

TEST_CASE("graph construction checks endpoints") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ConstraintError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), ConstraintError);
}

TEST_CASE("edge sets") {
  EdgeSet s{1, 70, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(70));
  CHECK(s.max_index() == 70);
  CHECK(s.indices() == std::vector<int>{1, 5, 70});
  CHECK(EdgeSet{1, 5}.is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(EdgeSet{1, 5}));
  CHECK((s - EdgeSet{5}) == EdgeSet{1, 70});
  CHECK((EdgeSet{1} | EdgeSet{2}) == EdgeSet{1, 2});
  CHECK((EdgeSet{1, 2} ^ EdgeSet{2, 3}) == EdgeSet{1, 3});
  CHECK(EdgeSet{9} < EdgeSet{0, 1});
  CHECK(EdgeSet::first(3) == EdgeSet{0, 1, 2});
}

TEST_CASE("components and connectivity") {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto c = components(g, g.all_edges());
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<int>{0, 1, 2});
  CHECK(c[1] == std::vector<int>{3, 4});
  CHECK(components(g, EdgeSet{}).size() == 5);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(grid_graph(3, 3)));
}

TEST_CASE("deleting edges renumbers densely") {
  const Graph g = grid_graph(2, 2);
  const Graph h = g.without_edges(EdgeSet{0, 2});
  CHECK(h.edge_count() == 2);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge(0).a == g.edge(1).a);
  CHECK(h.edge(0).b == g.edge(1).b);
}

TEST_CASE("grid and star generators") {
  const Graph g = grid_graph(4, 4);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 24);
  CHECK(g.edge(0).a == 0);
  CHECK(g.edge(0).b == 1);
  CHECK(g.edge(12).a == 0);
  CHECK(g.edge(12).b == 4);
  const Graph s = star_of_chains_graph(3, 2);
  CHECK(s.vertex_count() == 7);
  CHECK(s.edge_count() == 6);
  CHECK(spanning_tree_count(s) == 1);
}

TEST_CASE("fixture graphs") {
  const Graph grid = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/grid44.edges");
  CHECK(format_edge_list(grid) == format_edge_list(grid_graph(4, 4)));
  const Graph star = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/star_of_chains.edges");
  CHECK(format_edge_list(star) == format_edge_list(star_of_chains_graph(3, 2)));
  CHECK(read_edge_list_file(RELIPOLY_FIXTURE_DIR "/toy.edges").edge_count() == 9);
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 16);
  CHECK(spanning_tree_count(grid_graph(4, 4)) == 100352);
  CHECK(spanning_tree_count(Graph(3, {{0, 1}})) == 0);
  CHECK(spanning_tree_count(Graph(1, {})) == 1);
  // Cayley: n^(n-2) for K_n.
  for (int n = 2; n <= 9; ++n) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) e.push_back({a, b});
    BigInt expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    CHECK(spanning_tree_count(Graph(n, e)) == expect);
  }
}

TEST_CASE("spanning tree count agrees with subset counting") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int v = 2 + trial % 5;
    const Graph g = oracle::random_graph(rng, v, v + trial % 6);
    CHECK(spanning_tree_count(g) == oracle::rk(g, RuleSpec::all_terminal())[v - 1]);
  }
}
