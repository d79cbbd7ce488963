#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "yinyang/grid.hpp"
#include "yinyang/trvb.hpp"

using namespace yinyang;

namespace {

Multigraph parallel4() {
  Multigraph g;
  g.add_vertex("u");
  g.add_vertex("v");
  for (const char* e : {"a", "b", "c", "d"}) g.add_edge(e, "u", "v");
  return g;
}

Multigraph two_loops() {
  Multigraph g;
  g.add_vertex("x");
  g.add_edge("l1", "x", "x");
  g.add_edge("l2", "x", "x");
  return g;
}

// Independent tree check: union-find over edges, |E| = |V| - 1 and no cycle.
bool uf_tree(const Multigraph& g) {
  const int n = static_cast<int>(g.vertices().size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merges = 0;
  for (const Edge& e : g.edges()) {
    int a = find(g.vertex_index(e.u)), b = find(g.vertex_index(e.v));
    if (a == b) return false;
    parent[a] = b;
    ++merges;
  }
  return n == 0 ? g.edges().empty() : merges == n - 1;
}

std::vector<BreakSet> all_subsets_oracle(const Multigraph& g) {
  std::vector<BreakSet> out;
  const auto& vs = g.vertices();
  for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
    BreakSet s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) s.push_back(vs[i]);
    if (uf_tree(break_vertices(g, s))) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("break_vertices") {
  Multigraph star = break_vertices(parallel4(), {"u"});
  CHECK(star.vertices().size() == 5);
  CHECK(star.edges().size() == 4);
  CHECK(star.degree("v") == 4);
  CHECK(star.has_vertex("a:0"));
  CHECK_FALSE(star.has_vertex("u"));

  Multigraph split = break_vertices(two_loops(), {"x"});
  CHECK(split.vertices().size() == 4);
  CHECK(split.edges().size() == 2);
  CHECK_FALSE(is_single_tree(split));

  CHECK(break_vertices(parallel4(), {}) == parallel4());
  CHECK_THROWS_AS(break_vertices(parallel4(), {"zz"}), std::invalid_argument);
}

TEST_CASE("is_single_tree") {
  Multigraph star;
  star.add_vertex("c");
  for (int i = 0; i < 4; ++i) {
    star.add_vertex("l" + std::to_string(i));
    star.add_edge("e" + std::to_string(i), "c", "l" + std::to_string(i));
  }
  CHECK(is_single_tree(star));

  Multigraph two;
  for (const char* v : {"a", "b", "c", "d"}) two.add_vertex(v);
  two.add_edge("x", "a", "b");
  two.add_edge("y", "c", "d");
  CHECK_FALSE(is_single_tree(two));

  Multigraph cyc;
  cyc.add_vertex("a");
  cyc.add_vertex("b");
  cyc.add_edge("x", "a", "b");
  cyc.add_edge("y", "a", "b");
  CHECK_FALSE(is_single_tree(cyc));

  CHECK(is_single_tree(Multigraph{}));
}

TEST_CASE("degrees and regularity") {
  CHECK(is_four_regular(parallel4()));
  CHECK(is_four_regular(two_loops()));
  CHECK(two_loops().degree("x") == 4);
  CHECK_FALSE(is_four_regular(break_vertices(parallel4(), {"u"})));
}

TEST_CASE("solve_trvb on the small facts") {
  auto p = solve_trvb(parallel4());
  REQUIRE(p.size() == 2);
  CHECK(p[0] == BreakSet{"u"});
  CHECK(p[1] == BreakSet{"v"});
  CHECK(solve_trvb(two_loops()).empty());
  CHECK(p == all_subsets_oracle(parallel4()));
  CHECK(all_subsets_oracle(two_loops()).empty());
}

TEST_CASE("solve_trvb bound") {
  Multigraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex("v" + std::to_string(i));
  CHECK_THROWS_AS(solve_trvb(g, 2), std::invalid_argument);
}

TEST_CASE("corpus drawings parse, validate and match the subset oracle") {
  for (const char* name : {"two_vertex_parallel", "one_vertex_two_loops", "doubled_triangle", "five_vertex",
                           "blank", "blank_5x5"}) {
    INFO(name);
    DrawingFile f = parse_drawing(read_file(std::string(YINYANG_DATA_DIR) + "/drawings/" + name + ".drawing"));
    DrawingReport rep = validate_drawing(f.drawing, f.graph);
    CHECK(rep.valid);
    CHECK(solve_trvb(f.graph) == all_subsets_oracle(f.graph));
    CHECK(parse_drawing(serialize_drawing(f)).graph == f.graph);
  }
  DrawingFile five = parse_drawing(read_file(std::string(YINYANG_DATA_DIR) + "/drawings/five_vertex.drawing"));
  CHECK_FALSE(solve_trvb(five.graph).empty());
}

TEST_CASE("breaking is independent of set order") {
  DrawingFile f = parse_drawing(read_file(std::string(YINYANG_DATA_DIR) + "/drawings/five_vertex.drawing"));
  std::mt19937 rng(5);
  BreakSet s = f.graph.vertices();
  for (int i = 0; i < 10; ++i) {
    std::shuffle(s.begin(), s.end(), rng);
    BreakSet prefix(s.begin(), s.begin() + 1 + i % static_cast<int>(s.size()));
    BreakSet sorted;
    for (const auto& v : f.graph.vertices())
      if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) sorted.push_back(v);
    Multigraph a = break_vertices(f.graph, prefix), b = break_vertices(f.graph, sorted);
    CHECK(a.edges().size() == b.edges().size());
    CHECK(a.vertices().size() == b.vertices().size());
    CHECK(is_single_tree(a) == is_single_tree(b));
  }
}

TEST_CASE("validate_drawing flags crossings and missing routes") {
  const char* crossing =
      "dim 5 5\n"
      "v a 0 2\nv b 4 2\nv c 2 0\nv d 2 4\n"
      "e ab a b 0 2 4 2\n"
      "e cd c d 2 0 2 4\n";
  DrawingFile f = parse_drawing(crossing);
  DrawingReport r = validate_drawing(f.drawing, f.graph);
  CHECK_FALSE(r.valid);
  bool hit = false;
  for (const auto& v : r.violations) hit = hit || v.find("route intersection") != std::string::npos;
  CHECK(hit);

  DrawingFile g = parse_drawing(read_file(std::string(YINYANG_DATA_DIR) + "/drawings/two_vertex_parallel.drawing"));
  g.drawing.routes.erase(g.drawing.routes.begin());
  DrawingReport r2 = validate_drawing(g.drawing, g.graph);
  CHECK_FALSE(r2.valid);
  hit = false;
  for (const auto& v : r2.violations) hit = hit || v.find("unrouted edge") != std::string::npos;
  CHECK(hit);
}

TEST_CASE("drawing parse errors") {
  CHECK_THROWS_AS(parse_drawing("dim 3\n"), ParseError);
  CHECK_THROWS_AS(parse_drawing("dim 3 3\nq x\n"), ParseError);
}

TEST_CASE("route helpers") {
  auto pts = expand_route({{0, 0}, {2, 0}, {2, 1}});
  CHECK(pts.size() == 4);
  CHECK(pts.back() == Point{2, 1});
  CHECK(step_dir({0, 0}, {0, 3}) == Dir::South);
  CHECK(step_dir({2, 0}, {0, 0}) == Dir::West);
}
