#include <doctest.h>

#include <algorithm>

#include "leavitt/error.hpp"
#include "leavitt/fixtures.hpp"
#include "leavitt/graph.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace leavitt;

namespace {

std::vector<std::vector<bool>> as_masks(std::vector<VertexSet> const& sets, std::size_t n) {
  std::vector<std::vector<bool>> out;
  for (auto const& s : sets) {
    std::vector<bool> m(n);
    for (VertexId v = 0; v < n; ++v) m[v] = s.contains(v);
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Graph({"u", "u"}, {}), DuplicateVertex);
  CHECK_THROWS_AS(Graph({"u"}, {{"u", "x"}}), DanglingEdge);
  CHECK_THROWS_AS(Graph({"u"}, {{"x", "u"}}), DanglingEdge);
  Graph g({"u", "v"}, {{"u", "v"}});
  CHECK_THROWS_AS(g.id("w"), UnknownVertex);
  CHECK_FALSE(g.find("w").has_value());
}

TEST_CASE("parallel edges keep distinct ids") {
  Graph g({"u", "v"}, {{"u", "v"}, {"u", "v"}, {"v", "v"}});
  CHECK(g.edge_count() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.out_degree(0) == 2);
  CHECK(g.adjacency_matrix() == std::vector<std::vector<std::size_t>>{{0, 2}, {0, 1}});
}

TEST_CASE("rose and matrix graph shapes") {
  for (std::size_t n = 0; n <= 6; ++n) {
    Graph r = rose_graph(n);
    CHECK(r.vertex_count() == 1);
    CHECK(r.edge_count() == n);
  }
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::size_t n = 2; n <= 5; ++n) {
      Graph m = matrix_graph(d, n);
      CHECK(m.vertex_count() == 2);
      CHECK(m.edge_count() == d - 1 + n);
    }
  }
  CHECK_THROWS_AS(matrix_graph(1, 3), InvalidParameter);
  CHECK_THROWS_AS(matrix_graph(3, 1), InvalidParameter);
}

TEST_CASE("rose(0) is a single sink") {
  Graph g = rose_graph(0);
  CHECK(g.is_sink(0));
  CHECK(sinks(g).size() == 1);
  CHECK(regular_vertices(g).empty());
}

TEST_CASE("cuntz splice of e2 at u is e2-minus") {
  Graph spliced = cuntz_splice(fixtures::e2(), "u");
  CHECK(same_labeled_graph(spliced, fixtures::e2_minus()));
  CHECK(spliced.vertex_count() == 3);
  CHECK(spliced.edge_count() == 8);
}

TEST_CASE("cuntz splice adds two vertices and six edges") {
  testgen::Rng rng(testgen::kSeed);
  std::size_t spliced = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = testgen::random_graph(rng, 4, 7);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!vertex_on_cycle(g, v)) {
        CHECK_THROWS_AS(cuntz_splice(g, g.name(v)), VertexNotOnCycle);
        continue;
      }
      Graph s = cuntz_splice(g, g.name(v));
      CHECK(s.vertex_count() == g.vertex_count() + 2);
      CHECK(s.edge_count() == g.edge_count() + 6);
      ++spliced;
    }
  }
  CHECK(spliced > 50);
}

TEST_CASE("cuntz splice takes explicit fresh names and rejects clashes") {
  Graph s = cuntz_splice(fixtures::e2(), "u", std::pair<std::string, std::string>{"x", "y"});
  CHECK(s.find("x").has_value());
  CHECK(s.find("y").has_value());
  CHECK_THROWS_AS(cuntz_splice(fixtures::e2(), "u", std::pair<std::string, std::string>{"u", "y"}),
                  DuplicateVertex);
  CHECK_THROWS_AS(cuntz_splice(fixtures::e2(), "q"), UnknownVertex);
  Graph taken({"u", "v"}, {{"u", "u"}, {"u", "v"}});
  Graph t = cuntz_splice(taken, "u");
  CHECK(t.find("w").has_value());
  CHECK(t.find("v1").has_value());
}

TEST_CASE("hereditary saturated subsets on the worked examples") {
  Graph e2 = fixtures::e2();
  CHECK(hereditary_saturated_subsets(e2) == std::vector<VertexSet>{VertexSet(1), VertexSet::all(1)});

  Graph g = fixtures::ex34_2();  // v, z
  auto subsets = hereditary_saturated_subsets(g);
  REQUIRE(subsets.size() == 3);
  CHECK(subsets[0].empty());
  CHECK(names_of(g, subsets[1]) == std::vector<std::string>{"z"});
  CHECK(subsets[2] == VertexSet::all(2));

  CHECK(hereditary_saturated_subsets(fixtures::e2_minus()).size() == 2);
}

TEST_CASE("hereditary saturated subsets agree with brute force") {
  for (auto const& g : testgen::small_connected_graphs(3, 1)) {
    auto found = hereditary_saturated_subsets(g);
    CHECK(as_masks(found, g.vertex_count()) == oracle::brute_force_hereditary_saturated(g));
    VertexSet const all = VertexSet::all(g.vertex_count());
    CHECK(std::find(found.begin(), found.end(), VertexSet(g.vertex_count())) != found.end());
    CHECK(std::find(found.begin(), found.end(), all) != found.end());
    for (auto const& a : found) {
      CHECK(is_hereditary(g, a));
      CHECK(is_saturated(g, a));
      for (auto const& b : found) CHECK(std::find(found.begin(), found.end(), a & b) != found.end());
    }
  }
}

TEST_CASE("subset search refuses oversized graphs") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= kMaxSubsetSearchVertices; ++i) names.push_back("v" + std::to_string(i));
  Graph g(names, {});
  CHECK_THROWS_AS(hereditary_saturated_subsets(g), GraphTooLarge);
}

TEST_CASE("cycles and exits") {
  Graph e2 = fixtures::e2();
  auto c = cycles(e2);
  REQUIRE(c.size() == 2);
  for (auto const& cycle : c) CHECK(cycle_has_exit(e2, cycle));
  CHECK_FALSE(exitless_cycle(e2).has_value());

  Graph r1 = rose_graph(1);
  REQUIRE(cycles(r1).size() == 1);
  CHECK_FALSE(cycle_has_exit(r1, cycles(r1)[0]));
  CHECK(exitless_cycle(r1).has_value());

  Graph g = fixtures::ex34_2();
  for (auto const& cycle : cycles(g)) {
    auto vs = cycle.vertices(g);
    if (vs == std::vector<VertexId>{g.id("v")}) CHECK(cycle_has_exit(g, cycle));
  }
  CHECK_FALSE(has_cycle(rose_graph(0)));
  CHECK(every_vertex_connects_to_cycle(fixtures::ex34_1()));
  CHECK_FALSE(every_vertex_connects_to_cycle(Graph({"u", "v"}, {{"u", "v"}})));
}

TEST_CASE("exitless_cycle agrees with enumerating all cycles") {
  for (auto const& g : testgen::small_connected_graphs(3, 2)) {
    auto all = cycles(g);
    bool any_exitless = std::any_of(all.begin(), all.end(), [&](auto const& c) { return !cycle_has_exit(g, c); });
    CHECK(exitless_cycle(g).has_value() == any_exitless);
    CHECK(has_cycle(g) == !all.empty());
  }
}

TEST_CASE("sinks and regular vertices partition the vertex set") {
  testgen::Rng rng(testgen::kSeed + 1);
  for (int i = 0; i < 100; ++i) {
    Graph g = testgen::random_graph(rng, 5, 8);
    VertexSet s = sinks(g);
    VertexSet r = regular_vertices(g);
    CHECK((s & r).empty());
    CHECK((s | r) == VertexSet::all(g.vertex_count()));
  }
}

TEST_CASE("labeled graph equality ignores edge order only") {
  Graph a({"u", "v"}, {{"u", "v"}, {"v", "u"}});
  Graph b({"u", "v"}, {{"v", "u"}, {"u", "v"}});
  Graph c({"v", "u"}, {{"v", "u"}, {"u", "v"}});
  CHECK(a == b);
  CHECK(same_labeled_graph(a, c));
  CHECK_FALSE(same_labeled_graph(a, Graph({"u", "v"}, {{"u", "v"}})));
}

TEST_CASE("fixture catalogue resolves") {
  for (auto const& name : {"e2", "e2-minus", "rose0", "rose1", "rose7", "matrix-3-4", "ex34-1", "ex34-2", "ex36"}) {
    CHECK(fixtures::by_name(name).has_value());
  }
  CHECK(*fixtures::by_name("rose7") == rose_graph(7));
  CHECK(*fixtures::by_name("matrix-3-4") == matrix_graph(3, 4));
  CHECK_FALSE(fixtures::by_name("nope").has_value());
  CHECK_THROWS_AS(fixtures::by_name("matrix-1-4"), InvalidParameter);
}
