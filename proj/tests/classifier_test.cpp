#include <doctest.h>

#include <numeric>

#include "leavitt/classifier.hpp"
#include "leavitt/error.hpp"
#include "leavitt/fixtures.hpp"
#include "random_graphs.hpp"

using namespace leavitt;

namespace {

void check_holds_is_backed(Graph const& g, SerreReport const& r) {
  K0Data k0 = k0_of_graph(g);
  MonoidElement const unit = unit_element(g);
  for (auto const& [v, k] : r.multipliers()) {
    CHECK(k >= 1);
    CHECK(class_in_k0(k0, MonoidElement::of(v)) == k0.scale(k, k0.unit_class));
    auto const& res = r.vertices[v];
    REQUIRE(res.certificate.has_value());
    CHECK(certificate_replays(g, MonoidElement::of(v), unit.scaled(k), *res.certificate));
  }
}

}  // namespace

TEST_CASE("serre: E2-minus holds with k = 1 at every vertex") {
  Graph g = fixtures::e2_minus();
  SerreReport r = serre_check(g);
  REQUIRE(r.status == SerreStatus::holds);
  auto m = r.multipliers();
  CHECK(m.size() == 3);
  for (auto const& [v, k] : m) CHECK(k == 1);
  for (auto const& res : r.vertices) {
    CHECK(res.stats.lhs_depth <= 10);
    CHECK(res.stats.rhs_depth <= 10);
  }
  check_holds_is_backed(g, r);
}

TEST_CASE("serre: roses hold with k = 1") {
  for (std::size_t n = 0; n <= 6; ++n) {
    Graph g = rose_graph(n);
    SerreReport r = serre_check(g);
    REQUIRE(r.status == SerreStatus::holds);
    CHECK(r.multipliers().at(0) == 1);
    check_holds_is_backed(g, r);
  }
}

TEST_CASE("serre: the stably-free example fails at z for lack of a K0 solution") {
  Graph g = fixtures::ex34_2();
  SerreReport r = serre_check(g);
  CHECK(r.status == SerreStatus::fails);
  CHECK(r.failing_vertex == g.id("z"));
  CHECK(r.failure == SerreFailure::no_k0_solution);
}

TEST_CASE("serre: the non-stably-free example fails") {
  SerreReport r = serre_check(fixtures::ex34_1());
  CHECK(r.status == SerreStatus::fails);
  CHECK(r.failure == SerreFailure::no_k0_solution);
}

TEST_CASE("serre: matrix graphs follow gcd(d, n - 1)") {
  CHECK(serre_check(matrix_graph(3, 4)).status == SerreStatus::fails);
  CHECK(serre_check(matrix_graph(2, 2)).status == SerreStatus::holds);
  CHECK(serre_check(matrix_graph(3, 3)).status == SerreStatus::holds);
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t n = 2; n <= 6; ++n) {
      Graph g = matrix_graph(d, n);
      SerreReport r = serre_check(g);
      bool const expected = std::gcd(d, n - 1) == 1;
      CHECK(r.status == (expected ? SerreStatus::holds : SerreStatus::fails));
      if (r.status == SerreStatus::holds) check_holds_is_backed(g, r);
    }
  }
}

TEST_CASE("serre: lowered budgets degrade to Unknown, not to a wrong verdict") {
  SerreReport r = serre_check(fixtures::e2_minus(), SearchBudget{1, 512, 1000});
  CHECK(r.status == SerreStatus::unknown);
  CHECK(r.budget.max_steps == 1);
}

TEST_CASE("purely infinite simple conditions") {
  CHECK(purely_infinite_simple_check(fixtures::e2()).purely_infinite_simple);
  CHECK(purely_infinite_simple_check(fixtures::e2_minus()).purely_infinite_simple);
  CHECK(purely_infinite_simple_check(fixtures::ex34_1()).purely_infinite_simple);

  Graph g = fixtures::ex34_2();
  PisReport p = purely_infinite_simple_check(g);
  CHECK_FALSE(p.purely_infinite_simple);
  REQUIRE(p.proper_ideal.has_value());
  CHECK(names_of(g, *p.proper_ideal) == std::vector<std::string>{"z"});

  PisReport r0 = purely_infinite_simple_check(rose_graph(0));
  CHECK_FALSE(r0.purely_infinite_simple);
  CHECK_FALSE(r0.has_cycle);

  PisReport r1 = purely_infinite_simple_check(rose_graph(1));
  CHECK_FALSE(r1.purely_infinite_simple);
  CHECK(r1.exitless_cycle.has_value());

  PisReport empty = purely_infinite_simple_check(Graph());
  CHECK_FALSE(empty.purely_infinite_simple);
  CHECK_FALSE(empty.has_vertices);
}

TEST_CASE("invariant basis number") {
  IbnReport a = ibn_check(fixtures::ex34_2());
  CHECK(a.status == IbnStatus::ibn);
  CHECK_FALSE(a.unit_order.has_value());

  Graph e2 = fixtures::e2();
  IbnReport b = ibn_check(e2);
  REQUIRE(b.status == IbnStatus::not_ibn);
  CHECK(b.n == 1u);
  CHECK(b.m == 2u);
  MonoidElement const unit = unit_element(e2);
  CHECK(certificate_replays(e2, unit.scaled(*b.n), unit.scaled(*b.m), *b.certificate));

  CHECK(ibn_check(rose_graph(1)).status == IbnStatus::ibn);
  IbnReport r4 = ibn_check(rose_graph(4));
  REQUIRE(r4.status == IbnStatus::not_ibn);
  CHECK(*r4.m - *r4.n == 3);
}

TEST_CASE("stably free") {
  CHECK_FALSE(stably_free_check(fixtures::ex34_1()));
  CHECK(stably_free_check(fixtures::ex34_2()));
  CHECK(stably_free_check(fixtures::e2()));
}

TEST_CASE("classification") {
  Classification r2 = classify(rose_graph(2));
  CHECK(r2.kind == ClassificationKind::serre_rose);
  CHECK(r2.n == 2);
  CHECK(algebra_label(r2, Dialect::lpa) == "L_2");
  CHECK(algebra_label(r2, Dialect::cstar) == "𝒪_2");
  CHECK_FALSE(r2.conjectural);

  Classification e = classify(fixtures::e2_minus());
  CHECK(e.kind == ClassificationKind::serre_pis);
  CHECK(e.n == 1);
  CHECK(e.conjectural);
  CHECK(algebra_label(e, Dialect::lpa) == "L_2");
  CHECK(algebra_label(e, Dialect::cstar) == "𝒪_2");

  CHECK(classify(fixtures::ex34_1()).kind == ClassificationKind::not_serre);
  CHECK(classify(rose_graph(0)).kind == ClassificationKind::serre_trivial_field);
  CHECK(classify(rose_graph(1)).kind == ClassificationKind::serre_laurent);
  CHECK(algebra_label(classify(rose_graph(1)), Dialect::lpa) == "k[x,x^-1]");
  CHECK(classify(fixtures::ex36()).kind == ClassificationKind::serre_pis);

  Classification m = classify(matrix_graph(2, 4));
  CHECK(m.kind == ClassificationKind::serre_pis);
  CHECK(m.n == 3);
  CHECK(algebra_label(m, Dialect::lpa) == "L_4");

  CHECK(classify(fixtures::e2_minus(), SearchBudget{1, 512, 1000}).kind == ClassificationKind::serre_unknown);
  CHECK_THROWS_AS(classify(Graph()), InvalidParameter);
}

TEST_CASE("Serre implies stably free and a trivial ideal lattice on small graphs") {
  SearchBudget const budget{12, 64, 5000};
  for (auto const& g : testgen::small_connected_graphs(3, 2)) {
    SerreReport r = serre_check(g, budget);
    if (r.status != SerreStatus::holds) continue;
    CHECK(stably_free_check(g));
    CHECK(hereditary_saturated_subsets(g).size() == 2);
    check_holds_is_backed(g, r);
  }
}

TEST_CASE("NotIBN witnesses replay") {
  testgen::Rng rng(testgen::kSeed + 30);
  for (int i = 0; i < 150; ++i) {
    Graph g = testgen::random_graph(rng, 4, 7);
    IbnReport r = ibn_check(g, SearchBudget{12, 64, 5000}, 4);
    if (r.status != IbnStatus::not_ibn) continue;
    MonoidElement const unit = unit_element(g);
    CHECK(*r.m > *r.n);
    CHECK(certificate_replays(g, unit.scaled(*r.n), unit.scaled(*r.m), *r.certificate));
  }
}
