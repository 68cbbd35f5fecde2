#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "leavitt/error.hpp"
#include "leavitt/fixtures.hpp"
#include "leavitt/report.hpp"
#include "random_graphs.hpp"

using namespace leavitt;

namespace {

std::string parse_error_text(std::string_view text) {
  try {
    parse_graph_text(text);
  } catch (ParseError const& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graphs survive a JSON round trip") {
  testgen::Rng rng(testgen::kSeed + 60);
  for (int i = 0; i < 100; ++i) {
    Graph g = testgen::random_graph(rng, 5, 9);
    CHECK(parse_graph_text(graph_to_json(g).dump()) == g);
    CHECK(parse_graph_text(graph_to_json(g).dump(2)) == g);
  }
  for (auto const& name : fixtures::catalogue()) {
    if (name.find('<') != std::string::npos) continue;
    Graph g = *fixtures::by_name(name);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("edges may be omitted") {
  Graph g = parse_graph_text(R"({"vertices": ["s"]})");
  CHECK(g.vertex_count() == 1);
  CHECK(g.is_sink(0));
}

TEST_CASE("malformed JSON reports line and column") {
  std::string const text = "{\n  \"vertices\": [\"u\",]\n}";
  std::string const msg = parse_error_text(text);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
  CHECK(parse_error_text("").find("line 1") != std::string::npos);
}

TEST_CASE("schema errors name the field") {
  CHECK(parse_error_text("[]").find("graph") != std::string::npos);
  CHECK(parse_error_text(R"({"edges": []})").find("vertices") != std::string::npos);
  CHECK(parse_error_text(R"({"vertices": "u"})").find("vertices") != std::string::npos);
  CHECK(parse_error_text(R"({"vertices": ["u", 3]})").find("vertices[1]") != std::string::npos);
  CHECK(parse_error_text(R"({"vertices": ["u"], "edges": [["u", "u"], [1, "u"]]})").find("edges[1][0]") !=
        std::string::npos);
  CHECK(parse_error_text(R"({"vertices": ["u"], "edges": [["u"]]})").find("edges[0]") != std::string::npos);
  CHECK(parse_error_text(R"({"vertices": ["u"], "loops": 1})").find("loops") != std::string::npos);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices": ["u"], "edges": [["u", "x"]]})"), DanglingEdge);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices": ["u", "u"]})"), DuplicateVertex);
}

TEST_CASE("graph files") {
  auto path = std::filesystem::temp_directory_path() / "leavitt_report_test_graph.json";
  {
    std::ofstream out(path);
    out << graph_to_json(fixtures::ex36()).dump(2);
  }
  CHECK(load_graph_file(path) == fixtures::ex36());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_graph_file(path), ParseError);
}

TEST_CASE("big integers") {
  CHECK(big_to_json(BigInt(-42)) == json(-42));
  BigInt big = BigInt(1) << 70;
  CHECK(big_to_json(big) == json("1180591620717411303424"));
}

TEST_CASE("K0 report") {
  Graph g = fixtures::ex34_1();
  json j = k0_to_json(g, k0_of_graph(g));
  CHECK(j["free_rank"] == 1);
  CHECK(j["torsion"] == json::array());
  CHECK(j["unit"] == json::array({0}));
  CHECK(j["vertices"]["u"].is_array());

  json r = k0_to_json(rose_graph(5), k0_of_graph(rose_graph(5)));
  CHECK(r["torsion"] == json::array({4}));
  CHECK(r["unit"] == json::array({1}));
}

TEST_CASE("classification reports differ between dialects only in wording") {
  Graph g = fixtures::e2_minus();
  Classification c = classify(g);
  json lpa = classify_report(g, c, Dialect::lpa);
  json cstar = classify_report(g, c, Dialect::cstar);
  CHECK(lpa.begin().key() == "schema");
  CHECK(lpa["schema"] == kReportSchema);
  CHECK(lpa["dialect"] == "lpa");
  CHECK(cstar["dialect"] == "cstar");
  for (auto const& key : {"graph", "serre", "pis", "k0", "certificates", "budget"}) CHECK(lpa[key] == cstar[key]);
  CHECK(lpa["classification"]["label"] == "L_2");
  CHECK(cstar["classification"]["label"] == "𝒪_2");
  CHECK(lpa["serre"]["status"] == "holds");
  CHECK(lpa["serre"]["vertices"].size() == 3);
  CHECK(lpa["pis"]["purely_infinite_simple"] == true);
  CHECK(lpa["serre"]["vertices"][0]["certificate"]["common"].is_string());
}

TEST_CASE("verdict reports") {
  Graph g = fixtures::ex34_2();
  json eq = verdict_to_json(g, decide_equal(g, MonoidElement::of(g.id("v")), MonoidElement::of(g.id("z"))));
  CHECK(eq["verdict"] == "unequal");
  CHECK(eq["witness"]["kind"] == "k0_class");

  Graph e2 = fixtures::e2();
  json ok = verdict_to_json(e2, decide_equal(e2, MonoidElement::of(0), MonoidElement::of(0, 2)));
  CHECK(ok["verdict"] == "equal");
  CHECK(ok["certificate"]["common"] == "2u");
}
