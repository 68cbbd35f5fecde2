// One line per acceptance criterion; the exit status is the number of
// failures.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "leavitt/classifier.hpp"
#include "leavitt/error.hpp"
#include "leavitt/fixtures.hpp"
#include "leavitt/report.hpp"
#include "leavitt/smith.hpp"
#include "leavitt/talented.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace leavitt;

namespace {

// Pinned limits.
constexpr std::size_t kMaxSerreDepth = 10;
constexpr std::size_t kMaxGradedSteps = 4;
constexpr std::size_t kRandomTrichotomyGraphs = 500;
constexpr std::size_t kSoundnessPairs = 1000;
constexpr std::size_t kSmithMatrices = 200;
constexpr std::size_t kSmithBruteForce = 50;
constexpr SearchBudget kTrichotomyBudget{12, 64, 5000};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, std::string const& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::size_t steps(GradedCertificate const& c) { return c.lhs.size() + c.rhs.size(); }

Outcome e2_minus_serre() {
  Outcome o;
  Graph g = fixtures::e2_minus();
  SerreReport r = serre_check(g);
  o.require(r.status == SerreStatus::holds, "status is not holds");
  o.require(r.vertices.size() == 3, "expected three vertices");
  for (auto const& vr : r.vertices) {
    std::string const name = g.name(vr.vertex);
    o.require(vr.multiplier == BigInt(1), name + ": k != 1");
    o.require(vr.certificate.has_value(), name + ": no certificate");
    if (!vr.certificate) continue;
    o.require(certificate_replays(g, MonoidElement::of(vr.vertex), unit_element(g), *vr.certificate),
              name + ": certificate does not replay");
    o.require(vr.certificate->lhs.size() <= kMaxSerreDepth && vr.certificate->rhs.size() <= kMaxSerreDepth,
              name + ": depth above 10");
  }
  return o;
}

Outcome monoid_collapse() {
  Outcome o;
  for (auto const& [name, g] : {std::pair{"e2", fixtures::e2()}, std::pair{"e2-minus", fixtures::e2_minus()}}) {
    MonoidEnumeration e = enumerate_monoid(g);
    o.require(e.complete, std::string(name) + ": enumeration incomplete");
    o.require(e.representatives.size() == 2,
              std::string(name) + ": " + std::to_string(e.representatives.size()) + " classes");
  }
  return o;
}

Outcome k0_table() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    K0Data k0 = k0_of_graph(rose_graph(n + 1));
    std::string const tag = "rose" + std::to_string(n + 1);
    o.require(k0.free_rank == 0, tag + ": nonzero free rank");
    if (n == 1) {
      o.require(k0.is_trivial(), tag + ": not trivial");
      continue;
    }
    o.require(k0.torsion_divisors == std::vector<BigInt>{BigInt(n)}, tag + ": wrong torsion");
    o.require(k0.unit_class == K0Class{1}, tag + ": unit is not 1");
  }
  K0Data a = k0_of_graph(fixtures::ex34_1());
  o.require(a.free_rank == 1 && a.torsion_divisors.empty(), "ex34-1: group is not Z");
  o.require(a.unit_class == K0Class{0}, "ex34-1: unit is not 0");
  K0Data b = k0_of_graph(fixtures::ex34_2());
  o.require(b.free_rank == 1 && b.torsion_divisors.empty(), "ex34-2: group is not Z");
  o.require(b.unit_class == K0Class{1}, "ex34-2: unit is not 1");
  return o;
}

Outcome gcd_criterion() {
  Outcome o;
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t n = 2; n <= 6; ++n) {
      std::string const tag = "matrix(" + std::to_string(d) + "," + std::to_string(n) + ")";
      SerreStatus s = serre_check(matrix_graph(d, n)).status;
      bool const expected = std::gcd(d, n - 1) == 1;
      o.require(s != SerreStatus::unknown, tag + ": unknown at default budget");
      o.require(s == (expected ? SerreStatus::holds : SerreStatus::fails), tag + ": contradicts gcd");
    }
  }
  return o;
}

Outcome stably_free_dichotomy() {
  Outcome o;
  Graph a = fixtures::ex34_1();
  Graph b = fixtures::ex34_2();
  o.require(!stably_free_check(a), "ex34-1 is stably free");
  o.require(stably_free_check(b), "ex34-2 is not stably free");
  o.require(ibn_check(b).status == IbnStatus::ibn, "ex34-2 is not IBN");
  o.require(purely_infinite_simple_check(a).purely_infinite_simple, "ex34-1 is not purely infinite simple");
  PisReport p = purely_infinite_simple_check(b);
  o.require(!p.purely_infinite_simple, "ex34-2 is purely infinite simple");
  o.require(p.proper_ideal && names_of(b, *p.proper_ideal) == std::vector<std::string>{"z"},
            "ex34-2 witness is not {z}");
  return o;
}

Outcome graded_example() {
  Outcome o;
  Graph g = fixtures::ex36();
  GradedSerreReport r = graded_serre_check(g, {}, ShiftWindow{-4, 4});
  o.require(r.status == GradedFreeStatus::holds, "status is not holds");
  auto check = [&](char const* name, Shift expected) {
    auto const& vr = r.vertices.at(g.id(name));
    o.require(vr.shifts == std::vector<Shift>{expected}, std::string(name) + ": wrong shifts");
    o.require(vr.certificate.has_value(), std::string(name) + ": no certificate");
    if (!vr.certificate) return;
    o.require(steps(*vr.certificate) <= kMaxGradedSteps, std::string(name) + ": more than 4 steps");
    o.require(graded_certificate_replays(g, GradedElement::of(vr.vertex), GradedElement::unit(g, expected),
                                         *vr.certificate),
              std::string(name) + ": certificate does not replay");
  };
  check("u", 1);
  check("v", 2);
  return o;
}

Outcome trichotomy() {
  Outcome o;
  std::vector<Graph> graphs = testgen::small_connected_graphs(3, 2);
  std::size_t const exhaustive = graphs.size();
  testgen::Rng rng(testgen::kSeed + 100);
  for (std::size_t i = 0; i < kRandomTrichotomyGraphs; ++i) graphs.push_back(testgen::random_graph(rng, 5, 8));
  std::size_t holds = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Graph const& g = graphs[i];
    std::string const tag = (i < exhaustive ? "exhaustive #" : "random #") + std::to_string(i);
    SerreReport r = serre_check(g, kTrichotomyBudget);
    try {
      classify(g, r);
    } catch (TheoremViolation const& e) {
      o.require(false, tag + ": " + e.what());
    }
    if (r.status != SerreStatus::holds) continue;
    ++holds;
    if (g.vertex_count() >= 2) {
      o.require(purely_infinite_simple_check(g).purely_infinite_simple, tag + ": holds but not PIS");
      o.require(is_finite_cyclic_with_unit_generator(k0_of_graph(g)), tag + ": holds but K0 not (Z/n, 1)");
    }
    o.require(hereditary_saturated_subsets(g).size() == 2, tag + ": holds with a nontrivial ideal");
  }
  o.require(holds > 0, "no Holds verdicts at all");
  if (o.pass) {
    o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(kRandomTrichotomyGraphs) +
               " random graphs, " + std::to_string(holds) + " hold";
  }
  return o;
}

std::vector<std::vector<BigInt>> rows_of(IntMatrix const& m) {
  std::vector<std::vector<BigInt>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

IntMatrix random_matrix(testgen::Rng& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

Outcome engine_soundness() {
  Outcome o;
  testgen::Rng rng(testgen::kSeed + 200);
  std::size_t equal = 0;
  for (std::size_t i = 0; i < kSoundnessPairs; ++i) {
    Graph g = testgen::random_graph(rng, 5, 8);
    K0Data k0 = k0_of_graph(g);
    MonoidElement a = testgen::random_element(rng, g, 5);
    for (auto const& b : one_step_rewrites(g, a))
      o.require(class_in_k0(k0, b) == class_in_k0(k0, a), "rewrite changed the K0 class");
    MonoidElement b = testgen::random_element(rng, g, 5);
    Verdict v = decide_equal(g, a, b, SearchBudget{12, 64, 5000});
    if (v.is_equal()) {
      ++equal;
      o.require(certificate_replays(g, a, b, *v.certificate), "certificate does not replay");
    }
  }

  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (std::size_t i = 0; i < kSmithMatrices; ++i) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
    SmithForm f = smith_normal_form(m);
    o.require(f.left * m * f.right == f.diagonal, "U M V != S");
    o.require(abs_big(oracle::leibniz_determinant(rows_of(f.left))) == 1, "U not unimodular");
    o.require(abs_big(oracle::leibniz_determinant(rows_of(f.right))) == 1, "V not unimodular");
    auto d = f.divisors();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) o.require(d[k + 1] % d[k] == 0, "divisor chain broken");
    o.require(d == oracle::determinantal_form(m).invariant_factors, "divisors differ from minors");
  }
  std::size_t brute = 0;
  while (brute < kSmithBruteForce) {
    IntMatrix m = random_matrix(rng, 3, 3);
    BigInt det = abs_big(determinant(m));
    if (det == 0 || det > 200) continue;
    std::vector<BigInt> torsion;
    for (auto const& x : smith_normal_form(m).divisors())
      if (x > 1) torsion.push_back(x);
    o.require(torsion == oracle::brute_force_cokernel(m), "3x3 cokernel differs from enumeration");
    ++brute;
  }
  if (o.pass) {
    o.detail = std::to_string(kSoundnessPairs) + " pairs (" + std::to_string(equal) + " equal), " +
               std::to_string(kSmithMatrices) + " SNFs, " + std::to_string(kSmithBruteForce) + " brute-force 3x3";
  }
  return o;
}

Outcome splice_fidelity() {
  Outcome o;
  o.require(same_labeled_graph(cuntz_splice(fixtures::e2(), "u"), fixtures::e2_minus()),
            "splice(e2, u) differs from e2-minus");
  return o;
}

Outcome cstar_dialect() {
  Outcome o;
  Graph g = fixtures::e2_minus();
  Classification c = classify(g);
  json lpa = classify_report(g, c, Dialect::lpa);
  json cstar = classify_report(g, c, Dialect::cstar);
  o.require(lpa["serre"] == cstar["serre"], "serre payloads differ");
  o.require(lpa["classification"]["kind"] == cstar["classification"]["kind"], "kinds differ");
  o.require(cstar["classification"]["label"] == "𝒪_2", "cstar label is not 𝒪_2");
  o.require(lpa["classification"]["label"] == "L_2", "lpa label is not L_2");
  o.require(serre_conclusion(c, Dialect::cstar).find("𝒪_2") != std::string::npos, "conclusion lacks 𝒪_2");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"E2-minus vertices equal 1_E", e2_minus_serre},
      {"monoid of E2 and E2-minus has two classes", monoid_collapse},
      {"K0 table", k0_table},
      {"matrix graphs follow the gcd criterion", gcd_criterion},
      {"stably free dichotomy", stably_free_dichotomy},
      {"graded example", graded_example},
      {"Serre trichotomy", trichotomy},
      {"engine soundness", engine_soundness},
      {"splice fidelity", splice_fidelity},
      {"C* dialect", cstar_dialect},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu: %s  %s", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name);
    if (!o.detail.empty()) std::printf(" (%s)", o.detail.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
