#include "leavitt/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

std::map<VertexId, BigInt> SerreReport::multipliers() const {
  std::map<VertexId, BigInt> out;
  for (auto const& v : vertices) {
    if (v.status == VertexSerreStatus::holds && v.multiplier) out.emplace(v.vertex, *v.multiplier);
  }
  return out;
}

namespace {

void search_multiplier(Graph const& g, K0Data const& k0, MonoidElement const& unit,
                       MultiplierSet const& solutions, SearchBudget const& budget,
                       VertexSerreResult& res) {
  MonoidElement const v = MonoidElement::of(res.vertex);
  std::optional<BigInt> max_k;
  if (solutions.step == 0) max_k = solutions.base;
  BigInt k = *solutions.first_at_least(1);
  bool exhausted_range = false;
  for (std::size_t tried = 0;; ++tried) {
    if (max_k && k > *max_k) {
      exhausted_range = true;
      break;
    }
    if (tried == kMaxSerreCandidates) break;
    Verdict verdict = decide_equal(g, k0, v, unit.scaled(k), budget);
    res.candidates.push_back({k, verdict.kind});
    res.stats = verdict.stats;
    if (verdict.is_equal()) {
      res.status = VertexSerreStatus::holds;
      res.multiplier = k;
      res.certificate = std::move(verdict.certificate);
      return;
    }
    // Any common descendant of v and k * 1_E weighs at least k * |E0|.
    if (verdict.stats.lhs_closure_finite) {
      BigInt bound = BigInt(verdict.stats.lhs_max_weight) / g.vertex_count();
      if (!max_k || bound < *max_k) max_k = bound;
    }
    if (solutions.step == 0) {
      exhausted_range = true;
      break;
    }
    k += solutions.step;
  }
  res.candidates_complete = exhausted_range;
  bool open = std::any_of(res.candidates.begin(), res.candidates.end(), [&](auto const& c) {
    return c.verdict == VerdictKind::unknown && (!max_k || c.multiplier <= *max_k);
  });
  res.status = exhausted_range && !open ? VertexSerreStatus::monoid_refuted : VertexSerreStatus::unknown;
}

}  // namespace

SerreReport serre_check(Graph const& g, SearchBudget const& budget) {
  budget.validate();
  SerreReport report;
  report.budget = budget;
  K0Data const k0 = k0_of_graph(g);
  MonoidElement const unit = unit_element(g);

  std::vector<std::optional<MultiplierSet>> solutions;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    report.vertices.emplace_back();
    report.vertices.back().vertex = v;
    auto sol = solve_multiplier(k0, k0.vertex_classes[v], k0.unit_class);
    if (sol && !sol->first_at_least(1)) sol.reset();
    if (!sol) {
      report.vertices[v].status = VertexSerreStatus::no_k0_solution;
      report.vertices[v].candidates_complete = true;
      if (!report.failing_vertex) {
        report.status = SerreStatus::fails;
        report.failing_vertex = v;
        report.failure = SerreFailure::no_k0_solution;
      }
    }
    solutions.push_back(sol);
  }
  if (report.status == SerreStatus::fails) return report;

  bool all_hold = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& res = report.vertices[v];
    search_multiplier(g, k0, unit, *solutions[v], budget, res);
    if (res.status == VertexSerreStatus::monoid_refuted) {
      report.status = SerreStatus::fails;
      report.failing_vertex = v;
      report.failure = SerreFailure::monoid_refuted;
      return report;
    }
    all_hold = all_hold && res.status == VertexSerreStatus::holds;
  }
  report.status = all_hold ? SerreStatus::holds : SerreStatus::unknown;
  return report;
}

PisReport purely_infinite_simple_check(Graph const& g) {
  PisReport r;
  r.has_vertices = g.vertex_count() > 0;
  if (!r.has_vertices) r.reasons.emplace_back("the graph has no vertices");

  VertexSet const all = VertexSet::all(g.vertex_count());
  for (auto const& h : hereditary_saturated_subsets(g)) {
    if (!h.empty() && h != all) {
      r.proper_ideal = h;
      std::string names;
      for (auto const& n : names_of(g, h)) names += (names.empty() ? "" : ", ") + n;
      r.reasons.push_back("nontrivial hereditary saturated subset {" + names + "}");
      break;
    }
  }
  r.exitless_cycle = exitless_cycle(g);
  if (r.exitless_cycle) {
    std::string names;
    for (VertexId v : r.exitless_cycle->vertices(g)) names += (names.empty() ? "" : " -> ") + g.name(v);
    r.reasons.push_back("cycle without exit through " + names);
  }
  r.has_cycle = has_cycle(g);
  if (!r.has_cycle) r.reasons.emplace_back("the graph has no cycle");
  r.purely_infinite_simple = r.reasons.empty();
  return r;
}

IbnReport ibn_check(Graph const& g, SearchBudget const& budget, std::size_t max_n) {
  budget.validate();
  IbnReport r;
  K0Data const k0 = k0_of_graph(g);
  r.unit_order = k0.order(k0.unit_class);
  if (!r.unit_order) {
    r.status = IbnStatus::ibn;
    return r;
  }
  MonoidElement const unit = unit_element(g);
  std::size_t const t = static_cast<std::size_t>(*r.unit_order);
  for (std::size_t n = 1; n <= max_n; ++n) {
    r.tested_up_to = n;
    Verdict verdict = decide_equal(g, k0, unit.scaled(n), unit.scaled(n + t), budget);
    if (verdict.is_equal()) {
      r.status = IbnStatus::not_ibn;
      r.n = n;
      r.m = n + t;
      r.certificate = std::move(verdict.certificate);
      return r;
    }
  }
  return r;
}

bool stably_free_check(Graph const& g) { return unit_generates_k0(g).generates; }

namespace {

std::string evidence(Graph const& g, Classification const& c) {
  std::ostringstream out;
  out << "vertices:";
  for (auto const& n : g.vertex_names()) out << ' ' << n;
  out << "\nedges:";
  for (auto const& e : g.edges()) out << ' ' << g.name(e.source) << "->" << g.name(e.range);
  out << "\nserre multipliers:";
  for (auto const& [v, k] : c.serre.multipliers()) out << ' ' << g.name(v) << '=' << k;
  out << "\npis reasons:";
  if (c.pis) {
    for (auto const& reason : c.pis->reasons) out << "\n  " << reason;
  }
  out << "\nk0 free rank " << c.k0.free_rank << ", torsion";
  for (auto const& d : c.k0.torsion_divisors) out << ' ' << d;
  out << ", unit";
  for (auto const& x : c.k0.unit_class) out << ' ' << x;
  out << '\n';
  return out.str();
}

}  // namespace

Classification classify(Graph const& g, SearchBudget const& budget) {
  if (g.vertex_count() == 0) throw InvalidParameter("cannot classify a graph without vertices");
  return classify(g, serre_check(g, budget));
}

Classification classify(Graph const& g, SerreReport serre) {
  if (g.vertex_count() == 0) throw InvalidParameter("cannot classify a graph without vertices");
  Classification c;
  c.serre = std::move(serre);
  c.k0 = k0_of_graph(g);
  switch (c.serre.status) {
    case SerreStatus::fails:
      c.kind = ClassificationKind::not_serre;
      return c;
    case SerreStatus::unknown:
      c.kind = ClassificationKind::serre_unknown;
      return c;
    case SerreStatus::holds:
      break;
  }
  if (g.vertex_count() == 1) {
    c.n = g.edge_count();
    c.kind = c.n == 0   ? ClassificationKind::serre_trivial_field
             : c.n == 1 ? ClassificationKind::serre_laurent
                        : ClassificationKind::serre_rose;
    return c;
  }
  c.pis = purely_infinite_simple_check(g);
  if (!c.pis->purely_infinite_simple) {
    throw TheoremViolation("Serre property holds but the graph is not purely infinite simple",
                           evidence(g, c));
  }
  if (!is_finite_cyclic_with_unit_generator(c.k0)) {
    throw TheoremViolation("Serre property holds but K0 is not (Z/nZ, 1)", evidence(g, c));
  }
  c.kind = ClassificationKind::serre_pis;
  c.n = c.k0.torsion_divisors.empty() ? 1 : static_cast<std::size_t>(c.k0.torsion_divisors.front());
  c.conjectural = true;
  return c;
}

std::string algebra_label(Classification const& c, Dialect dialect) {
  bool const lpa = dialect == Dialect::lpa;
  switch (c.kind) {
    case ClassificationKind::serre_trivial_field: return lpa ? "k" : "ℂ";
    case ClassificationKind::serre_laurent: return lpa ? "k[x,x^-1]" : "C(𝕋)";
    case ClassificationKind::serre_rose: return (lpa ? "L_" : "𝒪_") + std::to_string(c.n);
    case ClassificationKind::serre_pis: return (lpa ? "L_" : "𝒪_") + std::to_string(c.n + 1);
    case ClassificationKind::not_serre:
    case ClassificationKind::serre_unknown: return "";
  }
  return "";
}

char const* to_string(SerreStatus s) {
  switch (s) {
    case SerreStatus::holds: return "holds";
    case SerreStatus::fails: return "fails";
    case SerreStatus::unknown: return "unknown";
  }
  return "?";
}

char const* to_string(SerreFailure f) {
  switch (f) {
    case SerreFailure::no_k0_solution: return "no_k0_solution";
    case SerreFailure::monoid_refuted: return "monoid_refuted";
  }
  return "?";
}

char const* to_string(VertexSerreStatus s) {
  switch (s) {
    case VertexSerreStatus::holds: return "holds";
    case VertexSerreStatus::no_k0_solution: return "no_k0_solution";
    case VertexSerreStatus::monoid_refuted: return "monoid_refuted";
    case VertexSerreStatus::unknown: return "unknown";
    case VertexSerreStatus::not_checked: return "not_checked";
  }
  return "?";
}

char const* to_string(IbnStatus s) {
  switch (s) {
    case IbnStatus::ibn: return "ibn";
    case IbnStatus::not_ibn: return "not_ibn";
    case IbnStatus::unknown: return "unknown";
  }
  return "?";
}

char const* to_string(ClassificationKind k) {
  switch (k) {
    case ClassificationKind::not_serre: return "not_serre";
    case ClassificationKind::serre_trivial_field: return "serre_trivial_field";
    case ClassificationKind::serre_laurent: return "serre_laurent";
    case ClassificationKind::serre_rose: return "serre_rose";
    case ClassificationKind::serre_pis: return "serre_pis";
    case ClassificationKind::serre_unknown: return "serre_unknown";
  }
  return "?";
}

char const* to_string(Dialect d) { return d == Dialect::lpa ? "lpa" : "cstar"; }

}  // namespace leavitt
