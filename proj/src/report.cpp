#include "leavitt/report.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "leavitt/element_text.hpp"
#include "leavitt/error.hpp"

namespace leavitt {

json big_to_json(BigInt const& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return to_string(x);
}

json k0_class_to_json(K0Class const& c) {
  json out = json::array();
  for (auto const& x : c) out.push_back(big_to_json(x));
  return out;
}

json graph_to_json(Graph const& g) {
  json edges = json::array();
  for (auto const& e : g.edges()) edges.push_back({g.name(e.source), g.name(e.range)});
  return {{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(json const& j) {
  if (!j.is_object()) throw ParseError("graph: expected an object with \"vertices\" and \"edges\"");
  if (!j.contains("vertices")) throw ParseError("graph: missing field \"vertices\"");
  json const& vs = j.at("vertices");
  if (!vs.is_array()) throw ParseError("vertices: expected an array of names");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw ParseError("vertices[" + std::to_string(i) + "]: expected a string");
    vertices.push_back(vs[i].get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    json const& es = j.at("edges");
    if (!es.is_array()) throw ParseError("edges: expected an array of [source, range] pairs");
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::string const field = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) throw ParseError(field + ": expected [source, range]");
      if (!es[i][0].is_string()) throw ParseError(field + "[0]: expected a vertex name");
      if (!es[i][1].is_string()) throw ParseError(field + "[1]: expected a vertex name");
      edges.emplace_back(es[i][0].get<std::string>(), es[i][1].get<std::string>());
    }
  }
  for (auto const& [key, value] : j.items()) {
    if (key != "vertices" && key != "edges") throw ParseError("graph: unexpected field \"" + key + "\"");
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph parse_graph_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    std::size_t const byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
  return graph_from_json(j);
}

Graph load_graph_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_text(buf.str());
  } catch (Error const& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json k0_to_json(Graph const& g, K0Data const& k0) {
  json torsion = json::array();
  for (auto const& d : k0.torsion_divisors) torsion.push_back(big_to_json(d));
  json vertices = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices[g.name(v)] = k0_class_to_json(k0.vertex_classes[v]);
  return {{"free_rank", k0.free_rank},
          {"torsion", std::move(torsion)},
          {"unit", k0_class_to_json(k0.unit_class)},
          {"vertices", std::move(vertices)}};
}

json budget_to_json(SearchBudget const& b) {
  return {{"max_steps", b.max_steps}, {"max_element_size", b.max_element_size}, {"max_frontier", b.max_frontier}};
}

json stats_to_json(SearchStats const& s) {
  return {{"budget", budget_to_json(s.budget)},
          {"lhs_depth", s.lhs_depth},
          {"rhs_depth", s.rhs_depth},
          {"states", s.states},
          {"size_pruned", s.size_pruned},
          {"depth_limited", s.depth_limited},
          {"frontier_limited", s.frontier_limited},
          {"lhs_closure_finite", s.lhs_closure_finite},
          {"rhs_closure_finite", s.rhs_closure_finite}};
}

json certificate_to_json(Graph const& g, Certificate const& c) {
  auto side = [&](std::vector<RewriteStep> const& steps) {
    json out = json::array();
    for (auto const& s : steps) out.push_back({{"vertex", g.name(s.vertex)}, {"result", format_element(g, s.result)}});
    return out;
  };
  return {{"common", format_element(g, c.common)}, {"lhs", side(c.lhs)}, {"rhs", side(c.rhs)}};
}

json certificate_to_json(Graph const& g, GradedCertificate const& c) {
  auto side = [&](std::vector<GradedRewriteStep> const& steps) {
    json out = json::array();
    for (auto const& s : steps) {
      out.push_back({{"vertex", g.name(s.vertex)},
                     {"shift", s.shift},
                     {"result", format_graded_element(g, s.result)}});
    }
    return out;
  };
  return {{"common", format_graded_element(g, c.common)}, {"lhs", side(c.lhs)}, {"rhs", side(c.rhs)}};
}

namespace {

template <class Cert>
json basic_verdict_to_json(Graph const& g, BasicVerdict<Cert> const& v) {
  json out = {{"verdict", to_string(v.kind)}, {"certificate", nullptr}, {"witness", nullptr},
              {"stats", stats_to_json(v.stats)}};
  if (v.certificate) out["certificate"] = certificate_to_json(g, *v.certificate);
  if (v.witness) {
    out["witness"] = {{"kind", to_string(v.witness->kind)},
                      {"lhs", k0_class_to_json(v.witness->lhs)},
                      {"rhs", k0_class_to_json(v.witness->rhs)},
                      {"detail", v.witness->detail}};
  }
  return out;
}

json optional_name(Graph const& g, std::optional<VertexId> v) {
  return v ? json(g.name(*v)) : json(nullptr);
}

}  // namespace

json verdict_to_json(Graph const& g, Verdict const& v) { return basic_verdict_to_json(g, v); }
json verdict_to_json(Graph const& g, GradedVerdict const& v) { return basic_verdict_to_json(g, v); }

json serre_to_json(Graph const& g, SerreReport const& r) {
  json vertices = json::array();
  for (auto const& v : r.vertices) {
    json candidates = json::array();
    for (auto const& c : v.candidates) {
      candidates.push_back({{"k", big_to_json(c.multiplier)}, {"verdict", to_string(c.verdict)}});
    }
    vertices.push_back({{"vertex", g.name(v.vertex)},
                        {"status", to_string(v.status)},
                        {"multiplier", v.multiplier ? big_to_json(*v.multiplier) : json(nullptr)},
                        {"candidates", std::move(candidates)},
                        {"candidates_complete", v.candidates_complete},
                        {"stats", stats_to_json(v.stats)},
                        {"certificate", v.certificate ? certificate_to_json(g, *v.certificate) : json(nullptr)}});
  }
  return {{"status", to_string(r.status)},
          {"failing_vertex", optional_name(g, r.failing_vertex)},
          {"failure", r.failure ? json(to_string(*r.failure)) : json(nullptr)},
          {"budget", budget_to_json(r.budget)},
          {"vertices", std::move(vertices)}};
}

json pis_to_json(Graph const& g, PisReport const& r) {
  json cycle = nullptr;
  if (r.exitless_cycle) {
    cycle = json::array();
    for (VertexId v : r.exitless_cycle->vertices(g)) cycle.push_back(g.name(v));
  }
  return {{"purely_infinite_simple", r.purely_infinite_simple},
          {"proper_hereditary_saturated", r.proper_ideal ? json(names_of(g, *r.proper_ideal)) : json(nullptr)},
          {"exitless_cycle", std::move(cycle)},
          {"has_cycle", r.has_cycle},
          {"reasons", r.reasons}};
}

json ibn_to_json(Graph const& g, IbnReport const& r) {
  return {{"status", to_string(r.status)},
          {"unit_order", r.unit_order ? big_to_json(*r.unit_order) : json("infinite")},
          {"n", r.n ? json(*r.n) : json(nullptr)},
          {"m", r.m ? json(*r.m) : json(nullptr)},
          {"certificate", r.certificate ? certificate_to_json(g, *r.certificate) : json(nullptr)},
          {"tested_up_to", r.tested_up_to}};
}

json graded_serre_to_json(Graph const& g, GradedSerreReport const& r) {
  json vertices = json::array();
  for (auto const& v : r.vertices) {
    vertices.push_back({{"vertex", g.name(v.vertex)},
                        {"status", to_string(v.status)},
                        {"shifts", v.shifts},
                        {"certificate", v.certificate ? certificate_to_json(g, *v.certificate) : json(nullptr)},
                        {"candidates_searched", v.candidates_searched},
                        {"detail", v.detail}});
  }
  return {{"status", to_string(r.status)},
          {"window", {r.window.lo, r.window.hi}},
          {"vertices", std::move(vertices)}};
}

json classification_to_json(Classification const& c) {
  return {{"kind", to_string(c.kind)}, {"n", c.n}, {"conjectural", c.conjectural}};
}

std::string serre_conclusion(Classification const& c, Dialect dialect) {
  std::string const algebra = dialect == Dialect::lpa ? "L_k(E)" : "C*(E)";
  std::string const label = algebra_label(c, dialect);
  switch (c.kind) {
    case ClassificationKind::not_serre:
      return "not every finitely generated projective " + algebra + "-module is free";
    case ClassificationKind::serre_unknown:
      return "undecided within the search budget";
    case ClassificationKind::serre_pis:
      return "every finitely generated projective " + algebra + "-module is free; " + algebra +
             " is purely infinite simple with K0 = (Z/" + std::to_string(c.n) + "Z, 1), conjecturally " +
             algebra + " = " + label;
    default:
      return "every finitely generated projective " + algebra + "-module is free; " + algebra + " = " + label;
  }
}

json classify_report(Graph const& g, Classification const& c, Dialect dialect) {
  json pis = nullptr;
  if (c.pis) {
    pis = pis_to_json(g, *c.pis);
  } else {
    try {
      pis = pis_to_json(g, purely_infinite_simple_check(g));
    } catch (GraphTooLarge const&) {
    }
  }
  json certificates = json::array();
  for (auto const& v : c.serre.vertices) {
    if (!v.certificate) continue;
    certificates.push_back({{"vertex", g.name(v.vertex)},
                            {"multiplier", big_to_json(*v.multiplier)},
                            {"certificate", certificate_to_json(g, *v.certificate)}});
  }
  json classification = classification_to_json(c);
  classification["label"] = algebra_label(c, dialect);
  classification["conclusion"] = serre_conclusion(c, dialect);
  return {{"schema", kReportSchema},
          {"dialect", to_string(dialect)},
          {"graph", graph_to_json(g)},
          {"serre", serre_to_json(g, c.serre)},
          {"pis", std::move(pis)},
          {"k0", k0_to_json(g, c.k0)},
          {"classification", std::move(classification)},
          {"certificates", std::move(certificates)},
          {"budget", budget_to_json(c.serre.budget)}};
}

}  // namespace leavitt
