#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "leavitt/classifier.hpp"
#include "leavitt/element_text.hpp"
#include "leavitt/error.hpp"
#include "leavitt/fixtures.hpp"
#include "leavitt/report.hpp"
#include "leavitt/talented.hpp"

namespace leavitt::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fixture;
  std::vector<std::string> positionals;
  bool json = false;
  bool graded = false;
  SearchBudget budget;
  std::vector<Shift> window;
  std::string dialect = "lpa";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--fixture", o.fixture, "Bundled fixture name (or a graph file path)");
  cmd->add_flag("--json", o.json, "Emit a JSON report");
  cmd->add_option("--max-steps", o.budget.max_steps, "Rewrite depth per side");
  cmd->add_option("--max-size", o.budget.max_element_size, "Largest element size searched");
  cmd->add_option("--max-frontier", o.budget.max_frontier, "Largest number of states held");
  cmd->add_option("--window", o.window, "Shift window LO HI")->expected(2);
  cmd->add_option("--dialect", o.dialect, "Report wording")->check(CLI::IsMember({"lpa", "cstar"}));
  cmd->add_option("args", o.positionals, "[PATH] and command arguments");
}

Graph resolve_fixture(std::string const& name) {
  if (auto g = fixtures::by_name(name)) return *g;
  if (std::filesystem::exists(name)) return load_graph_file(name);
  throw UsageError("unknown fixture '" + name + "' (see `leavitt-lab fixtures`)");
}

// Loads the graph and returns the positionals that follow the optional path.
std::pair<Graph, std::vector<std::string>> input(Options const& o, std::size_t trailing) {
  std::vector<std::string> rest = o.positionals;
  if (rest.size() == trailing + 1) {
    if (!o.fixture.empty()) throw UsageError("give either --fixture or a graph file, not both");
    Graph g = load_graph_file(rest.front());
    rest.erase(rest.begin());
    return {std::move(g), rest};
  }
  if (rest.size() != trailing) {
    throw UsageError("expected " + std::to_string(trailing) + " argument(s) besides the graph, got " +
                     std::to_string(rest.size()) + " positional argument(s)");
  }
  if (o.fixture.empty()) throw UsageError("no graph given: pass --fixture NAME or a graph file");
  return {resolve_fixture(o.fixture), rest};
}

ShiftWindow window_of(Options const& o) {
  ShiftWindow w;
  if (o.window.size() == 2) w = {o.window[0], o.window[1]};
  w.validate();
  return w;
}

Dialect dialect_of(Options const& o) { return o.dialect == "cstar" ? Dialect::cstar : Dialect::lpa; }

json with_schema(json body) {
  json out = {{"schema", kReportSchema}};
  out.update(body);
  return out;
}

std::string budget_text(SearchBudget const& b) {
  return "budget: max_steps=" + std::to_string(b.max_steps) +
         " max_size=" + std::to_string(b.max_element_size) +
         " max_frontier=" + std::to_string(b.max_frontier);
}

std::string k0_text(Graph const& g, K0Data const& k0) {
  std::string group;
  for (auto const& d : k0.torsion_divisors) group += (group.empty() ? "" : " + ") + ("Z/" + to_string(d));
  if (k0.free_rank > 0) {
    group += (group.empty() ? "" : " + ") + std::string("Z");
    if (k0.free_rank > 1) group += "^" + std::to_string(k0.free_rank);
  }
  if (group.empty()) group = "0";
  auto cls = [](K0Class const& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + to_string(c[i]);
    return s + ")";
  };
  std::string out = "K0 = " + group + ", unit = " + cls(k0.unit_class);
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "\n  [" + g.name(v) + "] = " + cls(k0.vertex_classes[v]);
  return out;
}

void print_serre_text(std::ostream& out, Graph const& g, SerreReport const& r) {
  out << "serre: " << to_string(r.status);
  if (r.failing_vertex) out << " at " << g.name(*r.failing_vertex) << " (" << to_string(*r.failure) << ")";
  out << '\n';
  for (auto const& v : r.vertices) {
    out << "  " << g.name(v.vertex) << ": " << to_string(v.status);
    if (v.multiplier) {
      out << ", " << g.name(v.vertex) << " = " << *v.multiplier << "*1_E (depth " << v.stats.lhs_depth << "/"
          << v.stats.rhs_depth << ")";
    } else if (!v.candidates.empty()) {
      out << ", " << v.candidates.size() << " candidate(s) tried";
    }
    out << '\n';
  }
  out << budget_text(r.budget) << '\n';
}

int serre_exit(SerreStatus s) {
  return s == SerreStatus::holds ? kPositive : s == SerreStatus::fails ? kNegative : kUnknown;
}

int cmd_classify(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  Classification c = classify(g, o.budget);
  Dialect const d = dialect_of(o);
  if (o.json) {
    out << classify_report(g, c, d).dump(2) << '\n';
  } else {
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    print_serre_text(out, g, c.serre);
    out << k0_text(g, c.k0) << '\n';
    out << "classification: " << to_string(c.kind);
    std::string label = algebra_label(c, d);
    if (!label.empty()) out << (c.conjectural ? ", conjecturally " : ", ") << label;
    out << '\n' << serre_conclusion(c, d) << '\n';
  }
  return c.kind == ClassificationKind::serre_unknown ? kUnknown : kPositive;
}

template <class Verdict>
int report_verdict(Options const& o, std::ostream& out, Graph const& g, std::string const& lhs,
                   std::string const& rhs, Verdict const& v) {
  if (o.json) {
    json body = verdict_to_json(g, v);
    body["graded"] = o.graded;
    body["lhs"] = lhs;
    body["rhs"] = rhs;
    out << with_schema(body).dump(2) << '\n';
  } else {
    out << lhs << " vs " << rhs << ": " << to_string(v.kind) << '\n';
    if (v.certificate) {
      out << "  common descendant after " << v.certificate->lhs.size() << " + " << v.certificate->rhs.size()
          << " rewrites\n";
    }
    if (v.witness) out << "  witness (" << to_string(v.witness->kind) << "): " << v.witness->detail << '\n';
    out << budget_text(v.stats.budget) << '\n';
  }
  return v.is_equal() ? kPositive : v.is_unequal() ? kNegative : kUnknown;
}

int cmd_eq(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 2);
  if (o.graded) {
    auto a = parse_graded_element(g, rest[0]);
    auto b = parse_graded_element(g, rest[1]);
    return report_verdict(o, out, g, format_graded_element(g, a), format_graded_element(g, b),
                          graded_decide_equal(g, a, b, o.budget));
  }
  auto a = parse_element(g, rest[0]);
  auto b = parse_element(g, rest[1]);
  return report_verdict(o, out, g, format_element(g, a), format_element(g, b), decide_equal(g, a, b, o.budget));
}

int cmd_serre(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  SerreReport r = serre_check(g, o.budget);
  Dialect const d = dialect_of(o);
  std::optional<Classification> c;
  if (g.vertex_count() > 0) c = classify(g, r);
  if (o.json) {
    json body = {{"dialect", to_string(d)}, {"serre", serre_to_json(g, r)}};
    body["label"] = c ? json(algebra_label(*c, d)) : json(nullptr);
    body["conjectural"] = c && c->conjectural;
    body["conclusion"] = c ? json(serre_conclusion(*c, d)) : json(nullptr);
    out << with_schema(body).dump(2) << '\n';
  } else {
    print_serre_text(out, g, r);
    if (c) out << serre_conclusion(*c, d) << '\n';
  }
  return serre_exit(r.status);
}

int cmd_graded_serre(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  GradedSerreReport r = graded_serre_check(g, o.budget, window_of(o));
  if (o.json) {
    out << with_schema(graded_serre_to_json(g, r)).dump(2) << '\n';
  } else {
    out << "graded serre: " << to_string(r.status) << " in window [" << r.window.lo << ", " << r.window.hi << "]\n";
    for (auto const& v : r.vertices) {
      out << "  " << g.name(v.vertex) << ": " << to_string(v.status);
      if (!v.shifts.empty()) {
        out << ", " << g.name(v.vertex) << "(0) =";
        for (std::size_t i = 0; i < v.shifts.size(); ++i) out << (i ? " +" : "") << " 1_E(" << v.shifts[i] << ")";
      } else if (!v.detail.empty()) {
        out << ", " << v.detail;
      }
      out << '\n';
    }
    out << budget_text(o.budget) << '\n';
  }
  GradedFreeStatus const s = r.status;
  return s == GradedFreeStatus::holds ? kPositive : s == GradedFreeStatus::fails_in_window ? kNegative : kUnknown;
}

int cmd_k0(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  K0Data const k0 = k0_of_graph(g);
  if (o.json) {
    out << with_schema(k0_to_json(g, k0)).dump(2) << '\n';
  } else {
    out << k0_to_json(g, k0).dump() << '\n';
    out << k0_text(g, k0) << '\n';
  }
  return kPositive;
}

int cmd_ibn(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  IbnReport r = ibn_check(g, o.budget);
  if (o.json) {
    out << with_schema(ibn_to_json(g, r)).dump(2) << '\n';
  } else {
    out << "ibn: " << to_string(r.status);
    if (r.n) out << ", " << *r.n << "*1_E = " << *r.m << "*1_E";
    out << "\nunit order: " << (r.unit_order ? to_string(*r.unit_order) : std::string("infinite")) << '\n';
    if (r.unit_order) out << budget_text(o.budget) << '\n';
  }
  return r.status == IbnStatus::ibn ? kPositive : r.status == IbnStatus::not_ibn ? kNegative : kUnknown;
}

int cmd_stably_free(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  UnitGeneration const u = unit_generates_k0(g);
  if (o.json) {
    json multipliers = json::object();
    if (u.generates) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) multipliers[g.name(v)] = big_to_json(u.multipliers[v]);
    }
    out << with_schema({{"stably_free", u.generates}, {"multipliers", multipliers}}).dump(2) << '\n';
  } else {
    out << "stably free: " << (u.generates ? "yes" : "no") << '\n';
  }
  return u.generates ? kPositive : kNegative;
}

int cmd_pis(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 0);
  PisReport const r = purely_infinite_simple_check(g);
  if (o.json) {
    out << with_schema(pis_to_json(g, r)).dump(2) << '\n';
  } else {
    out << "purely infinite simple: " << (r.purely_infinite_simple ? "yes" : "no") << '\n';
    for (auto const& reason : r.reasons) out << "  " << reason << '\n';
  }
  return r.purely_infinite_simple ? kPositive : kNegative;
}

int cmd_splice(Options const& o, std::ostream& out) {
  auto [g, rest] = input(o, 1);
  out << graph_to_json(cuntz_splice(g, rest[0])).dump() << '\n';
  return kPositive;
}

std::size_t parse_count(std::string const& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &pos);
  } catch (std::exception const&) {
    throw UsageError("expected a nonnegative integer, got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

int cmd_gen(Options const& o, std::ostream& out) {
  auto const& p = o.positionals;
  if (p.size() == 2 && p[0] == "rose") {
    out << graph_to_json(rose_graph(parse_count(p[1]))).dump() << '\n';
  } else if (p.size() == 3 && p[0] == "matrix") {
    out << graph_to_json(matrix_graph(parse_count(p[1]), parse_count(p[2]))).dump() << '\n';
  } else {
    throw UsageError("usage: gen rose N | gen matrix D N");
  }
  return kPositive;
}

int cmd_fixtures(std::ostream& out) {
  for (auto const& name : fixtures::catalogue()) out << name << '\n';
  return kPositive;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph monoid and Leavitt path algebra workbench", "leavitt-lab"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    char const* name;
    char const* help;
  };
  std::vector<Command> const commands = {
      {"classify", "Serre check, purely infinite simple test, K0 and classification"},
      {"eq", "Decide equality of two elements: eq [PATH] LHS RHS"},
      {"serre", "Is every vertex a positive multiple of 1_E?"},
      {"graded-serre", "Graded Serre check over a shift window"},
      {"k0", "K0 of the graph monoid with the unit and vertex classes"},
      {"ibn", "Invariant basis number"},
      {"stably-free", "Does the unit class generate K0?"},
      {"pis", "Purely infinite simple conditions"},
      {"splice", "Cuntz splice at a vertex: splice [PATH] VERTEX"},
      {"gen", "Emit graph JSON: gen rose N | gen matrix D N"},
      {"fixtures", "List bundled fixtures"},
  };
  for (auto const& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_common(cmd, o);
    if (std::string(c.name) == "eq") cmd->add_flag("--graded", o.graded, "Compare in the talented monoid");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kInputError;
  }

  std::string const name = app.get_subcommands().front()->get_name();
  try {
    o.budget.validate();
    if (name == "classify") return cmd_classify(o, out);
    if (name == "eq") return cmd_eq(o, out);
    if (name == "serre") return cmd_serre(o, out);
    if (name == "graded-serre") return cmd_graded_serre(o, out);
    if (name == "k0") return cmd_k0(o, out);
    if (name == "ibn") return cmd_ibn(o, out);
    if (name == "stably-free") return cmd_stably_free(o, out);
    if (name == "pis") return cmd_pis(o, out);
    if (name == "splice") return cmd_splice(o, out);
    if (name == "gen") return cmd_gen(o, out);
    return cmd_fixtures(out);
  } catch (TheoremViolation const& e) {
    err << "internal consistency failure: " << e.what() << '\n' << e.evidence();
    return kTheoremViolation;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace leavitt::cli
