#include "leavitt/graph.hpp"

#include <algorithm>
#include <functional>

#include "leavitt/error.hpp"

namespace leavitt {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> const& edges)
    : names_(std::move(vertices)) {
  index_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw DuplicateVertex("duplicate vertex '" + names_[v] + "'");
    }
  }
  out_edges_.resize(names_.size());
  edges_.reserve(edges.size());
  for (auto const& [s, r] : edges) {
    auto si = index_.find(s);
    auto ri = index_.find(r);
    if (si == index_.end() || ri == index_.end()) {
      throw DanglingEdge("edge (" + s + ", " + r +
                         ") has an undeclared endpoint '" +
                         (si == index_.end() ? s : r) + "'");
    }
    out_edges_[si->second].push_back(edges_.size());
    edges_.push_back({si->second, ri->second});
  }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

std::size_t Graph::multiplicity(VertexId u, VertexId v) const {
  std::size_t n = 0;
  for (EdgeId e : out_edges(u)) n += edges_[e].range == v;
  return n;
}

std::vector<std::vector<std::size_t>> Graph::adjacency_matrix() const {
  std::vector<std::vector<std::size_t>> a(vertex_count(),
                                          std::vector<std::size_t>(vertex_count()));
  for (auto const& e : edges_) ++a[e.source][e.range];
  return a;
}

namespace {

std::vector<Edge> sorted_edges(Graph const& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::pair<std::string, std::string>> named_edges(Graph const& g) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(g.edge_count());
  for (auto const& e : g.edges()) out.emplace_back(g.name(e.source), g.name(e.range));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool operator==(Graph const& a, Graph const& b) {
  return a.names_ == b.names_ && sorted_edges(a) == sorted_edges(b);
}

bool same_labeled_graph(Graph const& a, Graph const& b) {
  auto na = a.vertex_names();
  auto nb = b.vertex_names();
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return na == nb && named_edges(a) == named_edges(b);
}

// VertexSet

VertexSet::VertexSet(std::size_t vertex_count,
                     std::initializer_list<VertexId> members)
    : mask_(vertex_count, false) {
  for (VertexId v : members) mask_.at(v) = true;
}

VertexSet VertexSet::all(std::size_t vertex_count) {
  VertexSet s(vertex_count);
  s.mask_.assign(vertex_count, true);
  return s;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mask_.size(); ++v) {
    if (mask_[v]) out.push_back(v);
  }
  return out;
}

VertexSet VertexSet::operator&(VertexSet const& other) const {
  VertexSet out(mask_.size());
  for (VertexId v = 0; v < mask_.size(); ++v) {
    out.mask_[v] = mask_[v] && other.mask_.at(v);
  }
  return out;
}

VertexSet VertexSet::operator|(VertexSet const& other) const {
  VertexSet out(mask_.size());
  for (VertexId v = 0; v < mask_.size(); ++v) {
    out.mask_[v] = mask_[v] || other.mask_.at(v);
  }
  return out;
}

bool VertexSet::is_subset_of(VertexSet const& other) const {
  for (VertexId v = 0; v < mask_.size(); ++v) {
    if (mask_[v] && !other.mask_.at(v)) return false;
  }
  return true;
}

std::vector<std::string> names_of(Graph const& g, VertexSet const& s) {
  std::vector<std::string> out;
  for (VertexId v : s.members()) out.push_back(g.name(v));
  return out;
}

// Constructions

Graph build_graph(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> const& edges) {
  return Graph(std::move(vertices), edges);
}

Graph rose_graph(std::size_t n) {
  return Graph({"u"}, std::vector<std::pair<std::string, std::string>>(n, {"u", "u"}));
}

Graph matrix_graph(std::size_t d, std::size_t n) {
  if (d < 2 || n < 2) {
    throw InvalidParameter("matrix_graph requires d >= 2 and n >= 2 (got d=" +
                           std::to_string(d) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<std::pair<std::string, std::string>> edges(d - 1, {"u", "v"});
  edges.insert(edges.end(), n, {"v", "v"});
  return Graph({"u", "v"}, edges);
}

namespace {

std::vector<std::pair<std::string, std::string>> edge_names(Graph const& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto const& e : g.edges()) out.emplace_back(g.name(e.source), g.name(e.range));
  return out;
}

std::pair<std::string, std::string> fresh_pair(Graph const& g) {
  std::vector<std::string> picked;
  for (std::size_t round = 0; picked.size() < 2; ++round) {
    std::string suffix = round == 0 ? "" : std::to_string(round);
    for (char const* stem : {"v", "w"}) {
      std::string candidate = stem + suffix;
      if (!g.find(candidate) && picked.size() < 2) picked.push_back(candidate);
    }
  }
  return {picked[0], picked[1]};
}

}  // namespace

Graph cuntz_splice(Graph const& g, std::string_view at,
                   std::optional<std::pair<std::string, std::string>> fresh_names) {
  VertexId base = g.id(at);
  if (!vertex_on_cycle(g, base)) {
    throw VertexNotOnCycle("vertex '" + std::string(at) + "' does not lie on a cycle");
  }
  auto [x, y] = fresh_names ? *fresh_names : fresh_pair(g);
  auto vertices = g.vertex_names();
  vertices.push_back(x);
  vertices.push_back(y);
  auto edges = edge_names(g);
  std::string a(at);
  edges.insert(edges.end(), {{a, x}, {x, a}, {x, y}, {y, x}, {x, x}, {y, y}});
  return Graph(std::move(vertices), edges);
}

// Predicates

VertexSet sinks(Graph const& g) {
  VertexSet s(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) s.insert(v);
  }
  return s;
}

VertexSet regular_vertices(Graph const& g) {
  VertexSet s(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_sink(v)) s.insert(v);
  }
  return s;
}

VertexSet reachable_from(Graph const& g, VertexId from) {
  VertexSet seen(g.vertex_count());
  std::vector<VertexId> stack{from};
  seen.insert(from);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId r = g.edge(e).range;
      if (!seen.contains(r)) {
        seen.insert(r);
        stack.push_back(r);
      }
    }
  }
  return seen;
}

bool is_hereditary(Graph const& g, VertexSet const& h) {
  for (auto const& e : g.edges()) {
    if (h.contains(e.source) && !h.contains(e.range)) return false;
  }
  return true;
}

bool is_saturated(Graph const& g, VertexSet const& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v) || h.contains(v)) continue;
    bool all_inside = std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                                  [&](EdgeId e) { return h.contains(g.edge(e).range); });
    if (all_inside) return false;
  }
  return true;
}

std::vector<VertexSet> hereditary_saturated_subsets(Graph const& g) {
  std::size_t const n = g.vertex_count();
  if (n > kMaxSubsetSearchVertices) {
    throw GraphTooLarge("hereditary saturated subset search is capped at " +
                        std::to_string(kMaxSubsetSearchVertices) + " vertices (graph has " +
                        std::to_string(n) + ")");
  }
  // Bitmask forms of the out-neighbourhoods keep the 2^n sweep cheap.
  std::vector<std::uint32_t> targets(n, 0);
  for (auto const& e : g.edges()) targets[e.source] |= std::uint32_t{1} << e.range;

  std::vector<VertexSet> out;
  std::uint32_t const limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      bool inside = (mask >> v) & 1U;
      bool emits_inside_only = (targets[v] & ~mask) == 0;
      if (inside && !emits_inside_only) ok = false;                    // hereditary
      if (!inside && !g.is_sink(v) && emits_inside_only) ok = false;  // saturated
    }
    if (!ok) continue;
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.insert(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<VertexId> Cycle::vertices(Graph const& g) const {
  std::vector<VertexId> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(g.edge(e).source);
  return out;
}

std::vector<Cycle> cycles(Graph const& g) {
  std::vector<Cycle> out;
  std::size_t const n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> path;

  // Cycles rooted at `start` only visit vertices >= start, so each cycle is
  // found exactly once, from its smallest vertex.
  std::function<void(VertexId, VertexId)> walk = [&](VertexId start, VertexId v) {
    for (EdgeId e : g.out_edges(v)) {
      VertexId r = g.edge(e).range;
      if (r < start) continue;
      if (r == start) {
        path.push_back(e);
        out.push_back(Cycle{path});
        path.pop_back();
      } else if (!on_path[r]) {
        on_path[r] = true;
        path.push_back(e);
        walk(start, r);
        path.pop_back();
        on_path[r] = false;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s);
    on_path[s] = false;
  }
  return out;
}

bool cycle_has_exit(Graph const& g, Cycle const& c) {
  // On a simple cycle each vertex contributes exactly one edge, so any second
  // edge out of a cycle vertex is an exit.
  return std::any_of(c.edges.begin(), c.edges.end(),
                     [&](EdgeId e) { return g.out_degree(g.edge(e).source) > 1; });
}

std::optional<Cycle> exitless_cycle(Graph const& g) {
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    Cycle c;
    VertexId v = start;
    while (g.out_degree(v) == 1 && c.edges.size() < g.vertex_count()) {
      EdgeId e = g.out_edges(v)[0];
      c.edges.push_back(e);
      v = g.edge(e).range;
      if (v == start) return c;
    }
  }
  return std::nullopt;
}

bool has_cycle(Graph const& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vertex_on_cycle(g, v)) return true;
  }
  return false;
}

bool vertex_on_cycle(Graph const& g, VertexId v) {
  for (EdgeId e : g.out_edges(v)) {
    if (reachable_from(g, g.edge(e).range).contains(v)) return true;
  }
  return false;
}

bool every_vertex_connects_to_cycle(Graph const& g) {
  VertexSet on_cycle(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vertex_on_cycle(g, v)) on_cycle.insert(v);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((reachable_from(g, v) & on_cycle).empty()) return false;
  }
  return true;
}

}  // namespace leavitt
