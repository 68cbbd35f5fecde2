#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leavitt {

// Index of a vertex in the graph's declaration order. All canonical orderings
// (element serialization, K0 coordinates, subset enumeration) follow it.
using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId source;
  VertexId range;

  friend bool operator==(Edge const&, Edge const&) = default;
  friend auto operator<=>(Edge const&, Edge const&) = default;
};

// A finite directed multigraph. Parallel edges and loops are allowed; the
// edge id of an edge is its position in edges(). Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws DuplicateVertex or DanglingEdge.
  Graph(std::vector<std::string> vertices,
        std::vector<std::pair<std::string, std::string>> const& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::vector<std::string> const& vertex_names() const noexcept {
    return names_;
  }
  std::string const& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  // Throws UnknownVertex.
  VertexId id(std::string_view name) const;

  std::vector<Edge> const& edges() const noexcept { return edges_; }
  Edge const& edge(EdgeId e) const { return edges_.at(e); }

  // Edge ids of s^{-1}(v), in edge-list order.
  std::span<EdgeId const> out_edges(VertexId v) const {
    return out_edges_.at(v);
  }
  std::size_t out_degree(VertexId v) const { return out_edges_.at(v).size(); }
  bool is_sink(VertexId v) const { return out_edges_.at(v).empty(); }

  // Number of edges u -> v.
  std::size_t multiplicity(VertexId u, VertexId v) const;
  // A[u][v] = number of edges u -> v.
  std::vector<std::vector<std::size_t>> adjacency_matrix() const;

  // Labeled-graph equality: identical vertex names in the same order and the
  // same edge multiset.
  friend bool operator==(Graph const& a, Graph const& b);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_edges_;
};

// Equality of vertex sets and edge multisets by name, ignoring vertex order.
bool same_labeled_graph(Graph const& a, Graph const& b);

// Subset of a graph's vertices, stored as a membership mask in vertex order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t vertex_count) : mask_(vertex_count, false) {}
  VertexSet(std::size_t vertex_count, std::initializer_list<VertexId> members);

  static VertexSet all(std::size_t vertex_count);

  std::size_t universe_size() const noexcept { return mask_.size(); }
  bool contains(VertexId v) const { return mask_.at(v); }
  void insert(VertexId v) { mask_.at(v) = true; }
  void erase(VertexId v) { mask_.at(v) = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<VertexId> members() const;

  VertexSet operator&(VertexSet const& other) const;
  VertexSet operator|(VertexSet const& other) const;
  bool is_subset_of(VertexSet const& other) const;

  friend bool operator==(VertexSet const&, VertexSet const&) = default;

 private:
  std::vector<bool> mask_;
};

std::vector<std::string> names_of(Graph const& g, VertexSet const& s);

// Graph constructions.

Graph build_graph(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> const& edges);

// One vertex "u" with n loops.
Graph rose_graph(std::size_t n);

// Vertices u, v; d-1 parallel edges u -> v; n loops at v. Requires d, n >= 2.
Graph matrix_graph(std::size_t d, std::size_t n);

// Attaches two fresh vertices x, y at `at` with edges at->x, x->at, x->y,
// y->x, x->x, y->y. Fresh names are the first two unused names from
// v, w, v1, w1, v2, w2, ... unless given explicitly.
// Throws VertexNotOnCycle, UnknownVertex, DuplicateVertex.
Graph cuntz_splice(Graph const& g, std::string_view at,
                   std::optional<std::pair<std::string, std::string>>
                       fresh_names = std::nullopt);

// Structural predicates.

VertexSet sinks(Graph const& g);
VertexSet regular_vertices(Graph const& g);

// Vertices reachable from `from` by paths of length >= 0.
VertexSet reachable_from(Graph const& g, VertexId from);

bool is_hereditary(Graph const& g, VertexSet const& h);
bool is_saturated(Graph const& g, VertexSet const& h);

// Largest graph accepted by hereditary_saturated_subsets.
inline constexpr std::size_t kMaxSubsetSearchVertices = 20;

// Every hereditary saturated subset, in increasing order of the bitmask over
// the vertex order. Throws GraphTooLarge above kMaxSubsetSearchVertices.
std::vector<VertexSet> hereditary_saturated_subsets(Graph const& g);

// A simple cycle, as edge ids in traversal order. Its vertices are the
// sources of those edges.
struct Cycle {
  std::vector<EdgeId> edges;

  std::vector<VertexId> vertices(Graph const& g) const;
  friend bool operator==(Cycle const&, Cycle const&) = default;
};

// All simple cycles. Each cycle is reported once, starting at its smallest
// vertex; parallel edges yield distinct cycles.
std::vector<Cycle> cycles(Graph const& g);

// True iff some vertex on the cycle emits an edge other than the cycle's own.
bool cycle_has_exit(Graph const& g, Cycle const& c);

// A cycle without an exit, found by following out-degree-one chains; none
// exists iff every cycle has an exit. Polynomial, unlike cycles().
std::optional<Cycle> exitless_cycle(Graph const& g);

bool has_cycle(Graph const& g);

bool every_vertex_connects_to_cycle(Graph const& g);

bool vertex_on_cycle(Graph const& g, VertexId v);

}  // namespace leavitt
