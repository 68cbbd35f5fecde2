#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/k_theory.hpp"
#include "leavitt/monoid.hpp"

namespace leavitt {

enum class SerreStatus { holds, fails, unknown };
enum class SerreFailure { no_k0_solution, monoid_refuted };

enum class VertexSerreStatus {
  holds,
  no_k0_solution,
  monoid_refuted,
  unknown,
  not_checked,  // skipped after another vertex failed
};

struct CandidateOutcome {
  BigInt multiplier;
  VerdictKind verdict;
};

struct VertexSerreResult {
  VertexId vertex = 0;
  VertexSerreStatus status = VertexSerreStatus::not_checked;
  // When holds: v = multiplier * 1_E, witnessed by certificate.
  std::optional<BigInt> multiplier;
  std::optional<Certificate> certificate;
  std::vector<CandidateOutcome> candidates;
  // Every k that could possibly work was among the candidates.
  bool candidates_complete = false;
  SearchStats stats;  // of the deciding (or last) search
};

struct SerreReport {
  SerreStatus status = SerreStatus::unknown;
  std::optional<VertexId> failing_vertex;
  std::optional<SerreFailure> failure;
  std::vector<VertexSerreResult> vertices;
  SearchBudget budget;

  // Vertex -> k for every vertex that holds.
  std::map<VertexId, BigInt> multipliers() const;
};

inline constexpr std::size_t kMaxSerreCandidates = 64;

// Every vertex is a positive multiple of 1_E in the graph monoid.
SerreReport serre_check(Graph const& g, SearchBudget const& budget = {});

struct PisReport {
  bool purely_infinite_simple = false;
  bool has_vertices = false;
  // A hereditary saturated subset other than the empty set and E^0.
  std::optional<VertexSet> proper_ideal;
  std::optional<Cycle> exitless_cycle;
  bool has_cycle = false;
  std::vector<std::string> reasons;  // one per failed condition
};

// Throws GraphTooLarge beyond kMaxSubsetSearchVertices vertices.
PisReport purely_infinite_simple_check(Graph const& g);

enum class IbnStatus { ibn, not_ibn, unknown };

struct IbnReport {
  IbnStatus status = IbnStatus::unknown;
  std::optional<BigInt> unit_order;  // nullopt: infinite
  // When not_ibn: n * 1_E = m * 1_E, with certificate.
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<Certificate> certificate;
  std::size_t tested_up_to = 0;
};

inline constexpr std::size_t kIbnWitnessBound = 16;

IbnReport ibn_check(Graph const& g, SearchBudget const& budget = {},
                    std::size_t max_n = kIbnWitnessBound);

// All finitely generated projectives are stably free: [1_E] generates K0.
bool stably_free_check(Graph const& g);

enum class ClassificationKind {
  not_serre,
  serre_trivial_field,
  serre_laurent,
  serre_rose,
  serre_pis,
  serre_unknown,
};

struct Classification {
  ClassificationKind kind = ClassificationKind::serre_unknown;
  SerreReport serre;
  std::optional<PisReport> pis;
  K0Data k0;
  // serre_rose: number of petals. serre_pis: order of K0.
  std::size_t n = 0;
  // Only serre_pis carries a conjectural label.
  bool conjectural = false;
};

// Throws InvalidParameter for a graph without vertices and TheoremViolation
// when the Serre property holds on a non-rose graph that is not purely
// infinite simple with K0 = (Z/nZ, 1).
Classification classify(Graph const& g, SearchBudget const& budget = {});
// Same, from an already computed serre_check(g).
Classification classify(Graph const& g, SerreReport serre);

enum class Dialect { lpa, cstar };

// Name of the algebra the classification points to, e.g. "L_2" or "O_2".
std::string algebra_label(Classification const& c, Dialect dialect);

char const* to_string(SerreStatus s);
char const* to_string(SerreFailure f);
char const* to_string(VertexSerreStatus s);
char const* to_string(IbnStatus s);
char const* to_string(ClassificationKind k);
char const* to_string(Dialect d);

}  // namespace leavitt
