#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/element.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/k_theory.hpp"

namespace leavitt {

// Bounds that make the (in general infinite) rewrite search terminate.
struct SearchBudget {
  std::size_t max_steps = 24;             // rewrite depth per side
  std::uint64_t max_element_size = 512;   // total coefficient sum
  std::size_t max_frontier = 200'000;     // states held across both sides

  // Throws InvalidParameter unless every bound is positive.
  void validate() const;
};

// What a bounded search actually consumed, so Unknown verdicts can be
// reproduced and Equal/Unequal ones audited.
struct SearchStats {
  SearchBudget budget;
  std::size_t lhs_depth = 0;
  std::size_t rhs_depth = 0;
  std::size_t states = 0;
  bool size_pruned = false;
  bool depth_limited = false;
  bool frontier_limited = false;
  // Set when a side's whole closure was enumerated; max_weight is then the
  // largest element size in that closure.
  bool lhs_closure_finite = false;
  bool rhs_closure_finite = false;
  std::uint64_t lhs_max_weight = 0;
  std::uint64_t rhs_max_weight = 0;
};

// A single application of the one-step relation: the rewritten vertex and
// the element it produced.
struct RewriteStep {
  VertexId vertex;
  MonoidElement result;

  friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
};

// a ->* common and b ->* common.
struct Certificate {
  MonoidElement common;
  std::vector<RewriteStep> lhs;
  std::vector<RewriteStep> rhs;
};

enum class VerdictKind { equal, unequal, unknown };

enum class WitnessKind {
  k0_class,           // the K0 classes differ
  zero_element,       // exactly one side is zero
  disjoint_closures,  // both rewrite closures are fully known and disjoint
  graded_invariant,   // an evaluation of graded K0 differs
};

struct UnequalWitness {
  WitnessKind kind;
  K0Class lhs;
  K0Class rhs;
  std::string detail;
};

template <class Cert>
struct BasicVerdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<Cert> certificate;       // kind == equal
  std::optional<UnequalWitness> witness; // kind == unequal
  SearchStats stats;

  bool is_equal() const { return kind == VerdictKind::equal; }
  bool is_unequal() const { return kind == VerdictKind::unequal; }
  bool is_unknown() const { return kind == VerdictKind::unknown; }
};

using Verdict = BasicVerdict<Certificate>;

char const* to_string(VerdictKind kind);
char const* to_string(WitnessKind kind);

// Rewrites one copy of v; nullopt if v is a sink or absent from a.
std::optional<MonoidElement> rewrite_at(Graph const& g, MonoidElement const& a, VertexId v);

// One result per non-sink vertex present in a, in vertex order, with
// duplicates removed. Throws ZeroElement for a = 0.
std::vector<MonoidElement> one_step_rewrites(Graph const& g, MonoidElement const& a);

struct ReachableSet {
  std::vector<MonoidElement> elements;  // sorted, includes the start
  bool complete = false;                // no budget limit cut anything off
};

// Breadth-first closure under the one-step relation. Throws ZeroElement.
ReachableSet reachable(Graph const& g, MonoidElement const& a, SearchBudget const& budget = {});

// Decides a = b in the graph monoid. Equal carries a replayable certificate;
// Unequal carries an invariant witness; Unknown means the budget ran out and
// says nothing about inequality.
Verdict decide_equal(Graph const& g, MonoidElement const& a, MonoidElement const& b,
                     SearchBudget const& budget = {});
// Same, reusing a precomputed K0 for the invariant check.
Verdict decide_equal(Graph const& g, K0Data const& k0, MonoidElement const& a,
                     MonoidElement const& b, SearchBudget const& budget = {});

// Checks that each step is a valid one-step rewrite and both chains end at
// the certificate's common element.
bool certificate_replays(Graph const& g, MonoidElement const& a, MonoidElement const& b,
                         Certificate const& cert);

struct MonoidEnumeration {
  bool complete = false;
  // Least representative (by size, then vertex-order lexicographic) of every
  // class found, starting with 0.
  std::vector<MonoidElement> representatives;
};

// Largest number of classes enumerate_monoid will collect.
inline constexpr std::size_t kMaxEnumeratedClasses = 1024;

// Closes {0} and the vertices under addition, merging elements that
// decide_equal proves equal. Complete only when the monoid is finite and
// every comparison was decided within budget.
MonoidEnumeration enumerate_monoid(Graph const& g, SearchBudget const& budget = {});

}  // namespace leavitt
