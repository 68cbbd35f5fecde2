#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/k_theory.hpp"
#include "leavitt/monoid.hpp"

namespace leavitt {

using Shift = std::int64_t;

// Element of the free abelian monoid on the symbols v(i): a finitely supported
// map (vertex, shift) -> count, kept sorted by (shift, vertex) without zeros.
class GradedElement {
 public:
  struct Term {
    Shift shift;
    VertexId vertex;
    BigInt count;

    friend bool operator==(Term const&, Term const&) = default;
  };

  GradedElement() = default;

  static GradedElement of(VertexId v, Shift shift = 0, BigInt count = 1);
  // Every vertex once, at the given shift: 1_E(shift).
  static GradedElement unit(Graph const& g, Shift shift = 0);
  // The element a placed at shift 0.
  static GradedElement lift(MonoidElement const& a);

  std::vector<Term> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(VertexId v, Shift shift) const;
  BigInt total() const;

  GradedElement& add(VertexId v, Shift shift, BigInt const& n);
  GradedElement& remove(VertexId v, Shift shift, BigInt const& n);
  GradedElement& operator+=(GradedElement const& other);
  friend GradedElement operator+(GradedElement a, GradedElement const& b) { return a += b; }

  friend bool operator==(GradedElement const&, GradedElement const&) = default;
  friend bool operator<(GradedElement const& a, GradedElement const& b);

 private:
  std::vector<Term> terms_;
};

// Every v(i) becomes v(i + n).
GradedElement shift_action(Shift n, GradedElement const& a);

// Collapses v(i) to v.
MonoidElement forget_shifts(GradedElement const& a);

// Rewrites one copy of v(shift) to the ranges of s^{-1}(v) at shift + 1;
// nullopt if v is a sink or v(shift) is absent.
std::optional<GradedElement> graded_rewrite_at(Graph const& g, GradedElement const& a,
                                               VertexId v, Shift shift);

// One result per non-sink (v, i) present in a, in (shift, vertex) order.
// Throws ZeroElement for a = 0.
std::vector<GradedElement> graded_one_step(Graph const& g, GradedElement const& a);

struct GradedRewriteStep {
  VertexId vertex;
  Shift shift;
  GradedElement result;

  friend bool operator==(GradedRewriteStep const&, GradedRewriteStep const&) = default;
};

struct GradedCertificate {
  GradedElement common;
  std::vector<GradedRewriteStep> lhs;
  std::vector<GradedRewriteStep> rhs;
};

using GradedVerdict = BasicVerdict<GradedCertificate>;

bool graded_certificate_replays(Graph const& g, GradedElement const& a, GradedElement const& b,
                                GradedCertificate const& cert);

// The certificate with every element and step moved by n.
GradedCertificate shift_certificate(Shift n, GradedCertificate const& cert);

// Monoid homomorphisms out of the talented monoid obtained by sending v(i) to
// lambda^i e_v in F_p^{E^0} modulo the columns e_v - lambda * sum e_{r(e)},
// for small primes p and the lambdas where that quotient is nonzero. They are
// necessary conditions for graded equality (lambda = 1 recovers K0 tensored
// with F_p).
class GradedEvaluations {
 public:
  explicit GradedEvaluations(Graph const& g);

  // Index of an evaluation point separating a and b, if any.
  std::optional<std::size_t> separating_point(GradedElement const& a, GradedElement const& b) const;
  std::size_t point_count() const noexcept { return points_.size(); }
  // (prime, lambda) of the i-th point.
  std::pair<std::uint64_t, std::uint64_t> point(std::size_t i) const;

 private:
  struct Point {
    std::uint64_t prime;
    std::uint64_t lambda;
    std::uint64_t lambda_inverse;
    // Row-reduced basis of the relation span, with pivot columns.
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
  };

  std::vector<std::uint64_t> evaluate(Point const& p, GradedElement const& a) const;
  bool in_span(Point const& p, std::vector<std::uint64_t> v) const;

  std::size_t vertex_count_;
  std::vector<Point> points_;
};

// Bounded confluence search over graded elements. Refutes with the ungraded K0
// class of the shift-forgotten elements, then with GradedEvaluations.
GradedVerdict graded_decide_equal(Graph const& g, GradedElement const& a, GradedElement const& b,
                                  SearchBudget const& budget = {});

struct ShiftWindow {
  Shift lo = -8;
  Shift hi = 8;

  // Throws InvalidParameter unless lo <= hi.
  void validate() const;
};

enum class GradedFreeStatus { holds, fails_in_window, unknown };

struct GradedVertexReport {
  VertexId vertex;
  GradedFreeStatus status = GradedFreeStatus::unknown;
  // When holds: v(0) = sum over these shifts of 1_E(shift).
  std::vector<Shift> shifts;
  std::optional<GradedCertificate> certificate;
  std::size_t candidates_searched = 0;
  std::string detail;
};

struct GradedSerreReport {
  GradedFreeStatus status = GradedFreeStatus::unknown;
  ShiftWindow window;
  std::vector<GradedVertexReport> vertices;
};

// Largest number of unit summands tried per vertex, and the cap on candidate
// shift multisets handed to the search.
inline constexpr std::size_t kMaxGradedSummands = 8;
inline constexpr std::size_t kMaxGradedCandidates = 64;

// For each vertex v, looks for shifts i_1..i_m in the window with
// v(0) = 1_E(i_1) + ... + 1_E(i_m) in the talented monoid.
GradedSerreReport graded_serre_check(Graph const& g, SearchBudget const& budget = {},
                                     ShiftWindow window = {});

char const* to_string(GradedFreeStatus s);

}  // namespace leavitt
