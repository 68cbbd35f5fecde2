#pragma once

#include <compare>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

// An element of the free abelian monoid on the vertices: a finitely supported
// vertex multiset. Terms are kept sorted by vertex id with no zero counts, so
// structural equality is equality in the free monoid (not in the graph
// monoid; see decide_equal).
class MonoidElement {
 public:
  struct Term {
    VertexId vertex;
    BigInt count;

    friend bool operator==(Term const&, Term const&) = default;
  };

  MonoidElement() = default;

  static MonoidElement of(VertexId v, BigInt count = 1);
  // From a dense coefficient vector indexed by vertex id. Throws
  // InvalidParameter on negative entries.
  static MonoidElement from_dense(std::vector<BigInt> const& coefficients);

  std::vector<Term> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(VertexId v) const;
  // Sum of all coefficients.
  BigInt total() const;
  // Dense coefficients over `vertex_count` vertices.
  std::vector<BigInt> dense(std::size_t vertex_count) const;

  // Adds n >= 0 copies of v.
  MonoidElement& add(VertexId v, BigInt const& n);
  // Removes n copies of v; throws InvalidParameter if fewer are present.
  MonoidElement& remove(VertexId v, BigInt const& n);

  MonoidElement& operator+=(MonoidElement const& other);
  friend MonoidElement operator+(MonoidElement a, MonoidElement const& b) {
    return a += b;
  }
  // k copies of this element; k >= 0.
  MonoidElement scaled(BigInt const& k) const;

  friend bool operator==(MonoidElement const&, MonoidElement const&) = default;
  // Lexicographic over the dense coefficient vector in vertex order.
  friend std::strong_ordering operator<=>(MonoidElement const& a,
                                          MonoidElement const& b);

 private:
  std::vector<Term> terms_;
};

// 1_E: one copy of every vertex.
MonoidElement unit_element(Graph const& g);

}  // namespace leavitt
