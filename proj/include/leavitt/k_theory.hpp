#pragma once

#include <optional>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/element.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/smith.hpp"

namespace leavitt {

// Coordinates of a K0 class: one entry per torsion divisor (reduced into
// [0, d)), followed by one integer entry per free summand.
using K0Class = std::vector<BigInt>;

// K0 of the graph monoid's group completion, Z^{E^0} / span(relation
// columns), in Smith coordinates.
//
// Coordinate convention: torsion coordinates first, in divisor order, then
// free coordinates. The free block is put in Hermite normal form and each
// torsion coordinate is rescaled so the unit class reads 1 there whenever it
// is invertible, which makes the coordinates independent of elimination
// order.
struct K0Data {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion_divisors;  // d1 | d2 | ..., each >= 2
  std::vector<K0Class> vertex_classes;   // indexed by VertexId
  K0Class unit_class;
  // coordinates * (dense coefficient vector) gives an unreduced class.
  IntMatrix coordinates;

  std::size_t dimension() const { return torsion_divisors.size() + free_rank; }
  bool is_trivial() const { return dimension() == 0; }

  K0Class zero() const { return K0Class(dimension()); }
  K0Class reduce(K0Class x) const;
  K0Class add(K0Class const& a, K0Class const& b) const;
  K0Class scale(BigInt const& k, K0Class const& a) const;
  // Additive order; nullopt when infinite.
  std::optional<BigInt> order(K0Class const& x) const;
};

// One row per vertex, one column per regular vertex v:
// e_v - sum over edges e out of v of e_{r(e)}. Sinks contribute no column.
IntMatrix relation_matrix(Graph const& g);

K0Data k0_of_graph(Graph const& g);

K0Class class_in_k0(K0Data const& k0, MonoidElement const& a);
K0Class class_in_k0(Graph const& g, MonoidElement const& a);

// The integers m with target = m * generator, as {base + j * step : j in Z}.
// step == 0 means the solution is unique; otherwise 0 <= base < step.
struct MultiplierSet {
  BigInt base;
  BigInt step;

  bool contains(BigInt const& m) const;
  // Smallest member >= lower; nullopt if none (unique solution below lower).
  std::optional<BigInt> first_at_least(BigInt const& lower) const;
};

std::optional<MultiplierSet> solve_multiplier(K0Data const& k0, K0Class const& target,
                                              K0Class const& generator);

struct UnitGeneration {
  bool generates = false;
  // When generates: class(v) = multipliers[v] * unit_class for every vertex.
  std::vector<BigInt> multipliers;
};

// Whether [1_E] generates K0. Vertex classes generate the group, so it
// suffices that each one is an integer multiple of the unit class.
UnitGeneration unit_generates_k0(K0Data const& k0);
UnitGeneration unit_generates_k0(Graph const& g);

// K0 is finite cyclic (possibly trivial) and generated by the unit class.
bool is_finite_cyclic_with_unit_generator(K0Data const& k0);

}  // namespace leavitt
