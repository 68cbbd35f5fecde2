#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt::fixtures {

// One vertex u with two loops.
Graph e2();

// e2 with a Cuntz splice at u: vertices u, v, w; u has two loops and an edge
// to v; v has a loop and edges to u and w; w has a loop and an edge to v.
Graph e2_minus();

// u <-> v, u <-> z, loops at v and z. K0 is Z with the unit class 0.
Graph ex34_1();

// v with a loop and an edge to z; z with two loops. K0 is Z with unit 1.
Graph ex34_2();

// u with a loop and an edge to v; v with an edge back to u.
Graph ex36();

// Resolves a fixture name: e2, e2-minus, rose0, rose1, rose<N>,
// matrix-<d>-<n>, ex34-1, ex34-2, ex36. Returns nullopt for unknown names;
// throws InvalidParameter for malformed templated parameters.
std::optional<Graph> by_name(std::string_view name);

// Names accepted by by_name, with the templated ones shown as patterns.
std::vector<std::string> catalogue();

}  // namespace leavitt::fixtures
