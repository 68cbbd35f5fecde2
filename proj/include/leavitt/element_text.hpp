#pragma once

#include <string>
#include <string_view>

#include "leavitt/element.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/talented.hpp"

namespace leavitt {

// "2u + v + 3w", "0", optionally "2*u". Repeated vertices accumulate.
// Throws ParseError on malformed text and UnknownVertex on a name not in g.
MonoidElement parse_element(Graph const& g, std::string_view text);
std::string format_element(Graph const& g, MonoidElement const& a);

// "u(1) + 2v(-1)"; a bare name means shift 0.
GradedElement parse_graded_element(Graph const& g, std::string_view text);
std::string format_graded_element(Graph const& g, GradedElement const& a);

}  // namespace leavitt
