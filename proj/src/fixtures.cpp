#include "leavitt/fixtures.hpp"

#include <charconv>

#include "leavitt/error.hpp"

namespace leavitt::fixtures {

Graph e2() { return rose_graph(2); }

Graph e2_minus() {
  return Graph({"u", "v", "w"}, {{"u", "u"},
                                 {"u", "u"},
                                 {"u", "v"},
                                 {"v", "u"},
                                 {"v", "v"},
                                 {"v", "w"},
                                 {"w", "v"},
                                 {"w", "w"}});
}

Graph ex34_1() {
  return Graph({"u", "v", "z"}, {{"u", "v"},
                                 {"u", "z"},
                                 {"v", "v"},
                                 {"v", "u"},
                                 {"z", "z"},
                                 {"z", "u"}});
}

Graph ex34_2() {
  return Graph({"v", "z"}, {{"v", "v"}, {"v", "z"}, {"z", "z"}, {"z", "z"}});
}

Graph ex36() { return Graph({"u", "v"}, {{"u", "u"}, {"u", "v"}, {"v", "u"}}); }

namespace {

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Graph> by_name(std::string_view name) {
  if (name == "e2") return e2();
  if (name == "e2-minus") return e2_minus();
  if (name == "ex34-1") return ex34_1();
  if (name == "ex34-2") return ex34_2();
  if (name == "ex36") return ex36();
  if (name.starts_with("rose")) {
    auto n = parse_count(name.substr(4));
    if (!n) throw InvalidParameter("malformed rose fixture '" + std::string(name) + "'");
    return rose_graph(*n);
  }
  if (name.starts_with("matrix-")) {
    auto rest = name.substr(7);
    auto dash = rest.find('-');
    if (dash == std::string_view::npos) {
      throw InvalidParameter("malformed matrix fixture '" + std::string(name) +
                             "' (expected matrix-<d>-<n>)");
    }
    auto d = parse_count(rest.substr(0, dash));
    auto n = parse_count(rest.substr(dash + 1));
    if (!d || !n) {
      throw InvalidParameter("malformed matrix fixture '" + std::string(name) + "'");
    }
    return matrix_graph(*d, *n);
  }
  return std::nullopt;
}

std::vector<std::string> catalogue() {
  return {"e2", "e2-minus", "rose0", "rose1", "rose<N>", "matrix-<d>-<n>",
          "ex34-1", "ex34-2", "ex36"};
}

}  // namespace leavitt::fixtures
