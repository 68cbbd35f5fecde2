#include "leavitt/element_text.hpp"

#include <cctype>
#include <charconv>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

struct ParsedTerm {
  BigInt count;
  std::string name;
  Shift shift = 0;
};

class TermReader {
 public:
  TermReader(std::string_view text, bool graded) : text_(text), graded_(graded) {}

  // Calls emit(term) per summand. Returns false for the literal "0".
  template <class Emit>
  void read(Emit&& emit) {
    skip_space();
    if (at_end()) fail("empty element");
    if (peek_zero()) return;
    for (;;) {
      emit(term());
      skip_space();
      if (at_end()) return;
      expect('+');
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char cur() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(cur()))) ++pos_;
  }

  [[noreturn]] void fail(std::string const& why) const {
    throw ParseError(why + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void expect(char c) {
    skip_space();
    if (at_end() || cur() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_zero() {
    std::size_t p = pos_;
    if (text_[p] != '0') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p != text_.size()) return false;
    pos_ = p;
    return true;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }

  ParsedTerm term() {
    skip_space();
    ParsedTerm t{1, {}, 0};
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(cur()))) ++pos_;
    if (pos_ > start) {
      t.count = BigInt(std::string(text_.substr(start, pos_ - start)));
      skip_space();
      if (!at_end() && cur() == '*') {
        ++pos_;
        skip_space();
      }
    }
    start = pos_;
    if (at_end() || std::isdigit(static_cast<unsigned char>(cur())) || !name_char(cur())) fail("expected a vertex name");
    while (!at_end() && name_char(cur())) ++pos_;
    t.name = std::string(text_.substr(start, pos_ - start));
    skip_space();
    if (!at_end() && cur() == '(') {
      if (!graded_) fail("shifts are only allowed in graded elements");
      ++pos_;
      skip_space();
      start = pos_;
      if (!at_end() && (cur() == '-' || cur() == '+')) ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(cur()))) ++pos_;
      std::string_view digits = text_.substr(start, pos_ - start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.shift);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) fail("expected an integer shift");
      expect(')');
    }
    if (t.count == 0) fail("zero coefficient");
    return t;
  }

  std::string_view text_;
  bool graded_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(BigInt const& n) { return n == 1 ? std::string() : to_string(n); }

}  // namespace

MonoidElement parse_element(Graph const& g, std::string_view text) {
  MonoidElement a;
  TermReader(text, false).read([&](ParsedTerm const& t) { a.add(g.id(t.name), t.count); });
  return a;
}

std::string format_element(Graph const& g, MonoidElement const& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto const& t : a.terms()) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(t.count) + g.name(t.vertex);
  }
  return out;
}

GradedElement parse_graded_element(Graph const& g, std::string_view text) {
  GradedElement a;
  TermReader(text, true).read([&](ParsedTerm const& t) { a.add(g.id(t.name), t.shift, t.count); });
  return a;
}

std::string format_graded_element(Graph const& g, GradedElement const& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto const& t : a.terms()) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(t.count) + g.name(t.vertex);
    if (t.shift != 0) out += "(" + std::to_string(t.shift) + ")";
  }
  return out;
}

}  // namespace leavitt
