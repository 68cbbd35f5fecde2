#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

// Base of every exception raised by the library. Callers that only need to
// report a diagnostic can catch this and print what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DanglingEdge : public Error {
 public:
  using Error::Error;
};

class DuplicateVertex : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class VertexNotOnCycle : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

// Raised by operations whose domain excludes the zero element.
class ZeroElement : public Error {
 public:
  using Error::Error;
};

// Exhaustive subset search refused: the graph exceeds the enumeration cap.
class GraphTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Serre property holds on a multi-vertex graph, but the purely infinite
// simple conditions or the (Z/nZ, 1) shape of K0 fail. Either the engine has
// a bug or the graph is a counterexample; evidence() carries the full dump.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string const& what, std::string evidence)
      : Error(what), evidence_(std::move(evidence)) {}
  std::string const& evidence() const noexcept { return evidence_; }

 private:
  std::string evidence_;
};

}  // namespace leavitt
