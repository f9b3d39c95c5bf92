#pragma once

#include <stdexcept>
#include <string>

namespace igrowth {

// An input was structurally valid but outside the configured exact-computation
// limits. Callers distinguish this from a wrong answer: nothing approximate is
// ever returned.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or literal. Carries the 1-based line number when the
// source is line oriented (0 when it is not).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(format(line, what)), line_(line) {}
  int line() const { return line_; }

 private:
  static std::string format(int line, const std::string& what);
  int line_;
};

}  // namespace igrowth
