#include "igrowth/errors.hpp"

namespace igrowth {

std::string ParseError::format(int line, const std::string& what) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace igrowth
