#pragma once

#include <string>
#include <vector>

#include "igrowth/bignat.hpp"
#include "igrowth/perm_group.hpp"

namespace igrowth {

// Group file format: a header line "degree N", then one generator per line in
// 1-based cycle notation. Blank lines and lines starting with '#' are
// ignored. Throws ParseError with the offending line number.
PermGroup parse_group_text(const std::string& text, const std::string& name = "");
PermGroup read_group_file(const std::string& path);

// Sequence file format: one nonnegative decimal integer per line, same
// comment and blank-line rules. Validation of the sequence itself (first
// term, monotonicity) is the caller's concern.
std::vector<BigNat> parse_sequence_text(const std::string& text);
std::vector<BigNat> read_sequence_file(const std::string& path);

// Base name of a path without directory or extension, used to label output.
std::string path_stem(const std::string& path);

}  // namespace igrowth
