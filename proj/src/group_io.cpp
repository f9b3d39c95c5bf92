#include "igrowth/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "igrowth/errors.hpp"

namespace igrowth {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string path_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

PermGroup parse_group_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trimmed(line);
    if (body.empty() || body[0] == '#') continue;
    if (degree < 0) {
      std::istringstream header(body);
      std::string keyword;
      long value = -1;
      header >> keyword >> value;
      std::string rest;
      header >> rest;
      if (keyword != "degree" || value < 1 || value > 10000 || !rest.empty())
        throw ParseError(line_no, "expected header 'degree N' with 1 <= N <= 10000");
      degree = static_cast<int>(value);
      continue;
    }
    try {
      gens.push_back(perm_from_cycles(body, degree));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (degree < 0) throw ParseError(line_no, "missing 'degree N' header");
  return PermGroup(degree, std::move(gens), name);
}

PermGroup read_group_file(const std::string& path) {
  return parse_group_text(read_file(path), path_stem(path));
}

std::vector<BigNat> parse_sequence_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<BigNat> terms;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trimmed(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      terms.push_back(parse_bignat(body));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (terms.empty()) throw ParseError(line_no, "sequence file has no terms");
  return terms;
}

std::vector<BigNat> read_sequence_file(const std::string& path) {
  return parse_sequence_text(read_file(path));
}

}  // namespace igrowth
