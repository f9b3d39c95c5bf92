#include "igrowth/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace igrowth {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int img : images_) {
    if (img < 0 || img >= degree() || seen[static_cast<std::size_t>(img)])
      throw std::invalid_argument("image table is not a bijection");
    seen[static_cast<std::size_t>(img)] = 1;
  }
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  return Perm(std::move(inv));
}

BigNat Perm::order() const {
  BigNat result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = images_[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = 1;
      ++len;
    }
    result = boost::multiprecision::lcm(result, BigNat(len));
  }
  return result;
}

Perm Perm::extended(int new_degree) const {
  if (new_degree < degree()) throw std::invalid_argument("extended: new degree smaller than current");
  std::vector<int> images(static_cast<std::size_t>(new_degree));
  std::iota(images.begin(), images.end(), 0);
  std::copy(images_.begin(), images_.end(), images.begin());
  return Perm(std::move(images));
}

Perm Perm::shifted(int offset, int new_degree) const {
  if (offset < 0 || offset + degree() > new_degree)
    throw std::invalid_argument("shifted: domain does not fit in new degree");
  std::vector<int> images(static_cast<std::size_t>(new_degree));
  std::iota(images.begin(), images.end(), 0);
  for (int x = 0; x < degree(); ++x)
    images[static_cast<std::size_t>(offset + x)] = offset + images_[static_cast<std::size_t>(x)];
  return Perm(std::move(images));
}

Perm Perm::restricted(int new_degree) const {
  if (new_degree < 1 || new_degree > degree())
    throw std::invalid_argument("restricted: bad degree");
  for (int x = 0; x < new_degree; ++x)
    if (images_[static_cast<std::size_t>(x)] >= new_degree)
      throw std::invalid_argument("restricted: prefix is not invariant");
  return Perm(std::vector<int>(images_.begin(), images_.begin() + new_degree));
}

int Perm::smallest_moved() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return x;
  return degree();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(x)] = p[q[x]];
  return Perm(std::move(images));
}

std::string to_cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)] || p[x] == x) continue;
    out += '(';
    bool first = true;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p[y]) {
      seen[static_cast<std::size_t>(y)] = 1;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm perm_from_cycles(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_soft = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_soft();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_soft();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle notation");
      int point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        if (point > degree) throw std::invalid_argument("point out of range: " + std::to_string(point));
        ++i;
      }
      if (point < 1 || point > degree)
        throw std::invalid_argument("point out of range: " + std::to_string(point));
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end())
        throw std::invalid_argument("point repeated inside a cycle: " + std::to_string(point));
      cycle.push_back(point - 1);
      skip_soft();
    }
    if (i >= text.size()) throw std::invalid_argument("unclosed cycle");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_soft();
  }
  if (text.find('(') == std::string::npos)
    throw std::invalid_argument("expected cycle notation, found none");
  // result = c1 * c2 * ... * ck; with (p * q)(x) = p(q(x)) the rightmost
  // cycle acts first, as documented.
  Perm result{degree};
  for (const auto& cycle : cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
    result = result * Perm(std::move(images));
  }
  return result;
}

}  // namespace igrowth
