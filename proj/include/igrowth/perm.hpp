#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "igrowth/bignat.hpp"

namespace igrowth {

// A permutation of {0, ..., degree-1} stored as its image table.
//
// Composition convention: (p * q)(x) = p[q[x]], i.e. the right factor acts
// first. Cycle notation is 1-based on both input and output, and in a product
// of cycles the rightmost cycle acts first, matching operator*.
class Perm {
 public:
  explicit Perm(int degree);              // identity
  explicit Perm(std::vector<int> images);  // validates a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }

  bool is_identity() const;
  Perm inverse() const;
  BigNat order() const;  // lcm of cycle lengths

  // Same mapping on the original points, identity on [degree, new_degree).
  Perm extended(int new_degree) const;
  // Same mapping shifted to act on [offset, offset + degree).
  Perm shifted(int offset, int new_degree) const;
  // Restriction to {0, ..., new_degree-1}; the prefix must be invariant.
  Perm restricted(int new_degree) const;

  int smallest_moved() const;  // degree() if identity

  bool operator==(const Perm& other) const { return images_ == other.images_; }
  bool operator!=(const Perm& other) const { return images_ != other.images_; }
  bool operator<(const Perm& other) const { return images_ < other.images_; }

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

Perm operator*(const Perm& p, const Perm& q);

// Disjoint-cycle form, 1-based, e.g. "(1 2 3)(4 5)"; "()" for the identity.
std::string to_cycle_string(const Perm& p);

// Parses a product of 1-based cycles, e.g. "(1 2 3)(4 5)". Cycles need not be
// disjoint; the rightmost cycle acts first. Whitespace and commas both
// separate points. Throws std::invalid_argument on malformed text.
Perm perm_from_cycles(const std::string& text, int degree);

}  // namespace igrowth
