#pragma once

#include <vector>

#include "igrowth/perm_group.hpp"

namespace igrowth {

// The subgroup generated by a list of elements, found by keeping only the
// elements that enlarge the generated group. At most log2(order) survive.
PermGroup generated_by(int degree, const std::vector<Perm>& elements, std::string name = "");

// A subgroup of a fixed ambient group. Generators are checked to lie in the
// ambient group; order and index come from the subgroup's own chain.
class Subgroup {
 public:
  Subgroup(PermGroup ambient, std::vector<Perm> generators);

  static Subgroup whole(const PermGroup& g);
  static Subgroup trivial_of(const PermGroup& g);

  const PermGroup& ambient() const { return ambient_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Perm>& generators() const { return group_.generators(); }
  const BigNat& order() const { return group_.order(); }
  const BigNat& index() const { return index_; }

  bool contains(const Perm& p) const { return group_.contains(p); }
  bool is_whole() const { return index_ == 1; }
  bool is_trivial() const { return group_.is_trivial(); }

  // Equality as subsets of the ambient group.
  bool same_subgroup_as(const Subgroup& other) const;

 private:
  PermGroup ambient_;
  PermGroup group_;
  BigNat index_;
};

// All of these require the arguments to share one ambient group (checked).
Subgroup intersect(const Subgroup& h, const Subgroup& k);
Subgroup conjugate(const Subgroup& h, const Perm& g);
bool is_normal(const Subgroup& h);

// Largest normal subgroup of the ambient group inside h: the intersection of
// all conjugates of h.
Subgroup normal_core(const Subgroup& h);

}  // namespace igrowth
