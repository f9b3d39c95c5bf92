#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igrowth/subgroup.hpp"

namespace igrowth {

enum class ExecMode { Serial, Parallel };

enum class EnumStrategy {
  Auto,         // full lattice when the order allows it, else coset search
  Lattice,      // force the join-closure lattice (CapacityError over the cap)
  CosetSearch,  // force the transitive-action search (bounded by index cap)
};

struct EnumOptions {
  EnumStrategy strategy = EnumStrategy::Auto;
  std::uint64_t lattice_order_cap = 2000;  // largest order enumerated in full
  int search_index_cap = 7;                // largest index the search accepts
  ExecMode exec = ExecMode::Parallel;
};

// What a SubgroupList is complete for.
struct CompletenessTag {
  enum class Kind { FullLattice, UpToIndex, NormalOnly, MaxNormalOnly };
  Kind kind = Kind::FullLattice;
  int bound = 0;  // index bound for UpToIndex and NormalOnly
};

std::string to_string(const CompletenessTag& tag);

// Distinct subgroups of one ambient group, deterministically ordered by
// ascending index and then by element set.
struct SubgroupList {
  PermGroup ambient;
  CompletenessTag tag;
  std::vector<Subgroup> items;
};

// Every subgroup. CapacityError when order() exceeds the lattice cap.
SubgroupList all_subgroups(const PermGroup& g, const EnumOptions& opt = {});

// Every subgroup of index at most n (n >= 1; the whole group is index 1).
SubgroupList subgroups_up_to_index(const PermGroup& g, int n, const EnumOptions& opt = {});

// Every normal subgroup of index at most n.
SubgroupList normal_subgroups_up_to_index(const PermGroup& g, int n, const EnumOptions& opt = {});

// Every maximal proper normal subgroup. Groups assembled from factors known
// to be nonabelian simple are read off structurally; anything else goes
// through the lattice.
SubgroupList maximal_normal_subgroups(const PermGroup& g, const EnumOptions& opt = {});

}  // namespace igrowth
