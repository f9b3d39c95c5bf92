#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igrowth/subgroup_enum.hpp"

namespace igrowth {

enum class SubgroupClass { All, Normal, MaxNormal };

std::string to_string(SubgroupClass c);
std::optional<SubgroupClass> subgroup_class_from_string(const std::string& text);

// One table row: the growth value i at n, and the order of the intersection
// subgroup behind it (i * lambda_order == |G|).
struct GrowthRow {
  int n = 0;
  BigNat index;
  BigNat lambda_order;
};

struct GrowthTable {
  std::string group;
  SubgroupClass cls = SubgroupClass::All;
  std::vector<GrowthRow> rows;  // n = 1..n_max in order
};

enum class TablePath { Incremental, FromScratch };

// Intersection of every class member of index at most n; the intersection of
// no subgroups is the whole group.
Subgroup lambda_subgroup(const PermGroup& g, int n, SubgroupClass c, const EnumOptions& opt = {});

// The index of lambda_subgroup, i.e. the growth value at n.
BigNat intersection_growth(const PermGroup& g, int n, SubgroupClass c, const EnumOptions& opt = {});

// Rows for n = 1..n_max. Incremental reuses one enumeration across rows;
// FromScratch recomputes each row independently. Both give identical tables.
GrowthTable growth_table(const PermGroup& g, int n_max, SubgroupClass c,
                         const EnumOptions& opt = {}, TablePath path = TablePath::Incremental);

// The (n, value) pairs where the growth value strictly increases.
std::vector<std::pair<int, BigNat>> jump_points(const GrowthTable& table);

std::string to_csv(const GrowthTable& table);
std::string to_json_string(const GrowthTable& table);

}  // namespace igrowth
