#include "igrowth/intersection_growth.hpp"

#include <json.hpp>

#include <stdexcept>

namespace igrowth {

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::All:
      return "all";
    case SubgroupClass::Normal:
      return "normal";
    case SubgroupClass::MaxNormal:
      return "maxnormal";
  }
  return "?";
}

std::optional<SubgroupClass> subgroup_class_from_string(const std::string& text) {
  if (text == "all") return SubgroupClass::All;
  if (text == "normal") return SubgroupClass::Normal;
  if (text == "maxnormal") return SubgroupClass::MaxNormal;
  return std::nullopt;
}

namespace {

SubgroupList class_members(const PermGroup& g, int n, SubgroupClass c, const EnumOptions& opt) {
  switch (c) {
    case SubgroupClass::All:
      return subgroups_up_to_index(g, n, opt);
    case SubgroupClass::Normal:
      return normal_subgroups_up_to_index(g, n, opt);
    case SubgroupClass::MaxNormal: {
      SubgroupList all = maximal_normal_subgroups(g, opt);
      SubgroupList bounded{g, all.tag, {}};
      for (const Subgroup& s : all.items)
        if (s.index() <= n) bounded.items.push_back(s);
      return bounded;
    }
  }
  throw std::logic_error("unreachable subgroup class");
}

}  // namespace

Subgroup lambda_subgroup(const PermGroup& g, int n, SubgroupClass c, const EnumOptions& opt) {
  if (n < 1) throw std::invalid_argument("growth argument must be >= 1");
  Subgroup lambda = Subgroup::whole(g);
  for (const Subgroup& s : class_members(g, n, c, opt).items) {
    if (lambda.is_trivial()) break;
    lambda = intersect(lambda, s);
  }
  return lambda;
}

BigNat intersection_growth(const PermGroup& g, int n, SubgroupClass c, const EnumOptions& opt) {
  return lambda_subgroup(g, n, c, opt).index();
}

GrowthTable growth_table(const PermGroup& g, int n_max, SubgroupClass c, const EnumOptions& opt,
                         TablePath path) {
  if (n_max < 1) throw std::invalid_argument("growth table needs n_max >= 1");
  GrowthTable table;
  table.group = g.name();
  table.cls = c;
  table.rows.reserve(static_cast<std::size_t>(n_max));

  if (path == TablePath::FromScratch) {
    for (int n = 1; n <= n_max; ++n) {
      Subgroup lambda = lambda_subgroup(g, n, c, opt);
      table.rows.push_back({n, lambda.index(), lambda.order()});
    }
    return table;
  }

  // Incremental: enumerate once at the top bound, then sweep n upward,
  // folding in the members that become visible at each step.
  SubgroupList members = class_members(g, n_max, c, opt);
  std::size_t next = 0;  // members are sorted by ascending index
  Subgroup lambda = Subgroup::whole(g);
  for (int n = 1; n <= n_max; ++n) {
    while (next < members.items.size() && members.items[next].index() <= n) {
      if (!lambda.is_trivial()) lambda = intersect(lambda, members.items[next]);
      ++next;
    }
    table.rows.push_back({n, lambda.index(), lambda.order()});
  }
  return table;
}

std::vector<std::pair<int, BigNat>> jump_points(const GrowthTable& table) {
  std::vector<std::pair<int, BigNat>> jumps;
  BigNat previous = 1;
  for (const GrowthRow& row : table.rows) {
    if (row.index > previous) jumps.emplace_back(row.n, row.index);
    previous = row.index;
  }
  return jumps;
}

std::string to_csv(const GrowthTable& table) {
  std::string out = "n,i,lambda_order\n";
  for (const GrowthRow& row : table.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += row.index.str();
    out += ',';
    out += row.lambda_order.str();
    out += '\n';
  }
  return out;
}

std::string to_json_string(const GrowthTable& table) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["group"] = table.group;
  doc["class"] = to_string(table.cls);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const GrowthRow& row : table.rows) {
    nlohmann::ordered_json entry;
    entry["n"] = row.n;
    entry["i"] = row.index.str();
    entry["lambda_order"] = row.lambda_order.str();
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace igrowth
