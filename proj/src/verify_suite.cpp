#include "igrowth/verify_suite.hpp"

#include <functional>

#include "igrowth/alt_product.hpp"
#include "igrowth/intersection_growth.hpp"

namespace igrowth {

namespace {

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    VerifyCheck entry;
    entry.name = name;
    try {
      auto [passed, detail] = body();
      entry.passed = passed;
      entry.detail = std::move(detail);
    } catch (const std::exception& e) {
      entry.passed = false;
      entry.detail = std::string("exception: ") + e.what();
    }
    report_.all_passed = report_.all_passed && entry.passed;
    report_.checks.push_back(std::move(entry));
  }

 private:
  VerifyReport& report_;
};

std::pair<bool, std::string> ok() { return {true, ""}; }
std::pair<bool, std::string> fail(std::string detail) { return {false, std::move(detail)}; }

// i(n) with n clamped to the range where the table is defined; above its
// order a group's growth is constant.
BigNat growth_clamped(const GrowthTable& table, int n) {
  int idx = std::min<int>(n, static_cast<int>(table.rows.size()));
  return table.rows[static_cast<std::size_t>(idx - 1)].index;
}

std::pair<bool, std::string> multiplicative_pair(const PermGroup& a, const PermGroup& b,
                                                 SubgroupClass c, const EnumOptions& opt) {
  PermGroup product = direct_product(a, b);
  const int n_top = static_cast<int>(product.order_u64());
  GrowthTable pt = growth_table(product, n_top, c, opt);
  GrowthTable at = growth_table(a, static_cast<int>(a.order_u64()), c, opt);
  GrowthTable bt = growth_table(b, static_cast<int>(b.order_u64()), c, opt);
  for (int n = 1; n <= n_top; ++n) {
    BigNat expected = growth_clamped(at, n) * growth_clamped(bt, n);
    BigNat got = pt.rows[static_cast<std::size_t>(n - 1)].index;
    if (expected != got)
      return fail(product.name() + " at n=" + std::to_string(n) + ": " + got.str() +
                  " != " + expected.str());
  }
  return ok();
}

std::pair<bool, std::string> strategies_agree(const PermGroup& g, int n, const EnumOptions& opt) {
  EnumOptions lattice_opt = opt;
  lattice_opt.strategy = EnumStrategy::Lattice;
  EnumOptions search_opt = opt;
  search_opt.strategy = EnumStrategy::CosetSearch;
  SubgroupList via_lattice = subgroups_up_to_index(g, n, lattice_opt);
  SubgroupList via_search = subgroups_up_to_index(g, n, search_opt);
  if (via_lattice.items.size() != via_search.items.size())
    return fail(g.name() + ": " + std::to_string(via_lattice.items.size()) + " vs " +
                std::to_string(via_search.items.size()) + " subgroups");
  for (std::size_t i = 0; i < via_lattice.items.size(); ++i)
    if (!via_lattice.items[i].same_subgroup_as(via_search.items[i]))
      return fail(g.name() + ": listing mismatch at position " + std::to_string(i));
  return ok();
}

std::pair<bool, std::string> table_properties(const PermGroup& g, const EnumOptions& opt) {
  const int n_top = static_cast<int>(g.order_u64());
  GrowthTable all = growth_table(g, n_top, SubgroupClass::All, opt);
  GrowthTable normal = growth_table(g, n_top, SubgroupClass::Normal, opt);
  GrowthTable maxn = growth_table(g, n_top, SubgroupClass::MaxNormal, opt);
  BigNat prev = 0;
  for (int n = 1; n <= n_top; ++n) {
    const auto& ra = all.rows[static_cast<std::size_t>(n - 1)];
    const auto& rn = normal.rows[static_cast<std::size_t>(n - 1)];
    const auto& rm = maxn.rows[static_cast<std::size_t>(n - 1)];
    if (ra.index * ra.lambda_order != g.order())
      return fail("index * lambda_order mismatch at n=" + std::to_string(n));
    if (ra.index < prev) return fail("growth not monotone at n=" + std::to_string(n));
    prev = ra.index;
    if (!(ra.index >= rn.index && rn.index >= rm.index))
      return fail("class ordering violated at n=" + std::to_string(n));
  }
  return ok();
}

}  // namespace

VerifyReport run_verification(VerifyLevel level, bool inject_failure, const EnumOptions& opt) {
  VerifyReport report;
  Runner runner(report);

  runner.check("factory orders match the textbook values", [&] {
    struct Row {
      PermGroup g;
      std::uint64_t expected;
    };
    const Row rows[] = {
        {PermGroup::alternating(5), 60},   {PermGroup::alternating(6), 360},
        {PermGroup::alternating(7), 2520}, {PermGroup::symmetric(4), 24},
        {PermGroup::dihedral(4), 8},       {PermGroup::cyclic(6), 6},
        {PermGroup::symmetric(3), 6},      {PermGroup::alternating(4), 12},
    };
    for (const Row& row : rows)
      if (row.g.order() != row.expected)
        return fail(row.g.name() + " order " + row.g.order().str());
    return ok();
  });

  runner.check("degree five: no subgroup of index below five, five at five", [&] {
    PermGroup a5 = PermGroup::alternating(5);
    if (subgroups_up_to_index(a5, 4, opt).items.size() != 1)
      return fail("proper subgroup of index <= 4 found");
    std::size_t at_five = 0;
    for (const Subgroup& s : subgroups_up_to_index(a5, 5, opt).items)
      if (s.index() == 5) ++at_five;
    if (at_five != 5) return fail(std::to_string(at_five) + " subgroups of index 5");
    return ok();
  });

  runner.check("lattice and search strategies list the same subgroups: S3",
               [&] { return strategies_agree(PermGroup::symmetric(3), 6, opt); });
  runner.check("lattice and search strategies list the same subgroups: A4",
               [&] { return strategies_agree(PermGroup::alternating(4), 7, opt); });

  runner.check("growth of a product is the product of growths: C2xC3, class all", [&] {
    return multiplicative_pair(PermGroup::cyclic(2), PermGroup::cyclic(3), SubgroupClass::All,
                               opt);
  });
  runner.check("growth of a product is the product of growths: C2xC2, class normal", [&] {
    return multiplicative_pair(PermGroup::cyclic(2), PermGroup::cyclic(2), SubgroupClass::Normal,
                               opt);
  });

  runner.check("table invariants hold: S4",
               [&] { return table_properties(PermGroup::symmetric(4), opt); });

  runner.check("incremental and from-scratch tables agree: S4, class all", [&] {
    PermGroup g = PermGroup::symmetric(4);
    GrowthTable inc = growth_table(g, 24, SubgroupClass::All, opt, TablePath::Incremental);
    GrowthTable scr = growth_table(g, 24, SubgroupClass::All, opt, TablePath::FromScratch);
    if (to_csv(inc) != to_csv(scr)) return fail("tables differ");
    return ok();
  });

  runner.check("built sequence for the identity target starts (5, 62)", [&] {
    AltSequence seq = build_sequence(GrowthFunction::identity(), 2);
    if (seq.term(0) != 5 || seq.term(1) != 62)
      return fail("(" + seq.term(0).str() + ", " + seq.term(1).str() + ")");
    SequenceReport check = verify_sequence_against(seq, GrowthFunction::identity());
    if (!check.all_passed) return fail("sequence inequalities failed");
    return ok();
  });

  runner.check("stricter literal bound fails already at the first step", [&] {
    AltSequence seq = build_sequence(GrowthFunction::identity(), 2);
    SequenceReport check = literal_min_checks(seq, GrowthFunction::identity());
    if (check.all_passed) return fail("literal bound unexpectedly satisfiable");
    return ok();
  });

  runner.check("closed form matches enumeration: single factor, n <= 5", [&] {
    AltSequence seq(std::vector<BigNat>{5, 6});
    ClosedFormReport r = verify_closed_form(seq, 1, 5, SubgroupClass::All, opt);
    if (!r.all_match) return fail("mismatch");
    return ok();
  });

  if (level == VerifyLevel::Full) {
    runner.check("closed form matches enumeration: two factors (5,6), class all, n <= 5", [&] {
      AltSequence seq(std::vector<BigNat>{5, 6});
      ClosedFormReport r = verify_closed_form(seq, 2, 5, SubgroupClass::All, opt);
      if (!r.all_match) return fail("mismatch");
      for (const ClosedFormRow& row : r.rows) {
        if (row.n == 4 && row.enumerated != 1) return fail("value at 4 is not 1");
        if (row.n == 5 && row.enumerated != 60) return fail("value at 5 is not 60");
      }
      return ok();
    });

    runner.check("closed form matches enumeration: two factors (5,6), class normal, n <= 5", [&] {
      AltSequence seq(std::vector<BigNat>{5, 6});
      ClosedFormReport r = verify_closed_form(seq, 2, 5, SubgroupClass::Normal, opt);
      if (!r.all_match) return fail("mismatch");
      return ok();
    });

    runner.check("minimal realized index equals the degree: alternating 5..7", [&] {
      const std::size_t expected_counts[] = {5, 12, 7};
      for (int m = 5; m <= 7; ++m) {
        PermGroup g = PermGroup::alternating(m);
        SubgroupList below = subgroups_up_to_index(g, m - 1, opt);
        if (below.items.size() != 1)
          return fail(g.name() + " has a proper subgroup of index < " + std::to_string(m));
        std::size_t at_m = 0;
        for (const Subgroup& s : subgroups_up_to_index(g, m, opt).items)
          if (s.index() == m) ++at_m;
        if (at_m != expected_counts[m - 5])
          return fail(g.name() + ": " + std::to_string(at_m) + " subgroups of index " +
                      std::to_string(m));
      }
      return ok();
    });

    runner.check("growth of a product is the product of growths: all pairs, both classes", [&] {
      const PermGroup groups[] = {PermGroup::cyclic(2), PermGroup::cyclic(3),
                                  PermGroup::symmetric(3), PermGroup::alternating(4)};
      for (const PermGroup& a : groups)
        for (const PermGroup& b : groups)
          for (SubgroupClass c : {SubgroupClass::All, SubgroupClass::Normal}) {
            auto [passed, detail] = multiplicative_pair(a, b, c, opt);
            if (!passed) return fail(detail + " (" + to_string(c) + ")");
          }
      return ok();
    });

    runner.check("built sequence for the identity target has exact third term", [&] {
      AltSequence seq = build_sequence(GrowthFunction::identity(), 3);
      BigNat expected = 60 * alt_order(62) + 2;
      if (seq.term(2) != expected) return fail("third term off");
      SequenceReport check = verify_sequence_against(seq, GrowthFunction::identity());
      if (!check.all_passed) return fail("sequence inequalities failed");
      return ok();
    });

    runner.check("incremental and from-scratch tables agree on the search path: C6", [&] {
      EnumOptions search_opt = opt;
      search_opt.strategy = EnumStrategy::CosetSearch;
      PermGroup g = PermGroup::cyclic(6);
      GrowthTable inc = growth_table(g, 6, SubgroupClass::All, search_opt, TablePath::Incremental);
      GrowthTable scr = growth_table(g, 6, SubgroupClass::All, search_opt, TablePath::FromScratch);
      if (to_csv(inc) != to_csv(scr)) return fail("tables differ");
      return ok();
    });
  }

  if (inject_failure)
    runner.check("injected failure for reporting self-test",
                 [&]() -> std::pair<bool, std::string> { return fail("requested via flag"); });

  return report;
}

}  // namespace igrowth
