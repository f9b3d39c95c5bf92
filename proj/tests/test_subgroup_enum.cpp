#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "igrowth/errors.hpp"
#include "igrowth/perm_group.hpp"
#include "igrowth/subgroup.hpp"
#include "igrowth/subgroup_enum.hpp"

using namespace igrowth;

namespace {

EnumOptions with_strategy(EnumStrategy s, ExecMode exec = ExecMode::Parallel) {
    EnumOptions opt;
    opt.strategy = s;
    opt.exec = exec;
    return opt;
}

// Sorted element sets, usable as a set-of-subgroups key for small groups.
std::set<std::vector<Perm>> element_sets(const SubgroupList& list) {
    std::set<std::vector<Perm>> keys;
    for (const Subgroup& s : list.items) {
        std::vector<Perm> elems = s.group().elements();
        std::sort(elems.begin(), elems.end());
        keys.insert(std::move(elems));
    }
    return keys;
}

void check_same_lists(const SubgroupList& a, const SubgroupList& b) {
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].same_subgroup_as(b.items[i]));
    }
}

}  // namespace

TEST_CASE("full lattice sizes match the classical subgroup counts") {
    struct Expected {
        PermGroup group;
        std::size_t count;
    };
    const Expected cases[] = {
        {PermGroup::trivial(), 1},
        {PermGroup::cyclic(2), 2},
        {PermGroup::cyclic(6), 4},       // 1, C2, C3, C6
        {PermGroup::cyclic(12), 6},      // one per divisor of 12
        {PermGroup::symmetric(3), 6},    // 1, three C2, C3, S3
        {direct_product(PermGroup::cyclic(2), PermGroup::cyclic(2)), 5},
        {PermGroup::alternating(4), 10},
        {PermGroup::dihedral(4), 10},
        {PermGroup::symmetric(4), 30},
        {PermGroup::alternating(5), 59},
    };
    for (const Expected& c : cases) {
        SubgroupList list = all_subgroups(c.group);
        CHECK(list.items.size() == c.count);
        CHECK(list.tag.kind == CompletenessTag::Kind::FullLattice);
        // No duplicates: the element-set keys are pairwise distinct.
        CHECK(element_sets(list).size() == c.count);
    }
}

TEST_CASE("lattice is closed under extension by any single element") {
    // If extending every listed subgroup by every group element lands back in
    // the list, the list is join-closed and hence complete: any subgroup is
    // reachable from the trivial one by adding its own elements one at a time.
    const PermGroup groups[] = {
        PermGroup::symmetric(3),
        direct_product(PermGroup::cyclic(2), PermGroup::cyclic(2)),
        PermGroup::dihedral(4),
        PermGroup::alternating(4),
    };
    for (const PermGroup& g : groups) {
        SubgroupList list = all_subgroups(g);
        std::set<std::vector<Perm>> keys = element_sets(list);
        for (const Subgroup& s : list.items) {
            for (const Perm& x : g.elements()) {
                std::vector<Perm> gens = s.generators();
                gens.push_back(x);
                PermGroup bigger = generated_by(g.degree(), gens);
                std::vector<Perm> key = bigger.elements();
                std::sort(key.begin(), key.end());
                CHECK(keys.count(key) == 1);
            }
        }
    }
}

TEST_CASE("lattice output is sorted by index and deduplicated") {
    SubgroupList list = all_subgroups(PermGroup::symmetric(4));
    for (std::size_t i = 1; i < list.items.size(); ++i) {
        CHECK(list.items[i - 1].index() <= list.items[i].index());
    }
    for (std::size_t i = 0; i < list.items.size(); ++i) {
        for (std::size_t j = i + 1; j < list.items.size(); ++j) {
            CHECK_FALSE(list.items[i].same_subgroup_as(list.items[j]));
        }
    }
}

TEST_CASE("index-bounded enumeration agrees with the filtered lattice") {
    PermGroup s4 = PermGroup::symmetric(4);
    SubgroupList all = all_subgroups(s4);
    for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
        SubgroupList filtered{s4, {}, {}};
        for (const Subgroup& s : all.items) {
            if (s.index() <= n) filtered.items.push_back(s);
        }
        // The search cap is 7; force the lattice for larger bounds.
        EnumOptions opt;
        if (n > 7) opt.strategy = EnumStrategy::Lattice;
        SubgroupList bounded = subgroups_up_to_index(s4, n, opt);
        CHECK(bounded.tag.kind == CompletenessTag::Kind::UpToIndex);
        CHECK(bounded.tag.bound == n);
        check_same_lists(bounded, filtered);
    }
    // S4 has exactly 1 + 1 + 3 + 4 subgroups of index at most 4.
    CHECK(subgroups_up_to_index(s4, 4).items.size() == 9);
}

TEST_CASE("coset search and lattice find the same bounded subgroups") {
    const PermGroup groups[] = {
        PermGroup::cyclic(2),
        PermGroup::cyclic(6),
        PermGroup::symmetric(3),
        PermGroup::alternating(4),
        PermGroup::dihedral(4),
        direct_product(PermGroup::symmetric(3), PermGroup::cyclic(2)),
    };
    for (const PermGroup& g : groups) {
        const int n = static_cast<int>(std::min<std::uint64_t>(g.order_u64(), 7));
        SubgroupList via_lattice =
            subgroups_up_to_index(g, n, with_strategy(EnumStrategy::Lattice));
        SubgroupList via_search =
            subgroups_up_to_index(g, n, with_strategy(EnumStrategy::CosetSearch));
        check_same_lists(via_lattice, via_search);
    }
}

TEST_CASE("alternating groups have no subgroup of small index") {
    // Index below the degree is impossible for these groups, and the
    // index-equal-to-degree subgroups include the point stabilizers.
    PermGroup a5 = PermGroup::alternating(5);
    SubgroupList a5small = subgroups_up_to_index(a5, 4);
    REQUIRE(a5small.items.size() == 1);
    CHECK(a5small.items[0].is_whole());
    SubgroupList a5five = subgroups_up_to_index(a5, 5);
    CHECK(a5five.items.size() == 6);  // whole group + 5 point stabilizers
}

TEST_CASE("serial and parallel enumeration agree element for element") {
    PermGroup s4 = PermGroup::symmetric(4);
    check_same_lists(
        all_subgroups(s4, with_strategy(EnumStrategy::Lattice, ExecMode::Serial)),
        all_subgroups(s4, with_strategy(EnumStrategy::Lattice, ExecMode::Parallel)));

    PermGroup a5 = PermGroup::alternating(5);
    check_same_lists(
        all_subgroups(a5, with_strategy(EnumStrategy::Lattice, ExecMode::Serial)),
        all_subgroups(a5, with_strategy(EnumStrategy::Lattice, ExecMode::Parallel)));
    check_same_lists(
        subgroups_up_to_index(a5, 6,
                              with_strategy(EnumStrategy::CosetSearch, ExecMode::Serial)),
        subgroups_up_to_index(a5, 6,
                              with_strategy(EnumStrategy::CosetSearch, ExecMode::Parallel)));
}

TEST_CASE("repeated enumeration is served from the cache") {
    PermGroup a5 = PermGroup::alternating(5);
    SubgroupList first = all_subgroups(a5);
    SubgroupList second = all_subgroups(a5);
    REQUIRE(first.items.size() == second.items.size());
    // Same shared representation, not merely equal content.
    for (std::size_t i = 0; i < first.items.size(); ++i) {
        CHECK(first.items[i].group().same_underlying(second.items[i].group()));
    }
}

TEST_CASE("normal subgroup enumeration") {
    PermGroup s4 = PermGroup::symmetric(4);
    SubgroupList normals = normal_subgroups_up_to_index(s4, 24);
    REQUIRE(normals.items.size() == 4);  // 1, V4, A4, S4
    CHECK(normals.tag.kind == CompletenessTag::Kind::NormalOnly);
    for (const Subgroup& s : normals.items) CHECK(is_normal(s));
    CHECK(normals.items[0].index() == 1);
    CHECK(normals.items[1].index() == 2);
    CHECK(normals.items[2].index() == 6);
    CHECK(normals.items[3].index() == 24);

    // The index bound filters the same list.
    CHECK(normal_subgroups_up_to_index(s4, 2).items.size() == 2);
    CHECK(normal_subgroups_up_to_index(s4, 5).items.size() == 2);
    CHECK(normal_subgroups_up_to_index(s4, 6).items.size() == 3);

    PermGroup a4 = PermGroup::alternating(4);
    CHECK(normal_subgroups_up_to_index(a4, 12).items.size() == 3);  // 1, V4, A4

    // A simple group has only the two obvious normal subgroups.
    PermGroup a5 = PermGroup::alternating(5);
    CHECK(normal_subgroups_up_to_index(a5, 60).items.size() == 2);
}

TEST_CASE("maximal normal subgroups of small groups") {
    SubgroupList s4max = maximal_normal_subgroups(PermGroup::symmetric(4));
    REQUIRE(s4max.items.size() == 1);
    CHECK(s4max.items[0].index() == 2);
    CHECK(s4max.tag.kind == CompletenessTag::Kind::MaxNormalOnly);

    SubgroupList a4max = maximal_normal_subgroups(PermGroup::alternating(4));
    REQUIRE(a4max.items.size() == 1);
    CHECK(a4max.items[0].order() == 4);

    // C6 has two maximal normal subgroups, of index 2 and 3.
    SubgroupList c6max = maximal_normal_subgroups(PermGroup::cyclic(6));
    REQUIRE(c6max.items.size() == 2);
    CHECK(c6max.items[0].index() == 2);
    CHECK(c6max.items[1].index() == 3);

    // In C2 x C2 all three proper nontrivial subgroups are maximal normal.
    SubgroupList vmax = maximal_normal_subgroups(
        direct_product(PermGroup::cyclic(2), PermGroup::cyclic(2)));
    CHECK(vmax.items.size() == 3);

    // A simple group's only maximal normal subgroup is the trivial one.
    SubgroupList a5max = maximal_normal_subgroups(PermGroup::alternating(5));
    REQUIRE(a5max.items.size() == 1);
    CHECK(a5max.items[0].is_trivial());

    // The trivial group has no proper subgroup at all.
    CHECK(maximal_normal_subgroups(PermGroup::trivial()).items.empty());
}

TEST_CASE("structural maximal normals match the generic lattice path") {
    // Stripping the factory metadata forces the generic path; the structural
    // shortcut for known-simple groups must produce the same answer.
    PermGroup a5 = PermGroup::alternating(5);
    PermGroup a5_raw(a5.degree(), a5.generators(), "A5raw");
    CHECK_FALSE(a5_raw.known_simple());
    SubgroupList fast = maximal_normal_subgroups(a5);
    SubgroupList slow = maximal_normal_subgroups(a5_raw);
    REQUIRE(fast.items.size() == slow.items.size());
    CHECK(fast.items[0].order() == slow.items[0].order());
}

TEST_CASE("maximal normal subgroups of a product of simple groups") {
    PermGroup g = direct_product(PermGroup::alternating(5),
                                 PermGroup::alternating(6));
    SubgroupList maxes = maximal_normal_subgroups(g);
    REQUIRE(maxes.items.size() == 2);
    // Sorted by index: A5 x 1 has index 360, 1 x A6 has index 60.
    CHECK(maxes.items[0].index() == 60);
    CHECK(maxes.items[0].order() == 360);
    CHECK(maxes.items[1].index() == 360);
    CHECK(maxes.items[1].order() == 60);
    for (const Subgroup& s : maxes.items) {
        CHECK(is_normal(s));
        // Kernels of the two projections intersect trivially.
    }
    CHECK(intersect(maxes.items[0], maxes.items[1]).is_trivial());

    // Three factors give three maximal normal subgroups.
    PermGroup h = direct_product(g, PermGroup::alternating(7));
    SubgroupList hmax = maximal_normal_subgroups(h);
    CHECK(hmax.items.size() == 3);
    for (const Subgroup& s : hmax.items) {
        CHECK(s.index() * s.order() == h.order());
        CHECK(is_normal(s));
    }
}

TEST_CASE("capacity limits raise CapacityError") {
    PermGroup big = direct_product(PermGroup::alternating(5),
                                   PermGroup::alternating(6));
    CHECK_THROWS_AS(all_subgroups(big), CapacityError);
    CHECK_THROWS_AS(subgroups_up_to_index(big, 8), CapacityError);

    EnumOptions tiny;
    tiny.lattice_order_cap = 10;
    CHECK_THROWS_AS(all_subgroups(PermGroup::symmetric(4), tiny), CapacityError);

    // Raising the caps unlocks the same calls.
    EnumOptions wide;
    wide.search_index_cap = 8;
    SubgroupList ok = subgroups_up_to_index(big, 8, wide);
    CHECK(ok.tag.bound == 8);

    // Nonsensical requests are rejected up front.
    CHECK_THROWS_AS(subgroups_up_to_index(PermGroup::symmetric(4), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        all_subgroups(PermGroup::symmetric(4),
                      with_strategy(EnumStrategy::CosetSearch)),
        std::invalid_argument);
}

TEST_CASE("completeness tags read back as text") {
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(to_string(all_subgroups(s3).tag) == "full-lattice");
    CHECK(to_string(subgroups_up_to_index(s3, 3).tag) == "up-to-index-3");
    CHECK(to_string(normal_subgroups_up_to_index(s3, 6).tag) ==
          "normal-up-to-index-6");
    CHECK(to_string(maximal_normal_subgroups(s3).tag) == "maximal-normal");
}
