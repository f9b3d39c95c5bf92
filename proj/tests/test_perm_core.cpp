#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "igrowth/bignat.hpp"
#include "igrowth/errors.hpp"
#include "igrowth/perm.hpp"
#include "igrowth/stabilizer_chain.hpp"

using namespace igrowth;

TEST_CASE("big integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    // 62! has 86 decimal digits and ends in 14 zeros (from floor(62/5) +
    // floor(62/25) factors of five); spot-check the exact value end to end.
    CHECK(to_decimal(factorial(62)) ==
          "3146997326038793752565312235495076408801228079725823219216316824"
          "7821107200000000000000");

    CHECK(factorial_exceeds(5, 119));
    CHECK_FALSE(factorial_exceeds(5, 120));
    CHECK_FALSE(factorial_exceeds(0, 1));
    CHECK(factorial_exceeds(100, BigNat(10)));
    // Must terminate quickly even for astronomically large n: the running
    // product passes any fixed bound after O(log bound) factors.
    BigNat huge = BigNat(10);
    for (int i = 0; i < 6; ++i) huge *= huge;  // 10^64
    CHECK(factorial_exceeds(huge, BigNat(1000000)));

    CHECK(parse_bignat("0") == 0);
    CHECK(parse_bignat("1234567890123456789012345678901234567890") ==
          BigNat("1234567890123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_bignat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bignat("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bignat(" 12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bignat("-5"), std::invalid_argument);

    CHECK(bit_length(BigNat(0)) == 0);
    CHECK(bit_length(BigNat(1)) == 1);
    CHECK(bit_length(BigNat(255)) == 8);
    CHECK(bit_length(BigNat(256)) == 9);
}

TEST_CASE("permutation composition applies the right factor first") {
    // With (p * q)(x) = p(q(x)), the product (1 2)(2 3) first swaps 2,3 and
    // then swaps 1,2, i.e. 1->2, 2->3, 3->1, which is the cycle (1 2 3).
    Perm a = perm_from_cycles("(1 2)", 3);
    Perm b = perm_from_cycles("(2 3)", 3);
    Perm product = a * b;
    CHECK(product == perm_from_cycles("(1 2 3)", 3));
    CHECK(product[0] == 1);
    CHECK(product[1] == 2);
    CHECK(product[2] == 0);
    // The reverse order gives the other 3-cycle.
    CHECK(b * a == perm_from_cycles("(1 3 2)", 3));
}

TEST_CASE("permutation basics") {
    Perm id(4);
    CHECK(id.is_identity());
    CHECK(to_cycle_string(id) == "()");
    CHECK(id.order() == 1);

    Perm p = perm_from_cycles("(1 2 3)(4 5)", 5);
    CHECK_FALSE(p.is_identity());
    CHECK(p.order() == 6);
    CHECK(p.inverse() * p == Perm(5));
    CHECK(p * p.inverse() == Perm(5));
    CHECK(p.smallest_moved() == 0);
    CHECK(to_cycle_string(p) == "(1 2 3)(4 5)");

    // Round-trip through the printer for a permutation with a fixed point.
    Perm q = perm_from_cycles("(2 4)", 5);
    CHECK(perm_from_cycles(to_cycle_string(q), 5) == q);
    CHECK(q.smallest_moved() == 1);

    // extended / shifted / restricted.
    Perm ext = p.extended(8);
    CHECK(ext.degree() == 8);
    CHECK(ext[6] == 6);
    Perm sh = q.shifted(3, 8);
    CHECK(sh[4] == 6);
    CHECK(sh[6] == 4);
    CHECK(sh[0] == 0);
    // The shifted copy fixes the original points; extending and restricting
    // round-trips.
    CHECK(sh.restricted(3).is_identity());
    CHECK(ext.restricted(5) == p);
    // restricted() requires the prefix to be invariant.
    CHECK_THROWS_AS(p.restricted(2), std::invalid_argument);

    // Constructor rejects non-bijections.
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 3}), std::invalid_argument);
    // Composition requires equal degrees.
    CHECK_THROWS_AS(Perm(3) * Perm(4), std::invalid_argument);
}

TEST_CASE("cycle notation parser rejects malformed input") {
    CHECK_THROWS_AS(perm_from_cycles("(1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("(1 2))", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("(0 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("(1 4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("(1 2 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("(1 a)", 3), std::invalid_argument);
    // The empty string is rejected; the explicit empty cycle is the identity.
    CHECK_THROWS_AS(perm_from_cycles("", 3), std::invalid_argument);
    // Commas are accepted as separators.
    CHECK(perm_from_cycles("(1,2,3)", 3) == perm_from_cycles("(1 2 3)", 3));
    CHECK(perm_from_cycles("()", 3).is_identity());
}

TEST_CASE("element order via cycle structure matches brute force") {
    Perm p = perm_from_cycles("(1 2 3 4 5)(6 7 8)(9 10)", 10);
    CHECK(p.order() == 30);
    Perm power = p;
    int k = 1;
    while (!power.is_identity()) {
        power = power * p;
        ++k;
    }
    CHECK(BigNat(k) == p.order());
}

namespace {

std::vector<Perm> symmetric_gens(int m) {
    std::vector<Perm> gens;
    if (m >= 2) {
        std::vector<int> t(m);
        for (int i = 0; i < m; ++i) t[i] = i;
        std::swap(t[0], t[1]);
        gens.push_back(Perm(t));
    }
    if (m >= 3) {
        std::vector<int> c(m);
        for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
        gens.push_back(Perm(c));
    }
    return gens;
}

}  // namespace

TEST_CASE("stabilizer chain computes symmetric group orders") {
    for (int m = 1; m <= 8; ++m) {
        StabilizerChain chain(m, symmetric_gens(m));
        CHECK(chain.order() == factorial(static_cast<unsigned>(m)));
        CHECK_FALSE(chain.order_capped());
    }
}

TEST_CASE("stabilizer chain membership tests") {
    StabilizerChain a4(4, {perm_from_cycles("(1 2 3)", 4),
                           perm_from_cycles("(2 3 4)", 4)});
    CHECK(a4.order() == 12);
    CHECK(a4.contains(perm_from_cycles("(1 2)(3 4)", 4)));
    CHECK(a4.contains(Perm(4)));
    CHECK_FALSE(a4.contains(perm_from_cycles("(1 2)", 4)));
    CHECK_FALSE(a4.contains(perm_from_cycles("(1 2 3 4)", 4)));

    StabilizerChain s4(4, symmetric_gens(4));
    CHECK(s4.contains(perm_from_cycles("(1 2)", 4)));
    // Every element of A4 lies in S4.
    for (const Perm& p : a4.elements(100)) CHECK(s4.contains(p));
}

TEST_CASE("stabilizer chain respects a forced base prefix") {
    ChainOptions opt;
    opt.forced_base = {0};
    StabilizerChain s4(4, symmetric_gens(4), opt);
    CHECK(s4.order() == 24);
    CHECK(s4.base_size() >= 1);
    CHECK(s4.base_point(0) == 0);
    // Level 1 generators fix the first base point and generate the point
    // stabilizer, which in S4 has order 6.
    std::vector<Perm> stab = s4.stabilizer_generators(1);
    for (const Perm& p : stab) CHECK(p[0] == 0);
    StabilizerChain stab_chain(4, stab);
    CHECK(stab_chain.order() == 6);
}

TEST_CASE("stabilizer chain order cap aborts early") {
    ChainOptions opt;
    opt.order_cap = BigNat(10);
    StabilizerChain s4(4, symmetric_gens(4), opt);
    CHECK(s4.order_capped());

    ChainOptions loose;
    loose.order_cap = BigNat(24);
    StabilizerChain s4b(4, symmetric_gens(4), loose);
    CHECK_FALSE(s4b.order_capped());
    CHECK(s4b.order() == 24);
}

TEST_CASE("stabilizer chain element listing is complete and distinct") {
    StabilizerChain d8(4, {perm_from_cycles("(1 2 3 4)", 4),
                           perm_from_cycles("(1 4)(2 3)", 4)});
    CHECK(d8.order() == 8);
    std::vector<Perm> elems = d8.elements(100);
    CHECK(elems.size() == 8);
    std::set<Perm> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == 8);
    for (const Perm& p : elems) CHECK(d8.contains(p));
}

TEST_CASE("trivial and single-generator chains") {
    StabilizerChain trivial(5, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.contains(Perm(5)));
    CHECK_FALSE(trivial.contains(perm_from_cycles("(1 2)", 5)));

    StabilizerChain c6(5, {perm_from_cycles("(1 2 3)(4 5)", 5)});
    CHECK(c6.order() == 6);
}
