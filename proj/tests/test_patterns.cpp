#include "arcperm/arc_sets.hpp"
#include "arcperm/patterns.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <set>
#include <string>

using namespace arcperm;

namespace {

SignedPermutation sp(std::vector<int> w) { return SignedPermutation(std::move(w)); }
Permutation up(std::vector<int> w) { return Permutation(std::move(w)); }

/// Expands "±" entries of a pattern written as in the theorem statements.
std::set<SignedPermutation> expand(const std::vector<std::string>& literals)
{
    std::set<SignedPermutation> out;
    for (const auto& lit : literals) {
        std::vector<std::string> pending{lit};
        while (!pending.empty()) {
            std::string s = pending.back();
            pending.pop_back();
            const auto pos = s.find("±");
            if (pos == std::string::npos) {
                out.insert(parse_signed_permutation(s));
                continue;
            }
            pending.push_back(s.substr(0, pos) + s.substr(pos + std::string("±").size()));
            pending.push_back(s.substr(0, pos) + "-" + s.substr(pos + std::string("±").size()));
        }
    }
    return out;
}

const std::vector<std::string> signed_arc_literals{"[±1,-2,±3]", "[±1,3,±2]",  "[±2,-3,±1]",
                                                   "[±2,1,±3]",  "[±3,-1,±2]", "[±3,2,±1]"};

const std::vector<std::string> b_arc_literals{"[±2,1,3]",  "[±2,3,1]",  "[±3,1,-2]", "[±3,-2,1]",
                                              "[±1,2,-3]", "[±1,-3,2]", "[±2,-1,-3]", "[±2,-3,-1]",
                                              "[±3,-1,2]", "[±3,2,-1]", "[±1,-2,3]", "[±1,3,-2]"};

template <class T>
std::set<T> as_set(const std::vector<T>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("unsigned containment")
{
    const auto w = up({1, 2, 5, 4, 3, 6});
    CHECK(contains(w, up({1, 3, 2, 4})));
    const auto occ = find_occurrence(w, up({1, 3, 2, 4}));
    REQUIRE(occ);
    CHECK(occ->size() == 4);
    // the reported positions really spell the pattern
    const auto pat = up({1, 3, 2, 4});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK((w((*occ)[a]) < w((*occ)[b])) == (pat(a + 1) < pat(b + 1)));

    for (const auto& pat : oracle::all_permutations(4))
        if (pat != Permutation::identity(4))
            CHECK_FALSE(contains(Permutation::identity(4), pat));
    for (const auto& pat : arc_forbidden())
        CHECK_FALSE(contains(up({1, 2, 5, 4, 3}), pat));
}

TEST_CASE("signed containment")
{
    const auto p = sp({-3, 2, 5, -1, 4});
    CHECK(contains(p, sp({-2, -1, 3})));
    CHECK(find_occurrence(p, sp({-2, -1, 3})) == std::vector<int>{1, 4, 5});
    CHECK_FALSE(contains(p, sp({2, 1, 3})));
    CHECK(contains(p, p));
}

TEST_CASE("containment agrees with exhaustive subset search")
{
    const auto pats3 = oracle::all_signed(3);
    for (const auto& p : oracle::all_signed(4))
        for (const auto& pat : pats3)
            REQUIRE(contains(p, pat) == oracle::contains(p, pat));
    for (const auto& p : oracle::all_permutations(6))
        for (const auto& pat : arc_forbidden())
            REQUIRE(contains(p, pat) == oracle::contains(p, pat));
}

TEST_CASE("forbidden lists match the theorem statements")
{
    const std::set<Permutation> arc_literal{up({1, 3, 2, 4}), up({1, 3, 4, 2}), up({2, 4, 1, 3}), up({2, 4, 3, 1}),
                                            up({3, 1, 2, 4}), up({3, 1, 4, 2}), up({4, 2, 1, 3}), up({4, 2, 3, 1})};
    CHECK(arc_forbidden().size() == 8);
    CHECK(as_set(arc_forbidden()) == arc_literal);

    CHECK(signed_arc_forbidden().size() == 24);
    CHECK(as_set(signed_arc_forbidden()) == expand(signed_arc_literals));

    CHECK(b_arc_forbidden().size() == 24);
    CHECK(as_set(b_arc_forbidden()) == expand(b_arc_literals));
}

TEST_CASE("triple orientation")
{
    CHECK(triple_orientation(1, 2, 3) == Orientation::clockwise);
    CHECK(triple_orientation(2, 3, 1) == Orientation::clockwise);
    CHECK(triple_orientation(3, 1, 2) == Orientation::clockwise);
    CHECK(triple_orientation(3, 2, 1) == Orientation::counterclockwise);
    CHECK(triple_orientation(1, 3, 2) == Orientation::counterclockwise);
    CHECK_THROWS_AS(triple_orientation(1, 1, 2), std::invalid_argument);
}

TEST_CASE("avoidance with witnesses")
{
    const auto r = avoids_all(sp({-2, 1, 3}), signed_arc_forbidden());
    CHECK_FALSE(r.avoids);
    REQUIRE(r.witness);
    CHECK(r.witness->indices == std::vector<int>{1, 2, 3});
    CHECK(r.witness->pattern == sp({-2, 1, 3}));

    CHECK(avoids_all(Permutation::identity(6), arc_forbidden()).avoids);
    CHECK(avoids_all(sp({-2, 3, -1}), b_arc_forbidden()).avoids);
    CHECK_FALSE(avoids_all(sp({5, 2, -1, 4, 3}), b_arc_forbidden()).avoids);
}

TEST_CASE("arc permutations are the avoiders of the eight patterns, n <= 7")
{
    const auto pats = arc_forbidden();
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : oracle::all_permutations(n))
            REQUIRE(is_arc(p) == avoids_all(p, pats).avoids);
}

TEST_CASE("signed and B-arc permutations are avoiders of their 24 patterns, n <= 6")
{
    const auto s = signed_arc_forbidden();
    const auto b = b_arc_forbidden();
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : generate_hyperoctahedral(n)) {
            REQUIRE(is_signed_arc(p) == avoids_all(p, s).avoids);
            REQUIRE(is_b_arc(p) == avoids_all(p, b).avoids);
        }
}
