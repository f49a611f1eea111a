#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chvatal/complex.hpp"
#include "chvatal/enumerate.hpp"
#include "chvatal/errors.hpp"
#include "chvatal/oracle.hpp"

#include "helpers.hpp"

using namespace chvatal;
using testutil::fam;

TEST_CASE("max_star picks the largest star, smallest vertex on ties") {
    const StarMax one = max_star(closure(fam("abc", {"abc"})));
    CHECK(one.vertex == 0);
    CHECK(one.size == 4);

    const StarMax tied = max_star(closure(fam("ab", {"ab"})));
    CHECK(tied.vertex == 0);
    CHECK(tied.size == 2);

    const StarMax big = max_star(closure(fam("abcx", {"abc", "abx", "acx"})));
    CHECK(big.vertex == 0);
    CHECK(big.size == 7);

    CHECK(max_star(closure(fam("a", {"a"}))).size == 1);
    CHECK_THROWS_AS(max_star(closure(fam("abc", {}))), PreconditionError);
}

TEST_CASE("max_intersecting on a triangle closure") {
    const IntersectingMax best = max_intersecting(closure(fam("abc", {"abc"})));
    CHECK(best.size == 4);
    CHECK(best.witness == fam("abc", {"a", "ab", "ac", "abc"}));
    CHECK(is_intersecting(best.witness));
}

TEST_CASE("max_intersecting across two disjoint edges") {
    const IntersectingMax best = max_intersecting(closure(fam("abcd", {"ab", "cd"})));
    CHECK(best.size == 2);
    CHECK(best.witness == fam("abcd", {"a", "ab"}));
}

TEST_CASE("max_intersecting of the empty complex") {
    const IntersectingMax best = max_intersecting(closure(fam("abc", {})));
    CHECK(best.size == 0);
    CHECK(best.witness.empty());
}

TEST_CASE("max_intersecting respects its node budget") {
    const Complex c = closure(fam("abcde", {"abcde"}));
    CHECK_THROWS_AS(max_intersecting(c, 1), BudgetError);
}

TEST_CASE("a full complex meets the half-of-all-subsets bound") {
    CHECK(max_intersecting(closure(fam("abcd", {"abcd"}))).size == 8);
    CHECK(max_intersecting(closure(fam("abcde", {"abcde"}))).size == 16);
}

TEST_CASE("verify_chvatal on small closures") {
    const Verdict v = verify_chvatal(closure(fam("abc", {"abc"})));
    CHECK(v.holds);
    CHECK(v.max_intersecting_size == 4);
    CHECK(v.max_star_size == 4);
    CHECK(v.max_star_vertex == 0);

    const Verdict empty = verify_chvatal(closure(fam("abc", {})));
    CHECK(empty.holds);
    CHECK(empty.max_intersecting_size == 0);
    CHECK(empty.max_star_size == 0);
    CHECK_FALSE(empty.max_star_vertex.has_value());

    const Verdict two = verify_chvatal(closure(fam("abcd", {"ab", "cd"})));
    CHECK(two.holds);
    CHECK(two.max_intersecting_size == 2);
    CHECK(two.max_star_size == 2);
}

TEST_CASE("clique search agrees with the naive scan on every small complex") {
    for (int n = 0; n <= 3; ++n) {
        for_each_complex(n, [](const Complex& c) {
            CHECK(max_intersecting(c).size == testutil::naive_max_intersecting(c));
        });
    }
}

TEST_CASE("clique search agrees with the naive scan on sampled closures") {
    std::mt19937_64 rng(7004);
    int checked = 0;
    while (checked < 250) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const GroundSet ground = GroundSet::alphabetic(n);
        const auto order = testutil::shuffled_masks(
            rng, n, [](std::uint64_t) { return true; });
        std::vector<Face> gens;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count && i < order.size(); ++i)
            gens.push_back(Face::from_bits(order[i]));
        const Complex c = closure(Family(ground, std::move(gens)));
        if (c.faces.size() > 18) continue;
        ++checked;
        CHECK(max_intersecting(c).size == testutil::naive_max_intersecting(c));
    }
}

TEST_CASE("the oracle is deterministic") {
    const Complex c = closure(fam("abcde", {"abc", "cde", "ace", "bd"}));
    const IntersectingMax r1 = max_intersecting(c);
    const IntersectingMax r2 = max_intersecting(c);
    CHECK(r1.size == r2.size);
    CHECK(r1.witness == r2.witness);
    const Verdict v1 = verify_chvatal(c);
    const Verdict v2 = verify_chvatal(c);
    CHECK(v1.max_intersecting_witness == v2.max_intersecting_witness);
    CHECK(v1.max_star_vertex == v2.max_star_vertex);
    CHECK(v1.holds);
}

TEST_CASE("witness families are honest") {
    std::mt19937_64 rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const GroundSet ground = GroundSet::alphabetic(n);
        const auto order = testutil::shuffled_masks(
            rng, n, [](std::uint64_t) { return true; });
        std::vector<Face> gens;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t i = 0; i < count && i < order.size(); ++i)
            gens.push_back(Face::from_bits(order[i]));
        const Complex c = closure(Family(ground, std::move(gens)));
        const IntersectingMax best = max_intersecting(c);
        CHECK(static_cast<int>(best.witness.size()) == best.size);
        CHECK(is_intersecting(best.witness));
        CHECK(best.witness.subfamily_of(c.faces));
    }
}
