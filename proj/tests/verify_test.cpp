#include <doctest.h>

#include <random>

#include "circulant/embed.hpp"
#include "circulant/verify.hpp"

using namespace circulant;

TEST_CASE("crosses is the strict interleaving predicate") {
    const Layout layout({1, 2, 3, 4});
    CHECK(crosses(layout, Edge(1, 3), Edge(2, 4)));
    CHECK_FALSE(crosses(layout, Edge(1, 2), Edge(3, 4)));
    CHECK_FALSE(crosses(layout, Edge(1, 2), Edge(2, 3)));
    CHECK_THROWS_AS(crosses(layout, Edge(1, 5), Edge(2, 4)), unknown_vertex);
}

TEST_CASE("crosses is symmetric and rotation/reflection invariant") {
    std::mt19937 rng(7);
    const int n = 9;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(base.begin(), base.end(), rng);
        const Layout layout(base);
        std::vector<int> rotated(base.begin() + 3, base.end());
        rotated.insert(rotated.end(), base.begin(), base.begin() + 3);
        const Layout rot(rotated);
        const Layout refl(std::vector<int>(base.rbegin(), base.rend()));
        std::uniform_int_distribution<int> pick(1, n);
        for (int t = 0; t < 40; ++t) {
            const Edge e1(pick(rng), pick(rng)), e2(pick(rng), pick(rng));
            if (e1.u == e1.v || e2.u == e2.v) continue;
            const bool c = crosses(layout, e1, e2);
            CHECK(c == crosses(layout, e2, e1));
            CHECK(c == crosses(rot, e1, e2));
            CHECK(c == crosses(refl, e1, e2));
        }
    }
}

TEST_CASE("verify_embedding accepts a good embedding and flags mutations") {
    const CirculantSpec spec = CirculantSpec::cnk(9, 3);
    BookEmbedding emb = embed(9, 3);
    CHECK(verify_embedding(spec, emb).valid());
    CHECK(verify_embedding(spec, emb).pages_used == 5);

    SUBCASE("forcing two incident edges onto one page is caught") {
        BookEmbedding bad = emb;
        const Edge a(1, 2);
        const Edge b(2, 3);
        bad.assignment[b] = bad.assignment[a];
        const VerificationReport rep = verify_embedding(spec, bad);
        CHECK_FALSE(rep.valid());
        CHECK_FALSE(rep.proper_matching_per_page);
        CHECK(rep.first_violation.has_value());
    }
    SUBCASE("omitting an edge breaks the cover") {
        BookEmbedding bad = emb;
        bad.assignment.erase(Edge(1, 2));
        const VerificationReport rep = verify_embedding(spec, bad);
        CHECK_FALSE(rep.complete_cover);
    }
}

TEST_CASE("exhaustive oracle on the pinned values") {
    CHECK(brute_force_mbt(CirculantSpec::cnk(4, 1)) == 2);
    CHECK(brute_force_mbt(CirculantSpec::cnk(6, 2)) == 5);
    CHECK(brute_force_mbt(CirculantSpec::cnk(8, 3)) == predicted_mbt(8, 3));
    CHECK(brute_force_mbt(CirculantSpec::cnk(9, 3)) == 5);
    CHECK_THROWS_AS(brute_force_mbt(CirculantSpec::cnk(11, 2)), too_large);
}

TEST_CASE("verifier is sound against the oracle") {
    // an accepted embedding with p pages implies the exact optimum is <= p
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const CirculantSpec spec = CirculantSpec::cnk(n, k);
            const BookEmbedding emb = embed(n, k);
            REQUIRE(verify_embedding(spec, emb).valid());
            CHECK(brute_force_mbt(spec, 6) <= emb.pages);
        }
}
