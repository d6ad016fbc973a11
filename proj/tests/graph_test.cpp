#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "circulant/graph.hpp"

using namespace circulant;

namespace {

// traversal-based 2-coloring, the independent check for the parity formula
bool bipartite_by_coloring(const CirculantSpec& spec) {
    const int n = spec.n();
    std::vector<int> color(n + 1, -1);
    std::queue<int> q;
    color[1] = 0;
    q.push(1);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int j : spec.jumps())
            for (int w : {mod1(v + j, n), mod1(v - j, n)}) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
    }
    return true;  // C(n,k) is connected, one sweep covers it
}

}  // namespace

TEST_CASE("build normalizes and counts edges") {
    const CirculantSpec g = CirculantSpec::cnk(14, 5);
    CHECK(g.edges().size() == 28);
    std::vector<int> deg(15, 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 1; v <= 14; ++v) CHECK(deg[v] == 4);

    const CirculantSpec h = CirculantSpec::cnk(14, 7);
    CHECK(h.edges().size() == 21);
    std::vector<int> degh(15, 0);
    for (const Edge& e : h.edges()) {
        ++degh[e.u];
        ++degh[e.v];
    }
    for (int v = 1; v <= 14; ++v) CHECK(degh[v] == 3);

    CHECK(CirculantSpec::build(9, {1, 6}).edges() == CirculantSpec::build(9, {1, 3}).edges());
    CHECK_THROWS_AS(CirculantSpec::build(9, {9}), invalid_jump);
    CHECK_THROWS_AS(CirculantSpec::build(10, {3, 7}), duplicate_jump);
}

TEST_CASE("cycle decomposition worked instances") {
    SUBCASE("C(14,5)") {
        const CycleDecomposition cd = cycle_decomposition(CirculantSpec::cnk(14, 5));
        REQUIRE(cd.cycles.size() == 2);
        CHECK(cd.cycles[1] ==
              std::vector<int>{1, 6, 11, 2, 7, 12, 3, 8, 13, 4, 9, 14, 5, 10});
    }
    SUBCASE("C(27,9)") {
        const CycleDecomposition cd = cycle_decomposition(CirculantSpec::cnk(27, 9));
        REQUIRE(cd.cycles.size() == 10);
        CHECK(cd.cycles[1] == std::vector<int>{1, 10, 19});
    }
    SUBCASE("C(24,4)") {
        const CycleDecomposition cd = cycle_decomposition(CirculantSpec::cnk(24, 4));
        REQUIRE(cd.cycles.size() == 5);
        for (size_t i = 1; i < cd.cycles.size(); ++i) CHECK(cd.cycles[i].size() == 6);
    }
    SUBCASE("half jump reported as a matching") {
        const CycleDecomposition cd = cycle_decomposition(CirculantSpec::cnk(14, 7));
        CHECK(cd.cycles.size() == 1);
        CHECK(cd.half_jump_matching);
        CHECK(cd.matching.size() == 7);
    }
}

TEST_CASE("cycle decomposition covers the edge set exactly") {
    for (int n = 3; n <= 300; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const CirculantSpec spec = CirculantSpec::cnk(n, k);
            const CycleDecomposition cd = cycle_decomposition(spec);
            std::vector<Edge> collected;
            for (const auto& cyc : cd.cycles)
                for (size_t i = 0; i < cyc.size(); ++i)
                    collected.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
            collected.insert(collected.end(), cd.matching.begin(), cd.matching.end());
            std::sort(collected.begin(), collected.end());
            const bool disjoint =
                std::adjacent_find(collected.begin(), collected.end()) == collected.end();
            REQUIRE(disjoint);
            REQUIRE(collected == spec.edges());
        }
}

TEST_CASE("bipartite formula agrees with 2-coloring") {
    CHECK(is_bipartite(CirculantSpec::cnk(14, 5)));
    CHECK_FALSE(is_bipartite(CirculantSpec::cnk(9, 3)));
    CHECK_FALSE(is_bipartite(CirculantSpec::cnk(12, 6)));
    for (int n = 3; n <= 300; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const CirculantSpec spec = CirculantSpec::cnk(n, k);
            REQUIRE(is_bipartite(spec) == bipartite_by_coloring(spec));
        }
}

TEST_CASE("max degree and predicted page count") {
    CHECK(max_degree(CirculantSpec::cnk(14, 7)) == 3);
    CHECK(max_degree(CirculantSpec::cnk(14, 5)) == 4);
    CHECK(max_degree(CirculantSpec::cnk(4, 2)) == 3);

    CHECK(predicted_mbt(14, 5) == 4);
    CHECK(predicted_mbt(14, 7) == 3);
    CHECK(predicted_mbt(12, 6) == 4);
    CHECK(predicted_mbt(9, 3) == 5);
    CHECK(predicted_mbt(8, 1) == 2);
    CHECK(predicted_mbt(9, 1) == 3);

    for (int n = 3; n <= 120; ++n)
        for (int k = 2; k <= n / 2; ++k) {
            const CirculantSpec spec = CirculantSpec::cnk(n, k);
            CHECK(predicted_mbt(spec) >= max_degree(spec));
            CHECK((predicted_mbt(spec) == max_degree(spec)) ==
                  (n % 2 == 0 && k % 2 == 1));
        }
}
