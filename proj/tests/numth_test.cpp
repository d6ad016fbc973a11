#include <doctest.h>

#include <numeric>

#include "circulant/numth.hpp"

using namespace circulant;

namespace {

// independent oracle: scan the progression {1, 1+a, 1+2a, ...} mod b for
// the element 1+c and report its 1-based position
int64_t position_by_scan(int64_t a, int64_t b, int64_t c) {
    int64_t target = (1 + c) % b;
    if (target == 0) target = b;
    for (int64_t i = 0; i < b; ++i) {
        int64_t elem = (1 + i * a) % b;
        if (elem <= 0) elem += b;
        if (elem == target) return i + 1;
    }
    return -1;
}

}  // namespace

TEST_CASE("gcd_positive on the worked values") {
    CHECK(gcd_positive(60, 28) == 4);
    CHECK(gcd_positive(7, 7) == 7);
    CHECK(gcd_positive(56, 9) == 1);
    CHECK_THROWS_AS(gcd_positive(0, 3), std::invalid_argument);
}

TEST_CASE("solve_diophantine canonical solutions") {
    const DioSolution s = solve_diophantine(7, -15, 35);
    CHECK(s.x0 == 5);
    CHECK(s.y0 == 0);

    for (int b : {2, 5, 9, 100}) {
        const DioSolution z = solve_diophantine(1, -b, 0);
        CHECK(z.x0 == 0);
        CHECK(z.y0 == 0);
    }

    // expected values frozen from an enumeration of x = 0..13 with
    // 5x = 7 (mod 14)
    {
        int found = -1;
        for (int x = 0; x < 14; ++x)
            if ((5 * x) % 14 == 7) {
                found = x;
                break;
            }
        CHECK(found == 7);
        const DioSolution t = solve_diophantine(5, -14, 7);
        CHECK(t.x0 == found);
        CHECK(t.y0 == 2);
    }

    CHECK_THROWS_AS(solve_diophantine(4, 6, 7), no_solution);
}

TEST_CASE("solve_diophantine round trip and uniqueness in range") {
    for (int64_t b = 2; b <= 120; ++b)
        for (int64_t a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const int64_t c = (a * 3 + b / 2) % b;
            const DioSolution s = solve_diophantine(a, -b, c);
            CHECK(a * s.x0 + (-b) * s.y0 == c);
            CHECK(s.x0 >= 0);
            CHECK(s.x0 <= b - 1);
            int hits = 0;
            for (int64_t x = 0; x < b; ++x)
                if (((a * x - c) % b + b) % b == 0) ++hits;
            CHECK(hits == 1);
        }
}

TEST_CASE("position_in_progression matches the scan oracle") {
    CHECK(position_in_progression(1, 5, 3) == 4);

    // full scan agreement on a coprime pair; the scan also freezes the two
    // spot values below
    for (int64_t c = 0; c <= 13; ++c)
        CHECK(position_in_progression(5, 14, c) == position_by_scan(5, 14, c));
    CHECK(position_by_scan(5, 14, 6) == 5);
    CHECK(position_in_progression(5, 14, 7) == 8);

    // identity with the canonical Diophantine solution
    const DioSolution s = solve_diophantine(7, -15, 5);
    CHECK(position_in_progression(7, 15, 5) == 1 + s.x0);
    CHECK(position_by_scan(7, 15, 5) == 1 + s.x0);

    CHECK_THROWS_AS(position_in_progression(5, 14, 14), invalid_range);
    CHECK_THROWS_AS(position_in_progression(5, 14, -1), invalid_range);
    CHECK_THROWS_AS(position_in_progression(6, 14, 3), not_coprime);
}

TEST_CASE("position identity over all coprime pairs up to 60") {
    for (int64_t b = 2; b <= 60; ++b)
        for (int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (int64_t c = 0; c < b; ++c) {
                const int64_t via_solver = 1 + solve_diophantine(a, -b, c).x0;
                CHECK(position_in_progression(a, b, c) == via_solver);
                CHECK(position_by_scan(a, b, c) == via_solver);
            }
        }
}

TEST_CASE("reduction_trace on the worked instances") {
    SUBCASE("56,9") {
        const ReductionTrace tr = reduction_trace(56, 9);
        CHECK(tr.a == 6);
        CHECK(tr.r == 2);
        REQUIRE(tr.steps.size() == 4);
        CHECK(tr.k_at(1) == 7);
        CHECK(tr.k_at(2) == 5);
        CHECK(tr.k_at(3) == 3);
        CHECK(tr.k_at(4) == 1);
        CHECK(tr.r_at(4) == 0);
        CHECK(tr.m == 3);
        CHECK_FALSE(tr.s.has_value());
        CHECK(tr.t == 3);
    }
    SUBCASE("87,20") {
        const ReductionTrace tr = reduction_trace(87, 20);
        CHECK(tr.a == 4);
        CHECK(tr.r == 7);
        CHECK(tr.k_at(1) == 13);
        CHECK(tr.k_at(2) == 6);
        CHECK(tr.r_at(2) == 1);
        REQUIRE(tr.s.has_value());
        CHECK(*tr.s == 2);
        CHECK(tr.t == 7);
    }
    SUBCASE("77,10") {
        const ReductionTrace tr = reduction_trace(77, 10);
        CHECK(tr.a == 7);
        CHECK(tr.r == 7);
        CHECK(tr.k_at(1) == 3);
        CHECK(tr.r_at(1) == 1);
        REQUIRE(tr.s.has_value());
        CHECK(*tr.s == 1);
        CHECK(tr.t == 4);
    }
    CHECK_THROWS_AS(reduction_trace(56, 8), not_coprime);
    CHECK_THROWS_AS(reduction_trace(9, 9), std::invalid_argument);
}

TEST_CASE("reduction_trace terminates correctly over odd n up to 2000") {
    for (int64_t n = 3; n <= 2000; n += 2)
        for (int64_t k = 2; k <= n / 2; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const ReductionTrace tr = reduction_trace(n, k);
            REQUIRE(!tr.steps.empty());
            CHECK(n == tr.a * k + tr.r);
            CHECK(tr.r >= 0);
            CHECK(tr.r < k);
            // every step equation re-evaluates exactly and r never grows
            for (size_t i = 1; i <= tr.steps.size(); ++i) {
                const int64_t i64 = static_cast<int64_t>(i);
                CHECK(tr.k_at(i64) == tr.k_at(i64 - 1) - tr.r_at(i64 - 1));
                CHECK(tr.k_at(i64 - 1) ==
                      tr.steps[i - 1].a * tr.k_at(i64) + tr.r_at(i64));
                CHECK(tr.r_at(i64) <= tr.r_at(i64 - 1));
            }
            CHECK(tr.k_at(tr.m + 1) == 1);
            CHECK(tr.r_at(tr.m + 1) == 0);
        }
}
