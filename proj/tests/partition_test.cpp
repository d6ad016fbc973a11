#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "circulant/graph.hpp"
#include "circulant/partition.hpp"

using namespace circulant;

namespace {

std::vector<std::vector<int>> read_fixture(const std::string& name) {
    std::ifstream f(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE_MESSAGE(f.good(), "missing fixture " << name);
    std::vector<std::vector<int>> sets;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) row.push_back(std::stoi(tok));
        sets.push_back(std::move(row));
    }
    return sets;
}

void check_against_fixture(int n, int k, const std::string& fixture, int expect_t) {
    const OrderedPartition part = build_partition(n, k);
    const auto golden = read_fixture(fixture);
    CHECK(part.t == expect_t);
    REQUIRE(part.sets.size() == golden.size());
    for (size_t i = 0; i < golden.size(); ++i) {
        INFO("set ", i + 1);
        CHECK(part.sets[i] == golden[i]);
    }
}

}  // namespace

TEST_CASE("partition golden fixtures") {
    check_against_fixture(56, 5, "partition_c56_5.txt", 5);
    check_against_fixture(53, 9, "partition_c53_9.txt", 9);
    check_against_fixture(87, 20, "partition_c87_20.txt", 7);
    check_against_fixture(77, 10, "partition_c77_10.txt", 4);
    check_against_fixture(56, 9, "partition_c56_9.txt", 3);
}

TEST_CASE("scheme selection and jump") {
    CHECK(build_partition(56, 5).scheme == PartitionScheme::R1);
    CHECK(build_partition(53, 9).scheme == PartitionScheme::RK1);
    CHECK(build_partition(87, 20).scheme == PartitionScheme::DescendingWithS);
    CHECK(build_partition(87, 20).jump == 67);
    CHECK(build_partition(56, 9).scheme == PartitionScheme::AscendingNoS);
    CHECK(build_partition(56, 9).jump == 9);
    CHECK_THROWS_AS(build_partition(56, 8), not_coprime);
    CHECK_THROWS_AS(build_partition(56, 1), k_out_of_range);
    CHECK_THROWS_AS(build_partition(56, 29), k_out_of_range);
}

TEST_CASE("r=1 set sizes") {
    const OrderedPartition part = build_partition(56, 5);
    const int a = 11;
    CHECK(part.sets[0].size() == static_cast<size_t>(a + 1));
    for (int i = 1; i < part.t; ++i) CHECK(part.sets[i].size() == static_cast<size_t>(a));
}

TEST_CASE("case (iii) boundary elements") {
    SUBCASE("descending scheme ends each long set at (i+1)-(n-k)") {
        const int n = 87, k = 20;
        const OrderedPartition part = build_partition(n, k);
        for (int i = 1; i < part.t; ++i)
            CHECK(part.sets[i - 1].back() == mod1(i + 1 - (n - k), n));
        CHECK(part.sets[part.t - 1].back() == mod1(1 - (n - k), n));
    }
    SUBCASE("ascending scheme ends each long set at (i+1)-k") {
        const int n = 56, k = 9;
        const OrderedPartition part = build_partition(n, k);
        for (int i = 1; i < part.t; ++i) CHECK(part.sets[i - 1].back() == mod1(i + 1 - k, n));
        CHECK(part.sets[part.t - 1].back() == mod1(1 - k, n));
    }
}

TEST_CASE("sets partition Z_n for all odd n up to 1000") {
    for (int n = 5; n <= 999; n += 2)
        for (int k = 2; k <= n / 2; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const OrderedPartition part = build_partition(n, k);
            std::vector<bool> seen(n + 1, false);
            size_t total = 0;
            for (const auto& set : part.sets) {
                total += set.size();
                for (size_t i = 0; i < set.size(); ++i) {
                    REQUIRE_FALSE(seen[set[i]]);
                    seen[set[i]] = true;
                    if (i + 1 < set.size())
                        REQUIRE(set[i + 1] == mod1(set[i] + part.jump, n));
                }
            }
            REQUIRE(total == static_cast<size_t>(n));
        }
}
