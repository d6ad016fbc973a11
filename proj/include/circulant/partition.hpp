#pragma once

#include <string>
#include <vector>

#include "circulant/numth.hpp"

namespace circulant {

struct k_out_of_range : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Which of the four ordered-set constructions applies to coprime (n, k):
//   R1             r = 1:            P_1 = {1, 1+k, ..., 1+ak}, P_i short
//   RK1            r = k-1:          P_i long for i < k, P_k short
//   DescendingWithS  1 < r < k-1, s exists:  walk with jump n-k, t = k_s + 1
//   AscendingNoS     1 < r < k-1, no s:      walk with jump k,   t = k_m
enum class PartitionScheme { R1, RK1, DescendingWithS, AscendingNoS };

std::string to_string(PartitionScheme s);

struct OrderedPartition {
    PartitionScheme scheme{};
    std::vector<std::vector<int>> sets;  // P_1..P_t, ordered as constructed
    int t = 0;
    int jump = 0;  // the walking jump: k, or n-k for DescendingWithS
};

// Ordered vertex sets P_1..P_t partitioning {1..n}.  Requires n odd,
// gcd(n,k) = 1 and 2 <= k <= n/2.
OrderedPartition build_partition(int n, int k);

}  // namespace circulant
