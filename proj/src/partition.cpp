#include "circulant/partition.hpp"

#include <numeric>

#include "circulant/graph.hpp"

namespace circulant {

std::string to_string(PartitionScheme s) {
    switch (s) {
        case PartitionScheme::R1: return "r=1";
        case PartitionScheme::RK1: return "r=k-1";
        case PartitionScheme::DescendingWithS: return "descending-with-s";
        case PartitionScheme::AscendingNoS: return "ascending-no-s";
    }
    return "?";
}

namespace {

// Walk i, i+jump, i+2*jump, ... (mod n) up to and including `last`.
std::vector<int> walk_until(int n, int start, int jump, int last) {
    std::vector<int> out;
    int v = start;
    for (int guard = 0; guard <= n; ++guard) {
        out.push_back(v);
        if (v == last) return out;
        v = mod1(v + static_cast<long long>(jump), n);
    }
    throw std::logic_error("build_partition: walk did not reach its terminal element");
}

}  // namespace

OrderedPartition build_partition(int n, int k) {
    if (k < 2 || k > n / 2) throw k_out_of_range("build_partition: need 2 <= k <= n/2");
    const ReductionTrace tr = reduction_trace(n, k);  // throws not_coprime
    const int r = static_cast<int>(tr.r);
    const int a = static_cast<int>(tr.a);

    OrderedPartition part;
    part.t = static_cast<int>(tr.t);

    if (r == 1) {
        part.scheme = PartitionScheme::R1;
        part.jump = k;
        for (int i = 1; i <= k; ++i) {
            const int len = (i == 1) ? a + 1 : a;
            std::vector<int> set(len);
            for (int j = 0; j < len; ++j) set[j] = mod1(i + static_cast<long long>(j) * k, n);
            part.sets.push_back(std::move(set));
        }
    } else if (r == k - 1) {
        part.scheme = PartitionScheme::RK1;
        part.jump = k;
        for (int i = 1; i <= k; ++i) {
            const int len = (i <= k - 1) ? a + 1 : a;
            std::vector<int> set(len);
            for (int j = 0; j < len; ++j) set[j] = mod1(i + static_cast<long long>(j) * k, n);
            part.sets.push_back(std::move(set));
        }
    } else if (tr.s) {
        part.scheme = PartitionScheme::DescendingWithS;
        part.jump = n - k;
        const int ks = static_cast<int>(tr.k_at(*tr.s));
        for (int i = 1; i <= ks; ++i)
            part.sets.push_back(walk_until(n, i, part.jump, mod1(i + 1 - part.jump, n)));
        part.sets.push_back(walk_until(n, ks + 1, part.jump, mod1(1 - part.jump, n)));
    } else {
        part.scheme = PartitionScheme::AscendingNoS;
        part.jump = k;
        const int km = static_cast<int>(tr.k_at(tr.m));
        for (int i = 1; i <= km - 1; ++i)
            part.sets.push_back(walk_until(n, i, k, mod1(i + 1 - k, n)));
        part.sets.push_back(walk_until(n, km, k, mod1(1 - k, n)));
    }

    if (static_cast<int>(part.sets.size()) != part.t)
        throw std::logic_error("build_partition: set count disagrees with t");

    // partition sanity: the sets tile {1..n}
    std::vector<bool> seen(n + 1, false);
    size_t total = 0;
    for (const auto& set : part.sets) {
        total += set.size();
        for (int v : set) {
            if (seen[v]) throw std::logic_error("build_partition: vertex repeated across sets");
            seen[v] = true;
        }
    }
    if (total != static_cast<size_t>(n)) throw std::logic_error("build_partition: sets do not cover Z_n");

    // equal-length invariant for the walked schemes: P_1..P_{t-1} equal and
    // longer than P_t
    if (part.scheme == PartitionScheme::DescendingWithS || part.scheme == PartitionScheme::AscendingNoS) {
        for (int i = 1; i + 1 < part.t; ++i)
            if (part.sets[i].size() != part.sets[0].size())
                throw std::logic_error("build_partition: unequal leading set sizes");
        if (part.t >= 2 && part.sets.back().size() >= part.sets[0].size())
            throw std::logic_error("build_partition: trailing set not the short one");
    }
    return part;
}

}  // namespace circulant
