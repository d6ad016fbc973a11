#include "circulant/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace circulant {

CirculantSpec CirculantSpec::build(int n, std::vector<int> raw_jumps) {
    if (n < 3) throw std::invalid_argument("CirculantSpec: n must be >= 3");
    if (raw_jumps.empty() || raw_jumps.size() > 2)
        throw std::invalid_argument("CirculantSpec: jump set must have size 1 or 2");
    std::vector<int> jumps;
    for (int j : raw_jumps) {
        if (j <= 0 || j >= n) throw invalid_jump("CirculantSpec: jump must lie in [1, n-1]");
        if (j > n / 2) j = n - j;
        jumps.push_back(j);
    }
    std::sort(jumps.begin(), jumps.end());
    if (jumps.size() == 2 && jumps[0] == jumps[1])
        throw duplicate_jump("CirculantSpec: jumps coincide after normalization");
    return CirculantSpec(n, std::move(jumps));
}

CirculantSpec CirculantSpec::cnk(int n, int k) {
    if (k == 1) return build(n, {1});
    return build(n, {1, k});
}

bool CirculantSpec::is_cnk() const {
    return jumps_[0] == 1;
}

int CirculantSpec::cnk_jump() const {
    if (!is_cnk()) throw std::logic_error("cnk_jump: spec is not of the form C(n,k)");
    return jumps_.back();
}

bool CirculantSpec::adjacent(int u, int v) const {
    const int diff = mod1(u - v, n_);
    for (int j : jumps_)
        if (diff == j || diff == n_ - j) return true;
    return false;
}

std::vector<Edge> CirculantSpec::edges() const {
    std::set<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int j : jumps_) out.insert(Edge(u, mod1(u + j, n_)));
    return {out.begin(), out.end()};
}

size_t CirculantSpec::edge_count() const {
    size_t m = 0;
    for (int j : jumps_) m += (2 * j == n_) ? n_ / 2 : n_;
    return m;
}

CycleDecomposition cycle_decomposition(const CirculantSpec& spec) {
    if (!spec.is_cnk()) throw std::logic_error("cycle_decomposition: spec is not C(n,k)");
    const int n = spec.n();
    const int k = spec.cnk_jump();

    CycleDecomposition out;
    std::vector<int> c0(n);
    std::iota(c0.begin(), c0.end(), 1);
    out.cycles.push_back(std::move(c0));
    if (k == 1) return out;

    if (2 * k == n) {
        out.half_jump_matching = true;
        for (int i = 1; i <= k; ++i) out.matching.emplace_back(i, i + k);
        return out;
    }
    const int d = std::gcd(n, k);
    const int len = n / d;
    for (int i = 1; i <= d; ++i) {
        std::vector<int> cyc(len);
        for (int j = 0; j < len; ++j) cyc[j] = mod1(i + static_cast<long long>(j) * k, n);
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

bool is_bipartite(const CirculantSpec& spec) {
    if (!spec.is_cnk()) throw std::logic_error("is_bipartite: spec is not C(n,k)");
    return spec.n() % 2 == 0 && spec.cnk_jump() % 2 == 1;
}

int max_degree(const CirculantSpec& spec) {
    if (!spec.is_cnk()) throw std::logic_error("max_degree: spec is not C(n,k)");
    const int n = spec.n();
    const int k = spec.cnk_jump();
    if (k == 1) return 2;
    return (n % 2 == 0 && k == n / 2) ? 3 : 4;
}

int predicted_mbt(const CirculantSpec& spec) {
    const int n = spec.n();
    const int k = spec.cnk_jump();
    if (k == 1) return n % 2 == 0 ? 2 : 3;
    const int delta = max_degree(spec);
    return (n % 2 == 0 && k % 2 == 1) ? delta : delta + 1;
}

int predicted_mbt(int n, int k) {
    return predicted_mbt(CirculantSpec::cnk(n, k));
}

}  // namespace circulant
