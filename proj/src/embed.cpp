#include "circulant/embed.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "circulant/numth.hpp"
#include "circulant/partition.hpp"

namespace circulant {

namespace {

constexpr int Y = kPageYellow;
constexpr int P = kPagePurple;
constexpr int G = kPageGreen;
constexpr int R = kPageRed;
constexpr int B = kPageBlue;

// raised when a written-out coloring contradicts itself on an instance;
// callers drop to search completion on the same layout
struct pin_conflict : std::logic_error {
    using std::logic_error::logic_error;
};

int index_of(const std::vector<int>& list, int v) {
    const auto it = std::find(list.begin(), list.end(), v);
    if (it == list.end()) throw std::logic_error("index_of: element not present");
    return static_cast<int>(it - list.begin());
}

void append_block(std::vector<int>& order, const std::vector<int>& block, bool reversed) {
    if (reversed)
        order.insert(order.end(), block.rbegin(), block.rend());
    else
        order.insert(order.end(), block.begin(), block.end());
}

// V_1..V_d: V_i = (i, i+k, ..., i+(n/d-1)k), the k-jump cycles
std::vector<std::vector<int>> jump_cycles(int n, int k) {
    const int d = std::gcd(n, k);
    const int f = n / d;
    std::vector<std::vector<int>> vs(d);
    for (int i = 1; i <= d; ++i) {
        vs[i - 1].resize(f);
        for (int j = 0; j < f; ++j) vs[i - 1][j] = mod1(i + static_cast<long long>(j) * k, n);
    }
    return vs;
}

// pairwise merge of two equal-length rows, pair j in (a,b) order for j = 0
// and j odd, reversed for even j >= 2
std::vector<int> interleave_alt0(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (size_t j = 0; j < a.size(); ++j) {
        const bool ab = j == 0 || j % 2 == 1;
        out.push_back(ab ? a[j] : b[j]);
        out.push_back(ab ? b[j] : a[j]);
    }
    return out;
}

// pair j in (a,b) order for even j, (b,a) for odd j
std::vector<int> interleave_alt1(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (size_t j = 0; j < a.size(); ++j) {
        const bool ab = j % 2 == 0;
        out.push_back(ab ? a[j] : b[j]);
        out.push_back(ab ? b[j] : a[j]);
    }
    return out;
}

// pairs 0 and 1 in (w,u) order, then (u,w) for even j, (w,u) for odd j
std::vector<int> interleave_heads(const std::vector<int>& u, const std::vector<int>& w) {
    std::vector<int> out;
    for (size_t j = 0; j < u.size(); ++j) {
        const bool wu = j <= 1 || j % 2 == 1;
        out.push_back(wu ? w[j] : u[j]);
        out.push_back(wu ? u[j] : w[j]);
    }
    return out;
}

// One construction: a circular order plus the written-out page pins and the
// palette restrictions left to completion.
struct CaseBuild {
    int n = 0;
    std::vector<int> order;
    std::vector<std::pair<Edge, int>> pins;
    std::vector<std::pair<Edge, uint8_t>> masks;

    Edge e(long long a, long long b) const { return Edge(mod1(a, n), mod1(b, n)); }

    void pin(long long a, long long b, int page) { pins.emplace_back(e(a, b), page); }
    void mask(long long a, long long b, uint8_t allowed) { masks.emplace_back(e(a, b), allowed); }

    // path edges (verts[i], verts[i+1]); page c0 at even i, c1 at odd i
    void pin_path_alternating(const std::vector<int>& verts, int c0, int c1) {
        for (size_t i = 0; i + 1 < verts.size(); ++i)
            pin(verts[i], verts[i + 1], i % 2 == 0 ? c0 : c1);
    }
    // same, anchored: edge `anchor` gets c0 and parity radiates from it
    void pin_path_alternating_from(const std::vector<int>& verts, size_t anchor, int c0, int c1) {
        for (size_t i = 0; i + 1 < verts.size(); ++i) {
            const size_t dist = i >= anchor ? i - anchor : anchor - i;
            pin(verts[i], verts[i + 1], dist % 2 == 0 ? c0 : c1);
        }
    }
    void mask_path(const std::vector<int>& verts, uint8_t allowed) {
        for (size_t i = 0; i + 1 < verts.size(); ++i) mask(verts[i], verts[i + 1], allowed);
    }
};

// ---------------- completion search ----------------

std::vector<std::vector<int>> edge_conflicts(const std::vector<Edge>& edges, const Layout& layout) {
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge &a = edges[i], &b = edges[j];
            const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (share || crosses(layout, a, b)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    return adj;
}

// Backtracking page assignment under per-edge allowed sets.  Deterministic:
// smallest-domain-first, lowest page first.
struct DomainSolver {
    const std::vector<std::vector<int>>& adj;
    std::vector<uint8_t> dom;
    std::vector<int> page;
    long long nodes = 0;
    static constexpr long long kNodeLimit = 2'000'000;

    DomainSolver(const std::vector<std::vector<int>>& a, std::vector<uint8_t> d)
        : adj(a), dom(std::move(d)), page(a.size(), -1) {}

    bool assign(int v, int c, std::vector<std::pair<int, uint8_t>>& trail) {
        page[v] = c;
        for (int w : adj[v]) {
            if (page[w] >= 0) {
                if (page[w] == c) return false;
                continue;
            }
            if (dom[w] & (1u << c)) {
                trail.emplace_back(w, dom[w]);
                dom[w] = static_cast<uint8_t>(dom[w] & ~(1u << c));
                if (dom[w] == 0) return false;
            }
        }
        return true;
    }

    bool solve() {
        if (++nodes > kNodeLimit) return false;
        int best = -1, best_count = 99, best_deg = -1;
        for (size_t v = 0; v < dom.size(); ++v) {
            if (page[v] >= 0) continue;
            const int cnt = std::popcount(dom[v]);
            const int deg = static_cast<int>(adj[v].size());
            if (cnt < best_count || (cnt == best_count && deg > best_deg)) {
                best_count = cnt;
                best_deg = deg;
                best = static_cast<int>(v);
            }
        }
        if (best < 0) return true;
        for (int c = 0; c < 8; ++c) {
            if (!(dom[best] & (1u << c))) continue;
            std::vector<std::pair<int, uint8_t>> trail;
            if (assign(best, c, trail) && solve()) return true;
            page[best] = -1;
            for (auto& [w, saved] : trail) dom[w] = saved;
            if (nodes > kNodeLimit) return false;
        }
        return false;
    }
};

// ---------------- constructions ----------------

// plain cycle C(n,1): consecutive edges alternate, the closing chord takes
// the spare page on odd n
CaseBuild case_cycle(int n) {
    CaseBuild cb;
    cb.n = n;
    cb.order.resize(n);
    std::iota(cb.order.begin(), cb.order.end(), 1);
    for (int i = 1; i < n; ++i) cb.pin(i, i + 1, i % 2 == 1 ? Y : P);
    cb.pin(n, 1, n % 2 == 0 ? P : G);
    return cb;
}

// tag 4.1 (n even, k odd): order 1, n, 3, n-2, ...; 1-jump edges split by
// endpoint parity onto two pages, k-jump edges onto the other two (one when
// k = n/2, where both k-edge classes coincide)
CaseBuild case_even_k_odd(int n, int k) {
    CaseBuild cb;
    cb.n = n;
    for (int i = 0; i < n / 2; ++i) {
        cb.order.push_back(2 * i + 1);
        cb.order.push_back(n - 2 * i);
    }
    for (int i = 1; i <= n; ++i) cb.pin(i, i + 1, i % 2 == 1 ? Y : P);
    if (2 * k == n) {
        for (int i = 1; i <= n / 2; ++i) cb.pin(i, i + k, G);
    } else {
        for (int i = 1; i <= n; ++i) cb.pin(i, i + k, i % 2 == 0 ? G : R);
    }
    return cb;
}

// tag 4.2/k=n2: order 1..n/2 then n..n/2+1
CaseBuild case_even_half(int n) {
    const int k = n / 2;
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= k; ++i) cb.order.push_back(i);
    for (int i = n; i > k; --i) cb.order.push_back(i);
    cb.pin(1, n, P);
    for (int i = 1; i <= n - 1; i += 2) cb.pin(i, i + 1, R);
    for (int i = 2; i <= n - 2; i += 2) cb.pin(i, i + 1, G);
    for (int i = 1; i <= k; ++i) cb.pin(i, i + k, Y);
    return cb;
}

// tag 4.2/general (n, k even, k != n/2): zigzag of the k-jump cycles; the
// 1-jump edges take three pages split along V_d, each k-cycle closes red
// and its path completes from {red, blue, yellow}
CaseBuild case_even_k_even(int n, int k) {
    const auto vs = jump_cycles(n, k);
    const int d = static_cast<int>(vs.size());
    const int f = n / d;
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= d; ++i) append_block(cb.order, vs[i - 1], i % 2 == 1);

    const int pos_n = index_of(vs[d - 1], n);
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < f; ++j) {
            const int v = vs[i - 1][j];
            if (i % 2 == 1)
                cb.pin(v, v + 1, P);
            else if (i <= d - 2)
                cb.pin(v, v + 1, G);
            else
                cb.pin(v, v + 1, j < pos_n ? G : B);
        }
    for (int i = 1; i <= d; ++i) {
        cb.pin(i, i - k, R);
        cb.mask_path(vs[i - 1], (1u << R) | (1u << B) | (1u << Y));
    }
    return cb;
}

// tag 5.1/n=3k: d = k triangle case
CaseBuild case_odd_3k(int n, int k) {
    const auto vs = jump_cycles(n, k);
    const int d = k;
    CaseBuild cb;
    cb.n = n;
    append_block(cb.order, vs[0], false);
    for (int i = 2; i <= d; ++i) append_block(cb.order, vs[i - 1], i % 2 == 1);

    for (int i = 2; i <= d - 1; i += 2)
        for (int v : vs[i - 1]) cb.pin(v, v + 1, Y);
    for (int i = 3; i <= d - 2; i += 2)
        for (int v : vs[i - 1]) cb.pin(v, v + 1, R);
    cb.pin(1, 2, P);
    cb.pin(1 + k, 2 + k, B);
    cb.pin(1 + 2 * k, 2 + 2 * k, R);
    cb.pin(k, k + 1, G);
    cb.pin(2 * k, 2 * k + 1, G);
    cb.pin(n, 1, B);

    cb.pin(1, 1 + k, R);
    cb.pin(1 + k, 1 + 2 * k, P);
    cb.pin(1, 1 + 2 * k, Y);
    cb.pin(2, 2 + k, R);
    cb.pin(2 + k, 2 + 2 * k, P);
    cb.pin(2, 2 + 2 * k, G);
    cb.pin(d, d + k, B);
    cb.pin(d + k, d + 2 * k, P);
    cb.pin(d, d + 2 * k, R);
    for (int i = 3; i <= d - 1; ++i) {
        cb.pin(i, i + k, P);
        cb.pin(i + k, i + 2 * k, G);
        cb.pin(i, i + 2 * k, B);
    }
    return cb;
}

// tag 5.1/d=3 (n odd, gcd 3, n != 3k)
CaseBuild case_odd_d3(int n, int k) {
    const auto vs = jump_cycles(n, k);
    const int f = n / 3;
    const std::vector<int>&v1 = vs[0], &v2 = vs[1], &v3 = vs[2];
    CaseBuild cb;
    cb.n = n;
    append_block(cb.order, v1, false);
    append_block(cb.order, interleave_alt0(v2, v3), true);

    // 1-jump edges touching V_1 on either side
    const int pos4 = index_of(v1, 4);
    for (int j = 0; j < f; ++j) {
        const int v = v1[j];
        if (j < pos4)
            cb.pin(v, v - 1, P);
        else if (j == pos4)
            cb.pin(v, v - 1, G);
        else if (j == pos4 + 1)
            cb.pin(v, v - 1, B);
        else
            cb.pin(v, v - 1, G);
        if (v == 1)
            cb.pin(v, v + 1, G);
        else if (v == mod1(1 + k, n))
            cb.pin(v, v + 1, B);
        else
            cb.pin(v, v + 1, Y);
    }
    // 1-jump edges between V_2 and V_3, indexed by height
    const int pos_n3 = index_of(v3, n);
    for (int j = 0; j < f; ++j) {
        const long long a = 2 + static_cast<long long>(j) * k;
        if (j == 0)
            cb.pin(a, a + 1, B);
        else if (j == 1)
            cb.pin(a, a + 1, G);
        else if (j == f - 2)
            cb.pin(a, a + 1, R);
        else if (k == 3) {
            if (j == f - 3)
                cb.pin(a, a + 1, B);
            else if (j == f - 1)
                cb.pin(a, a + 1, G);
            else
                cb.pin(a, a + 1, P);
        } else {
            if (j == f - 1)
                cb.pin(a, a + 1, B);
            else
                cb.pin(a, a + 1, j < pos_n3 ? P : G);
        }
    }
    // k-jump edges of the second and third cycles, paired by height
    for (int j = 0; j < f; ++j) {
        const long long a2 = 2 + static_cast<long long>(j) * k;
        const long long a3 = 3 + static_cast<long long>(j) * k;
        if (j == 0) {
            cb.pin(a2, a2 + k, P);
            cb.pin(a3, a3 + k, Y);
            continue;
        }
        int c;
        if (j == f - 3)
            c = k == 3 ? P : B;
        else if (j == f - 2)
            c = k == 3 ? B : G;
        else if (j == f - 1 || j % 2 == 1)
            c = R;
        else
            c = B;
        cb.pin(a2, a2 + k, c);
        cb.pin(a3, a3 + k, c);
    }
    // k-jump edges of the first cycle
    cb.pin(1, 1 + k, Y);
    cb.pin(1, 1 - k, R);
    if (k == 3) {
        const int j_sp = index_of(v1, mod1(n - 2, n));  // edge (n-2-k, n-2)
        cb.pin(n - 2 - k, n - 2, B);
        for (int j = 1; j <= f - 2; ++j) {
            if (j == j_sp - 1) continue;
            cb.mask(1 + static_cast<long long>(j) * k, 1 + static_cast<long long>(j + 1) * k,
                    (1u << R) | (1u << P));
        }
    } else {
        const int j4 = pos4;
        if (mod1(4 + 2LL * k, n) == 1) {
            cb.pin(4, 4 + k, P);
            for (int j = 1; j <= j4 - 1; ++j)
                cb.pin(1 + static_cast<long long>(j) * k, 1 + static_cast<long long>(j + 1) * k,
                       (j4 - 1 - j) % 2 == 0 ? R : G);
        } else {
            cb.pin(4, 4 + k, R);
            cb.pin(4, 4 - k, B);
            for (int j = 1; j <= j4 - 2; ++j)
                cb.mask(1 + static_cast<long long>(j) * k, 1 + static_cast<long long>(j + 1) * k,
                        (1u << R) | (1u << G));
            for (int j = j4 + 1; j <= f - 2; ++j)
                cb.pin(1 + static_cast<long long>(j) * k, 1 + static_cast<long long>(j + 1) * k,
                       (j - j4 - 1) % 2 == 0 ? P : B);
        }
    }
    return cb;
}

// tag 5.1/d>=5
CaseBuild case_odd_dbig(int n, int k) {
    const auto vs = jump_cycles(n, k);
    const int d = static_cast<int>(vs.size());
    const int f = n / d;
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= d - 2; i += 2) append_block(cb.order, vs[i - 1], false);
    append_block(cb.order, interleave_alt0(vs[d - 2], vs[d - 1]), true);
    for (int i = d - 3; i >= 2; i -= 2) append_block(cb.order, vs[i - 1], true);

    const std::vector<int>& vd = vs[d - 1];
    const int pos_n = index_of(vd, n);

    // 1-jump edges out of V_{d-1}, indexed by height
    for (int j = 0; j < f; ++j) {
        const long long a = d - 1 + static_cast<long long>(j) * k;
        if (j == f - 2)
            cb.pin(a, a + 1, R);
        else if (j == f - 3)
            cb.pin(a, a + 1, B);
        else
            cb.pin(a, a + 1, j < pos_n ? P : G);
    }
    // remaining 1-jump edges
    for (int i = 1; i <= d; ++i) {
        if (i == d - 1) continue;
        for (int j = 0; j < f; ++j) {
            const int v = vs[i - 1][j];
            if (i == d) {
                if (v == d)
                    cb.pin(v, v + 1, B);
                else
                    cb.pin(v, v + 1, j < pos_n ? G : P);
            } else if (i % 2 == 0) {
                cb.pin(v, v + 1, R);
            } else {
                cb.pin(v, v + 1, v == mod1(d - 2 + k, n) ? B : Y);
            }
        }
    }
    // k-jump edges of the last two cycles, paired by height
    for (int j = 0; j < f; ++j) {
        const long long a = d - 1 + static_cast<long long>(j) * k;
        const long long b = d + static_cast<long long>(j) * k;
        if (j == 0) {
            cb.pin(a, a + k, G);
            cb.pin(b, b + k, Y);
            continue;
        }
        int c;
        if (j == f - 3)
            c = j < pos_n ? P : G;
        else if (j == f - 2)
            c = B;
        else if (j == f - 1 || j % 2 == 1)
            c = R;
        else
            c = B;
        cb.pin(a, a + k, c);
        cb.pin(b, b + k, c);
    }
    // first cycle: two pinned edges at d+1, the rest alternates from the
    // closing edge (1, 1-k)
    const int jd = index_of(vs[0], mod1(d + 1, n));
    cb.pin(d + 1 - k, d + 1, G);
    cb.pin(d + 1, d + 1 + k, P);
    {
        std::vector<int> path_js;
        for (int j = jd + 1; j <= f - 1; ++j) path_js.push_back(j);
        for (int j = 0; j <= jd - 2; ++j) path_js.push_back(j);
        const int anchor = index_of(path_js, f - 1);
        for (size_t idx = 0; idx < path_js.size(); ++idx) {
            const long long j = path_js[idx];
            const size_t dist = idx >= static_cast<size_t>(anchor) ? idx - anchor : anchor - idx;
            cb.pin(1 + j * k, 1 + (j + 1) * k, dist % 2 == 0 ? R : B);
        }
    }
    // middle cycles: purple closing edge, paths complete in two colors
    for (int i = 2; i <= d - 2; ++i) cb.pin(i, i - k, P);
    for (int i = 2; i <= d - 3; ++i) cb.mask_path(vs[i - 1], (1u << B) | (1u << G));
    cb.pin(d - 2, d - 2 + k, G);
    cb.pin(d - 2 + k, d - 2 + 2LL * k, P);
    for (int j = 2; j <= f - 2; ++j)
        cb.mask(d - 2 + static_cast<long long>(j) * k, d - 2 + static_cast<long long>(j + 1) * k,
                (1u << G) | (1u << B));
    return cb;
}

// tag 6.1/a=2 (n = 2k+1)
CaseBuild case_r1_a2(int n, int k) {
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= k + 1; ++i) cb.order.push_back(i);
    for (int i = n; i >= k + 2; --i) cb.order.push_back(i);

    cb.pin(1, 1 + k, P);
    for (int i = 2; i <= k + 1; ++i) cb.pin(i, i + k, G);
    for (int i = k + 2; i <= n; ++i) cb.pin(i, i + k, R);
    cb.pin(1, 2, Y);
    cb.pin(1 + k, 2 + k, Y);
    cb.pin(1, n, B);
    for (int i = 2; i <= k; ++i) cb.pin(i, i + 1, (k - i) % 2 == 0 ? B : P);
    for (int i = k + 2; i <= n - 1; ++i) cb.pin(i, i + 1, (n - 1 - i) % 2 == 0 ? P : B);
    return cb;
}

// tag 6.1/k-even (r = 1, a >= 3)
CaseBuild case_r1_keven(int n, int k) {
    const OrderedPartition part = build_partition(n, k);
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= k; ++i) append_block(cb.order, part.sets[i - 1], i % 2 == 1);

    cb.pin(1, n, Y);
    for (int i = 2; i <= k; i += 2)
        for (int v : part.sets[i - 1]) {
            cb.pin(v - 1, v, G);
            cb.pin(v, v + 1, R);
        }
    for (int i = 1; i <= k; ++i) {
        cb.pin(i, i - k, i % 2 == 0 ? B : P);
        const auto& col = part.sets[i - 1];
        cb.pin(col[0], col[1], i % 2 == 1 ? B : P);
        const size_t len = col.size();
        cb.pin(col[len - 2], col[len - 1], i % 2 == 0 ? B : P);
        for (size_t j = 1; j + 2 < len; ++j) cb.mask(col[j], col[j + 1], (1u << B) | (1u << Y));
    }
    return cb;
}

// tag 6.1/k-odd (r = 1, a >= 4 even): interleaved tail block
CaseBuild case_r1_kodd(int n, int k) {
    const OrderedPartition part = build_partition(n, k);
    const int a = (n - 1) / k;
    std::vector<int> qk = part.sets[k - 1];
    std::vector<int> qk1(part.sets[0].begin() + 1, part.sets[0].end());
    CaseBuild cb;
    cb.n = n;
    cb.order.push_back(1);
    append_block(cb.order, interleave_alt1(qk1, qk), true);
    for (int i = 2; i <= k - 1; ++i) append_block(cb.order, part.sets[i - 1], i % 2 == 1);

    // 1-jump edges
    for (int v = 1; v <= n; ++v) {
        if (v == 1)
            cb.pin(v, v + 1, B);
        else if (v == n)
            cb.pin(v, v + 1, G);
        else if (v == k || v == n - 1)
            cb.pin(v, v + 1, B);
        else {
            const int res = 1 + (v - 1) % k;  // which column holds v
            if (res == 1)
                cb.pin(v, v + 1, P);  // interior of P_1
            else if (res == k)
                cb.pin(v, v + 1, Y);
            else
                cb.pin(v, v + 1, res % 2 == 0 ? G : B);
        }
    }
    // k-jump connectors between columns
    for (int i = 1; i <= k; ++i) {
        int c;
        if (i == 2 || i == k)
            c = Y;
        else if (i % 2 == 1)
            c = R;
        else
            c = P;
        cb.pin(i, i - k, c);
    }
    // k-jump edges within columns, by residue and height
    for (int j = 0; j <= a - 1; ++j) cb.pin(1 + static_cast<long long>(j) * k, 1 + (j + 1LL) * k,
                                            j == 0 ? Y : (j % 2 == 1 ? R : B));
    for (int j = 0; j <= a - 2; ++j) {
        cb.pin(2 + static_cast<long long>(j) * k, 2 + (j + 1LL) * k,
               j == 0 ? R : (j % 2 == 1 ? B : Y));
        cb.pin(3 + static_cast<long long>(j) * k, 3 + (j + 1LL) * k, j % 2 == 0 ? P : Y);
        cb.pin(k + static_cast<long long>(j) * k, k + (j + 1LL) * k, j % 2 == 0 ? R : B);
        for (int i = 4; i <= k - 1; ++i)
            cb.pin(i + static_cast<long long>(j) * k, i + (j + 1LL) * k, j % 2 == 0 ? Y : P);
    }
    return cb;
}

// tag 6.2/k-even (r = k-1)
CaseBuild case_rk1_keven(int n, int k) {
    const OrderedPartition part = build_partition(n, k);
    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= k; ++i) append_block(cb.order, part.sets[i - 1], i % 2 == 0);

    cb.pin(1, n, R);
    for (int i = 1; i <= k; ++i)
        for (int v : part.sets[i - 1]) {
            if (i % 2 == 1) {
                if (v != n) cb.pin(v, v + 1, Y);
            } else {
                cb.pin(v, v + 1, G);
            }
        }
    for (int i = 1; i <= k; ++i) {
        cb.pin(i, i - k, i % 2 == 1 ? B : P);
        cb.mask_path(part.sets[i - 1], (1u << R) | (1u << B) | (1u << P));
    }
    return cb;
}

// tag 6.2/k-odd (r = k-1): blocks of consecutive labels
CaseBuild case_rk1_kodd(int n, int k) {
    const int a = n / k;
    CaseBuild cb;
    cb.n = n;
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= a; ++i) {
        std::vector<int> block(k);
        std::iota(block.begin(), block.end(), 1 + (i - 1) * k);
        blocks.push_back(std::move(block));
    }
    {
        std::vector<int> tail(n - a * k);
        std::iota(tail.begin(), tail.end(), a * k + 1);
        blocks.push_back(std::move(tail));
    }
    for (int i = 1; i <= a + 1; ++i) append_block(cb.order, blocks[i - 1], i % 2 == 0);

    for (int v = 1; v <= n; ++v) {
        if (v == a * k) {
            cb.pin(v, v + k, R);
            continue;
        }
        const int blk = (v - 1) / k + 1;  // block index of v
        cb.pin(v, v + k, blk % 2 == 1 ? Y : G);
    }
    for (int i = 1; i <= a + 1; ++i)
        cb.pin(1 + static_cast<long long>(i - 1) * k, static_cast<long long>(i - 1) * k,
               i % 2 == 1 ? B : P);
    for (const auto& block : blocks) cb.mask_path(block, (1u << R) | (1u << B) | (1u << P));
    return cb;
}

// tags 6.3/t=3/...: split P_1, interleave the short set with the head of
// P_2, hang the leftovers after
CaseBuild case_mid_t3(int n, const OrderedPartition& part) {
    const int kap = part.jump;
    const std::vector<int>&p1 = part.sets[0], &p2 = part.sets[1], &p3 = part.sets[2];
    const int p = static_cast<int>(p3.size());
    const int len1 = static_cast<int>(p1.size());
    const bool big = p > len1 / 2;

    std::vector<int> p1h(p1.begin(), p1.begin() + p);   // first |P_3| of P_1
    std::vector<int> p1t(p1.begin() + p, p1.end());     // the rest
    std::vector<int> p2h(p2.begin(), p2.begin() + p);
    std::vector<int> p2t(p2.begin() + p, p2.end());

    CaseBuild cb;
    cb.n = n;
    append_block(cb.order, p1h, false);
    append_block(cb.order, interleave_alt1(p2h, p3), true);
    append_block(cb.order, p1t, false);
    append_block(cb.order, p2t, true);

    // 1-jump edges, keyed by the higher endpoint v of (v-1, v)
    std::vector<int> cls(n + 1, -1);  // page per higher endpoint
    auto set_cls = [&](int v, int page) {
        if (cls[v] != -1 && cls[v] != page) throw pin_conflict("t=3 cover overlap");
        cls[v] = page;
    };
    set_cls(3, R);
    set_cls(mod1(3 + kap, n), B);
    for (int v : p2) set_cls(v, P);
    if (big) {
        for (int i = len1 - p; i < p; ++i) set_cls(p1h[i], Y);  // last 2p-len1 of the head
        for (int v : p1t) {
            set_cls(mod1(v - 1, n), Y);
            set_cls(v, G);
            set_cls(mod1(v + 2, n), G);
        }
        for (int j = 2; j <= 2 * p - len1 - 1; ++j) set_cls(p3[j], G);
    } else {
        for (int j = 2; j < p; ++j) set_cls(p3[j], G);
        for (int i = 0; i < len1 - p; ++i) set_cls(p1[i], G);
        for (int i = len1 - p; i < len1; ++i) set_cls(p1[i], Y);
    }
    for (int v = 1; v <= n; ++v) {
        if (cls[v] == -1) throw pin_conflict("t=3 cover gap");
        cb.pin(v - 1, v, cls[v]);
    }

    // jump edges
    cb.pin(n - 1 - static_cast<long long>(kap), n - 1, R);
    for (int v : {1, 2, 3, n}) cb.pin(v, v - static_cast<long long>(kap), B);
    for (int i = 0; i + 1 < p; ++i) cb.pin(p1[i], p1[i + 1], i % 2 == 0 ? R : B);
    if (big) {
        // tail of P_1 anchored yellow at its last edge
        for (int i = p; i + 1 < len1; ++i)
            cb.pin(p1[i], p1[i + 1], (len1 - 2 - i) % 2 == 0 ? Y : B);
    } else {
        // tail of P_1 minus its last edge, anchored blue at the front
        for (int i = p; i + 2 < len1; ++i) cb.pin(p1[i], p1[i + 1], (i - p) % 2 == 0 ? B : R);
        cb.pin(p1[len1 - 2], p1[len1 - 1], G);
    }
    for (size_t i = p; i + 1 < p2.size(); ++i)
        cb.mask(p2[i], p2[i + 1], (1u << Y) | (1u << R));
    cb.pin(p2[0], p2[1], G);
    for (int i = 1; i + 1 < p; ++i) cb.pin(p2[i], p2[i + 1], (i - 1) % 2 == 0 ? R : B);
    cb.pin(p3[0], p3[1], G);
    for (int i = 1; i + 1 < p; ++i) cb.pin(p3[i], p3[i + 1], (i - 1) % 2 == 0 ? R : B);
    return cb;
}

// tag 6.3/t>3
CaseBuild case_mid_todd_big(int n, const OrderedPartition& part) {
    const int kap = part.jump;
    const int t = part.t;
    const auto& sets = part.sets;
    const std::vector<int>& pt = sets[t - 1];
    const std::vector<int>& pt1 = sets[t - 2];
    const int p = static_cast<int>(pt.size());
    const int len1 = static_cast<int>(sets[0].size());

    std::vector<int> pt1h(pt1.begin(), pt1.begin() + p);
    std::vector<int> pt1t(pt1.begin() + p, pt1.end());

    CaseBuild cb;
    cb.n = n;
    for (int i = 1; i <= t - 3; ++i) append_block(cb.order, sets[i - 1], i % 2 == 1);
    append_block(cb.order, pt1t, false);
    append_block(cb.order, sets[t - 3], true);
    append_block(cb.order, interleave_alt1(pt1h, pt), false);

    // 1-jump edges by left endpoint; every edge out of the long-set run
    // into the short set is keyed by its right endpoint
    std::vector<int> owner(n + 1, 0);  // which set holds each vertex
    for (int i = 1; i <= t; ++i)
        for (int v : sets[i - 1]) owner[v] = i;
    for (int v = 1; v <= n; ++v) {
        const int r_end = mod1(v + 1, n);
        if (owner[r_end] == t) {
            const int j = index_of(pt, r_end);
            cb.pin(v, v + 1, j == 0 ? R : (j == p - 1 ? P : B));
        } else if (owner[v] == t - 1) {
            cb.pin(v, v + 1, P);  // only the tail of P_{t-1} reaches here
        } else if (owner[v] % 2 == 1 && owner[v] <= t - 2) {
            cb.pin(v, v + 1, Y);
        } else {
            cb.pin(v, v + 1, G);  // even sets up to t-3 and the short set
        }
    }

    // jump edges
    for (int i = 1; i <= t; ++i) {
        const bool red = (i % 2 == 0 && i <= t - 3) || i == t - 2;
        cb.pin(i, i - static_cast<long long>(kap), red ? R : B);
    }
    for (int i = 0; i + 1 < p; ++i) {
        cb.pin(pt[i], pt[i + 1], i % 2 == 0 ? P : R);
        cb.pin(pt1[i], pt1[i + 1], i % 2 == 0 ? P : R);
    }
    cb.pin(sets[0][len1 - 2], sets[0][len1 - 1], P);
    for (int i = 0; i + 2 < len1; ++i) cb.pin(sets[0][i], sets[0][i + 1], i % 2 == 0 ? R : B);
    for (int i = 2; i <= t - 2; ++i) cb.mask_path(sets[i - 1], (1u << P) | (1u << B));
    cb.pin(pt1[p - 1], pt1[p], B);  // (n-kappa, n)
    for (int i = p; i + 1 < static_cast<int>(pt1.size()); ++i)
        cb.mask(pt1[i], pt1[i + 1], (1u << G) | (1u << R));
    return cb;
}

// tag 6.4/t=2
CaseBuild case_mid_t2(int n, const OrderedPartition& part) {
    const int kap = part.jump;
    const std::vector<int>&p1 = part.sets[0], &p2 = part.sets[1];
    const int len1 = static_cast<int>(p1.size());
    const int pos_n = index_of(p1, n);
    const int pos_n1 = index_of(p2, n - 1);
    const int q = len1 - pos_n;
    if (q != static_cast<int>(p2.size()) - pos_n1 || q % 2 == 0)
        throw pin_conflict("t=2 split sizes unexpected");

    std::vector<int> p1t(p1.begin() + pos_n, p1.end());
    std::vector<int> p2t(p2.begin() + pos_n1, p2.end());
    std::vector<int> p1h(p1.begin(), p1.begin() + pos_n);
    std::vector<int> p2h(p2.begin(), p2.begin() + pos_n1);

    CaseBuild cb;
    cb.n = n;
    append_block(cb.order, p1h, false);
    append_block(cb.order, interleave_alt1(p1t, p2t), true);
    append_block(cb.order, p2h, true);

    // 1-jump edges
    std::vector<char> in_p2h(n + 1, 0), in_p2t(n + 1, 0), in_p1t(n + 1, 0);
    for (int v : p2h) in_p2h[v] = 1;
    for (int v : p2t) in_p2t[v] = 1;
    for (int v : p1t) in_p1t[v] = 1;
    for (int v = 1; v <= n; ++v) {
        const int r_end = mod1(v + 1, n);
        if (v == n)
            cb.pin(v, v + 1, R);
        else if (v == n - 1)
            cb.pin(v, v + 1, G);
        else if (in_p2h[r_end])
            cb.pin(v, v + 1, P);
        else if (in_p2t[r_end])
            cb.pin(v, v + 1, R);
        else if (in_p2t[v])
            cb.pin(v, v + 1, P);
        else if (in_p2h[v])
            cb.pin(v, v + 1, G);
        else if (in_p1t[v])
            cb.pin(v, v + 1, Y);
        else
            throw pin_conflict("t=2 cover gap");
    }

    // jump edges
    cb.pin(p1[pos_n - 1], p1[pos_n], P);      // (n-kappa, n)
    cb.pin(p2[pos_n1 - 1], p2[pos_n1], Y);    // (n-1-kappa, n-1)
    for (int i = 0; i < q; ++i) {             // tail paths plus their closing connectors
        const int a1 = p1t[i], b1 = i + 1 < q ? p1t[i + 1] : mod1(p1t[i] + kap, n);
        const int a2 = p2t[i], b2 = i + 1 < q ? p2t[i + 1] : mod1(p2t[i] + kap, n);
        cb.pin(a1, b1, i % 2 == 0 ? B : G);
        cb.pin(a2, b2, i % 2 == 0 ? B : G);
    }
    for (int i = 0; i + 1 < pos_n1; ++i)
        cb.pin(p2[i], p2[i + 1], (pos_n1 - 2 - i) % 2 == 0 ? R : Y);
    const int s0 = pos_n - q;  // head of the subpath whose vertices sit two before the tail
    for (int i = s0; i + 1 < pos_n; ++i) cb.pin(p1[i], p1[i + 1], (i - s0) % 2 == 0 ? P : B);
    cb.pin(p1[s0 - 1], p1[s0], B);
    for (int i = 0; i + 1 < s0; ++i) cb.pin(p1[i], p1[i + 1], i % 2 == 0 ? G : R);
    return cb;
}

// tag 6.4/t>=4
CaseBuild case_mid_teven_big(int n, const OrderedPartition& part) {
    const int kap = part.jump;
    const int t = part.t;
    const auto& sets = part.sets;
    const std::vector<int>& p1 = sets[0];
    const std::vector<int>& pt1 = sets[t - 2];
    const std::vector<int>& pt = sets[t - 1];
    const int pos1 = index_of(p1, mod1(t + 1, n));
    const int posn = index_of(pt1, n);
    const int p = pos1;
    if (p != static_cast<int>(pt1.size()) - posn) throw pin_conflict("t>=4 split sizes unexpected");

    std::vector<int> p1h(p1.begin(), p1.begin() + pos1);
    std::vector<int> p1t(p1.begin() + pos1, p1.end());
    std::vector<int> pt1h(pt1.begin(), pt1.begin() + posn);
    std::vector<int> pt1t(pt1.begin() + posn, pt1.end());

    CaseBuild cb;
    cb.n = n;
    for (int i = 2; i <= t - 2; ++i) append_block(cb.order, sets[i - 1], i % 2 == 0);
    append_block(cb.order, pt1h, false);
    append_block(cb.order, interleave_heads(p1h, pt1t), false);
    append_block(cb.order, pt, true);
    append_block(cb.order, p1t, false);

    // 1-jump edges by left endpoint
    std::vector<int> owner(n + 1, 0);
    for (int i = 1; i <= t; ++i)
        for (int v : sets[i - 1]) owner[v] = i;
    for (int v = 1; v <= n; ++v) {
        if (v == 1 || v == n - 1 || v == kap)
            cb.pin(v, v + 1, P);
        else if (v == n)
            cb.pin(v, v + 1, Y);
        else if (owner[v] == t - 1)
            cb.pin(v, v + 1, R);
        else if (owner[v] % 2 == 0 || owner[v] == t)
            cb.pin(v, v + 1, Y);
        else
            cb.pin(v, v + 1, G);
    }

    // jump edges
    for (int i = 0; i < pos1; ++i)
        cb.pin(p1[i], p1[i + 1], i == 0 ? R : (i % 2 == 1 ? B : P));
    {
        std::vector<int> path2;
        path2.push_back(pt1[posn - 1]);  // n - kappa
        path2.insert(path2.end(), pt1t.begin(), pt1t.end());
        path2.push_back(pt[0]);
        for (size_t i = 0; i + 1 < path2.size(); ++i) {
            int c;
            if (i == 0)
                c = B;
            else if (i == 1)
                c = G;
            else
                c = i % 2 == 0 ? B : P;
            cb.pin(path2[i], path2[i + 1], c);
        }
    }
    for (int i = 1; i <= t - 1; ++i)
        cb.pin(i, i - static_cast<long long>(kap), i % 2 == 1 ? B : R);
    for (int i = pos1; i + 1 < static_cast<int>(p1.size()); ++i)
        cb.pin(p1[i], p1[i + 1], (i - pos1) % 2 == 0 ? B : P);
    for (size_t i = 0; i + 1 < pt.size(); ++i) cb.pin(pt[i], pt[i + 1], i % 2 == 0 ? G : P);
    for (int i = 0; i + 1 < posn; ++i) cb.mask(pt1[i], pt1[i + 1], (1u << G) | (1u << P));
    for (int i = 3; i <= t - 3; ++i) cb.mask_path(sets[i - 1], (1u << B) | (1u << P));

    const std::vector<int>& p2 = sets[1];
    const std::vector<int>& pt2 = sets[t - 3];  // P_{t-2}
    const int pn2 = index_of(pt2, n - 1);
    if (t == 4) {
        // P_2 and P_{t-2} coincide; merge the pinned edges and leave the
        // rest to completion
        cb.pin(p2[0], p2[1], B);
        cb.pin(pt2[pn2 - 1], pt2[pn2], B);
        cb.pin(pt2[pn2], pt2[pn2 + 1], R);
        for (size_t i = 1; i + 1 < p2.size(); ++i) {
            if (static_cast<int>(i) == pn2 - 1 || static_cast<int>(i) == pn2) continue;
            cb.mask(p2[i], p2[i + 1], (1u << R) | (1u << P) | (1u << B));
        }
    } else {
        cb.pin(p2[0], p2[1], B);
        for (size_t i = 1; i + 1 < p2.size(); ++i) cb.mask(p2[i], p2[i + 1], (1u << R) | (1u << P));
        cb.pin(pt2[pn2 - 1], pt2[pn2], B);
        cb.pin(pt2[pn2], pt2[pn2 + 1], R);
        for (size_t i = 0; i + 1 < pt2.size(); ++i) {
            if (static_cast<int>(i) == pn2 - 1 || static_cast<int>(i) == pn2) continue;
            cb.mask(pt2[i], pt2[i + 1], (1u << P) | (1u << B));
        }
    }
    return cb;
}

// ---------------- realization ----------------

struct RealizeResult {
    bool ok = false;
    BookEmbedding emb;
};

RealizeResult try_realize(const CirculantSpec& spec, const CaseBuild& cb, int pages,
                          const std::string& route, bool use_masks) {
    RealizeResult res;
    const bool debug = std::getenv("CIRC_DEBUG") != nullptr;
    const std::vector<Edge> edges = spec.edges();
    const Layout layout(cb.order);
    const auto adj = edge_conflicts(edges, layout);
    const uint8_t full = static_cast<uint8_t>((1u << pages) - 1);
    std::vector<uint8_t> dom(edges.size(), full);

    auto eidx = [&](const Edge& e) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e)) {
            if (debug)
                std::fprintf(stderr, "[%s] pinned non-edge (%d,%d)\n", route.c_str(), e.u, e.v);
            throw std::logic_error("construction referenced a non-edge");
        }
        return static_cast<size_t>(it - edges.begin());
    };

    if (use_masks)
        for (const auto& [e, mask] : cb.masks) {
            const size_t i = eidx(e);
            dom[i] &= mask;
            if (dom[i] == 0) return res;
        }
    for (const auto& [e, page] : cb.pins) {
        const size_t i = eidx(e);
        const uint8_t want = static_cast<uint8_t>(1u << page);
        if (!(dom[i] & want) || !(full & want) ||
            (dom[i] != want && std::popcount(dom[i]) == 1)) {
            if (debug)
                std::fprintf(stderr, "[%s] pin clash at (%d,%d): page %d vs domain %02x\n",
                             route.c_str(), e.u, e.v, page, dom[i]);
            return res;
        }
        dom[i] = want;
    }
    if (debug) {
        for (size_t i = 0; i < edges.size(); ++i)
            for (int j : adj[i])
                if (static_cast<size_t>(j) > i && std::popcount(dom[i]) == 1 &&
                    dom[i] == dom[static_cast<size_t>(j)])
                    std::fprintf(stderr, "[%s] pinned conflict (%d,%d) vs (%d,%d) on page %d\n",
                                 route.c_str(), edges[i].u, edges[i].v, edges[j].u, edges[j].v,
                                 std::countr_zero(dom[i]));
    }

    DomainSolver solver(adj, dom);
    if (!solver.solve()) return res;

    res.emb.layout = layout;
    res.emb.pages = pages;
    res.emb.route = route;
    for (size_t i = 0; i < edges.size(); ++i) res.emb.assignment[edges[i]] = solver.page[i];
    res.ok = verify_embedding(spec, res.emb).valid();
    return res;
}

// free completion on one layout at the optimal page count, node-bounded so
// an unusable layout is abandoned instead of exhausted
RealizeResult realize_free(const CirculantSpec& spec, const std::vector<int>& order, int pages,
                           const std::string& route) {
    RealizeResult res;
    const std::vector<Edge> edges = spec.edges();
    const Layout layout(order);
    std::vector<int> coloring;
    if (min_pages_on_layout(edges, layout, pages, &coloring, 2'000'000) > pages) return res;
    res.emb.layout = layout;
    res.emb.pages = pages;
    res.emb.route = route;
    for (size_t i = 0; i < edges.size(); ++i) res.emb.assignment[edges[i]] = coloring[i];
    res.ok = verify_embedding(spec, res.emb).valid();
    return res;
}

// Attempt ladder: the written-out coloring, then the same coloring with the
// two-color completions freed, then plain search on the same layout, then
// generic layouts, and at tiny sizes an exhaustive order search.
BookEmbedding realize_build(const CirculantSpec& spec, const CaseBuild* cb, int n,
                            const std::string& route) {
    const int pages = predicted_mbt(spec);
    if (cb != nullptr) {
        try {
            RealizeResult r = try_realize(spec, *cb, pages, route, true);
            if (r.ok) return r.emb;
            if (!cb->masks.empty()) {
                r = try_realize(spec, *cb, pages, route + "+fallback", false);
                if (r.ok) return r.emb;
            }
            r = realize_free(spec, cb->order, pages, route + "+fallback");
            if (r.ok) return r.emb;
        } catch (const std::logic_error&) {
            // bad pin bookkeeping or a malformed order; fall through
        }
    }

    std::vector<std::vector<int>> candidates;
    {
        std::vector<int> nat(n);
        std::iota(nat.begin(), nat.end(), 1);
        candidates.push_back(std::move(nat));
        std::vector<int> split;  // 1..m then n down to m+1
        for (int i = 1; i <= (n + 1) / 2; ++i) split.push_back(i);
        for (int i = n; i > (n + 1) / 2; --i) split.push_back(i);
        candidates.push_back(std::move(split));
        if (n % 2 == 0) {
            std::vector<int> zig;  // 1, n, 3, n-2, ...
            for (int i = 0; i < n / 2; ++i) {
                zig.push_back(2 * i + 1);
                zig.push_back(n - 2 * i);
            }
            candidates.push_back(std::move(zig));
        }
    }
    for (const auto& ord : candidates) {
        const RealizeResult r = realize_free(spec, ord, pages, route + "+fallback");
        if (r.ok) return r.emb;
    }
    if (n <= 10) {
        std::vector<int> rest(n - 1);
        std::iota(rest.begin(), rest.end(), 2);
        do {
            std::vector<int> ord{1};
            ord.insert(ord.end(), rest.begin(), rest.end());
            const RealizeResult r = realize_free(spec, ord, pages, route + "+fallback");
            if (r.ok) return r.emb;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    throw unsupported_instance("embed: no optimal embedding found for this instance");
}

BookEmbedding realize(const CirculantSpec& spec, CaseBuild (*builder)(int, int), int n, int k,
                      const std::string& route) {
    CaseBuild cb;
    bool built = true;
    try {
        cb = builder(n, k);
    } catch (const std::logic_error&) {
        built = false;
    }
    return realize_build(spec, built ? &cb : nullptr, n, route);
}

int folded(int n, int k) {
    if (k <= 0 || k >= n) throw std::invalid_argument("embed: jump must lie in [1, n-1]");
    return k > n / 2 ? n - k : k;
}

}  // namespace

BookEmbedding embed_even_k_odd(int n, int k) {
    k = folded(n, k);
    if (n % 2 != 0 || k % 2 != 1 || k < 2)
        throw std::invalid_argument("embed_even_k_odd: need n even, k odd, k >= 2");
    return realize(CirculantSpec::cnk(n, k), case_even_k_odd, n, k, "4.1");
}

BookEmbedding embed_even_k_even(int n, int k) {
    k = folded(n, k);
    if (n % 2 != 0 || k % 2 != 0) throw std::invalid_argument("embed_even_k_even: need n, k even");
    if (2 * k == n)
        return realize(CirculantSpec::cnk(n, k), [](int nn, int) { return case_even_half(nn); }, n,
                       k, "4.2/k=n2");
    return realize(CirculantSpec::cnk(n, k), case_even_k_even, n, k, "4.2/general");
}

BookEmbedding embed_odd_gcd(int n, int k) {
    k = folded(n, k);
    const int d = std::gcd(n, k);
    if (n % 2 == 0 || d < 3) throw std::invalid_argument("embed_odd_gcd: need n odd, gcd(n,k) >= 3");
    if (n == 3 * k) return realize(CirculantSpec::cnk(n, k), case_odd_3k, n, k, "5.1/n=3k");
    if (d == 3) return realize(CirculantSpec::cnk(n, k), case_odd_d3, n, k, "5.1/d=3");
    return realize(CirculantSpec::cnk(n, k), case_odd_dbig, n, k, "5.1/d>=5");
}

BookEmbedding embed_odd_r1(int n, int k) {
    k = folded(n, k);
    if (n % 2 == 0 || std::gcd(n, k) != 1 || n % k != 1)
        throw std::invalid_argument("embed_odd_r1: need n odd, gcd(n,k) = 1, n mod k = 1");
    const int a = n / k;
    if (a == 2) return realize(CirculantSpec::cnk(n, k), case_r1_a2, n, k, "6.1/a=2");
    if (k % 2 == 0) return realize(CirculantSpec::cnk(n, k), case_r1_keven, n, k, "6.1/k-even");
    return realize(CirculantSpec::cnk(n, k), case_r1_kodd, n, k, "6.1/k-odd");
}

BookEmbedding embed_odd_rk1(int n, int k) {
    k = folded(n, k);
    if (n % 2 == 0 || std::gcd(n, k) != 1 || n % k != k - 1)
        throw std::invalid_argument("embed_odd_rk1: need n odd, gcd(n,k) = 1, n mod k = k-1");
    if (k % 2 == 0) return realize(CirculantSpec::cnk(n, k), case_rk1_keven, n, k, "6.2/k-even");
    return realize(CirculantSpec::cnk(n, k), case_rk1_kodd, n, k, "6.2/k-odd");
}

BookEmbedding embed_odd_mid_r(int n, int k) {
    k = folded(n, k);
    const int r = n % k;
    if (n % 2 == 0 || std::gcd(n, k) != 1 || r < 2 || r > k - 2)
        throw std::invalid_argument("embed_odd_mid_r: need n odd, coprime, 2 <= n mod k <= k-2");
    const OrderedPartition part = build_partition(n, k);
    const CirculantSpec spec = CirculantSpec::cnk(n, k);

    std::string route;
    CaseBuild cb;
    bool built = true;
    try {
        if (part.t == 2) {
            route = "6.4/t=2";
            cb = case_mid_t2(n, part);
        } else if (part.t % 2 == 0) {
            route = "6.4/t>=4";
            cb = case_mid_teven_big(n, part);
        } else if (part.t == 3) {
            const bool big = part.sets[2].size() > part.sets[0].size() / 2;
            route = big ? "6.3/t=3/|Pt|>half" : "6.3/t=3/|Pt|<=half";
            cb = case_mid_t3(n, part);
        } else {
            route = "6.3/t>3";
            cb = case_mid_todd_big(n, part);
        }
    } catch (const std::logic_error&) {
        built = false;
        route = part.t % 2 == 0 ? (part.t == 2 ? "6.4/t=2" : "6.4/t>=4")
                                : (part.t == 3 ? "6.3/t=3" : "6.3/t>3");
    }

    return realize_build(spec, built ? &cb : nullptr, n, route);
}

BookEmbedding embed(int n, int k) {
    if (n < 3) throw std::invalid_argument("embed: n must be >= 3");
    k = folded(n, k);
    if (k == 0) throw std::invalid_argument("embed: jump collapses to zero");
    if (k == 1)
        return realize(CirculantSpec::cnk(n, 1), [](int nn, int) { return case_cycle(nn); }, n, k,
                       "cycle");
    if (n % 2 == 0) return k % 2 == 1 ? embed_even_k_odd(n, k) : embed_even_k_even(n, k);
    if (std::gcd(n, k) > 1) return embed_odd_gcd(n, k);
    const int r = n % k;
    if (r == 1) return embed_odd_r1(n, k);
    if (r == k - 1) return embed_odd_rk1(n, k);
    return embed_odd_mid_r(n, k);
}

}  // namespace circulant
