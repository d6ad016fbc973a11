#pragma once

#include <stdexcept>
#include <vector>

namespace circulant {

struct invalid_jump : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct duplicate_jump : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertices are labeled 1..n; every mod-n reduction maps 0 back to n.
inline int mod1(long long x, int n) {
    long long r = x % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

struct Edge {
    int u = 0, v = 0;  // canonical: u < v
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Circulant graph on Z_n = {1..n} with a normalized jump set of size 1 or 2.
// u ~ v iff (u-v) mod n is +-j for some jump j.  Raw jumps j with
// ceil(n/2) <= j <= n-1 are folded to n-j.
class CirculantSpec {
  public:
    static CirculantSpec build(int n, std::vector<int> raw_jumps);
    // C(n,k): jump set {1,k} (plain n-cycle when k = 1).
    static CirculantSpec cnk(int n, int k);

    int n() const { return n_; }
    const std::vector<int>& jumps() const { return jumps_; }
    bool is_cnk() const;        // jump set {1} or {1,k}
    int cnk_jump() const;       // the k of C(n,k); 1 for the plain cycle
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;  // canonical (min endpoint, then max) order
    size_t edge_count() const;

  private:
    CirculantSpec(int n, std::vector<int> jumps) : n_(n), jumps_(std::move(jumps)) {}
    int n_ = 0;
    std::vector<int> jumps_;
};

// Edge-disjoint cycle cover of C(n,k): C_0 is the 1-jump n-cycle and
// C_i = (i, i+k, ..., i+(n/d-1)k) for i = 1..d, d = gcd(n,k).  For the
// degenerate k = n/2 the k-jump edges form a perfect matching instead and
// are reported separately so no caller ever sees a length-2 "cycle".
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // C_0 first, then C_1..C_d
    bool half_jump_matching = false;
    std::vector<Edge> matching;  // populated only when half_jump_matching
};

CycleDecomposition cycle_decomposition(const CirculantSpec& spec);

// Closed-form facts for C(n,k); the traversal-based cross-checks live in
// the tests.
bool is_bipartite(const CirculantSpec& spec);
int max_degree(const CirculantSpec& spec);

// Matching book thickness of C(n,k): Delta when n is even and k odd,
// Delta+1 otherwise.  k = 1 is the plain cycle: 2 pages when n is even,
// 3 when odd.
int predicted_mbt(const CirculantSpec& spec);
int predicted_mbt(int n, int k);

}  // namespace circulant
