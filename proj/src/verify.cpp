#include "circulant/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace circulant {

Layout::Layout(std::vector<int> order) : order_(std::move(order)) {
    int maxv = 0;
    for (int v : order_) {
        if (v <= 0) throw unknown_vertex("Layout: labels must be positive");
        maxv = std::max(maxv, v);
    }
    pos_.assign(maxv + 1, 0);
    for (size_t i = 0; i < order_.size(); ++i) {
        if (pos_[order_[i]] != 0) throw unknown_vertex("Layout: duplicate label");
        pos_[order_[i]] = static_cast<int>(i) + 1;
    }
}

int Layout::pos(int v) const {
    if (v <= 0 || v >= static_cast<int>(pos_.size()) || pos_[v] == 0)
        throw unknown_vertex("Layout: vertex not in layout");
    return pos_[v] - 1;
}

bool crosses(const Layout& layout, const Edge& e1, const Edge& e2) {
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
    const int n = layout.size();
    const int a = layout.pos(e1.u);
    const int b = layout.pos(e1.v);
    const int c = layout.pos(e2.u);
    const int d = layout.pos(e2.v);
    auto inside = [&](int x) {  // strictly inside the arc a -> b (positive sense)
        const int span = (b - a + n) % n;
        const int off = (x - a + n) % n;
        return 0 < off && off < span;
    };
    return inside(c) != inside(d);
}

VerificationReport verify_embedding(const CirculantSpec& spec, const BookEmbedding& emb) {
    VerificationReport rep;
    if (emb.layout.size() != spec.n())
        throw unknown_vertex("verify_embedding: layout is not a permutation of V");
    for (int v = 1; v <= spec.n(); ++v) emb.layout.pos(v);  // throws if missing

    const std::vector<Edge> want = spec.edges();
    rep.complete_cover = emb.assignment.size() == want.size();
    for (const Edge& e : want) {
        if (!emb.assignment.count(e)) {
            rep.complete_cover = false;
            if (!rep.first_violation) rep.first_violation = Violation{e, e, "edge missing from assignment"};
        }
    }
    for (const auto& [e, page] : emb.assignment) {
        if (!std::binary_search(want.begin(), want.end(), e)) {
            rep.complete_cover = false;
            if (!rep.first_violation) rep.first_violation = Violation{e, e, "assigned edge not in graph"};
        }
        if (page < 0 || page >= emb.pages) {
            rep.complete_cover = false;
            if (!rep.first_violation) rep.first_violation = Violation{e, e, "page index out of range"};
        }
    }

    rep.proper_matching_per_page = true;
    rep.noncrossing_per_page = true;
    std::vector<bool> used;
    std::vector<std::pair<Edge, int>> items(emb.assignment.begin(), emb.assignment.end());
    for (size_t i = 0; i < items.size(); ++i) {
        const auto& [e1, p1] = items[i];
        if (p1 >= 0) {
            if (static_cast<size_t>(p1) >= used.size()) used.resize(p1 + 1, false);
            used[p1] = true;
        }
        for (size_t j = i + 1; j < items.size(); ++j) {
            const auto& [e2, p2] = items[j];
            if (p1 != p2) continue;
            const bool share =
                e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v;
            if (share) {
                if (rep.proper_matching_per_page) {
                    rep.proper_matching_per_page = false;
                    if (!rep.first_violation)
                        rep.first_violation = Violation{e1, e2, "same-page edges share an endpoint"};
                }
            } else if (crosses(emb.layout, e1, e2)) {
                if (rep.noncrossing_per_page) {
                    rep.noncrossing_per_page = false;
                    if (!rep.first_violation)
                        rep.first_violation = Violation{e1, e2, "same-page edges cross"};
                }
            }
        }
    }
    rep.pages_used = static_cast<int>(std::count(used.begin(), used.end(), true));
    return rep;
}

namespace {

std::vector<std::vector<int>> conflict_graph(const std::vector<Edge>& edges, const Layout& layout) {
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

// Exact bounded coloring of the conflict graph.  Vertices are picked
// dynamically by saturation (distinct neighbor colors), ties by degree;
// color indices are capped by the best complete coloring so far.
struct ColorSearch {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> color;
    std::vector<int> best_coloring;
    size_t assigned = 0;
    int best;   // page count of best complete coloring found (cap+1 if none)
    int lower;  // early-out bound
    long long nodes = 0;
    long long budget = 0;  // 0 = unbounded

    ColorSearch(const std::vector<std::vector<int>>& a, int cap, int lb)
        : adj(a), color(a.size(), -1), best(cap + 1), lower(lb) {}

    void dfs(int used) {
        if (used >= best) return;
        if (budget > 0 && ++nodes > budget) return;
        if (assigned == adj.size()) {
            best = used;
            best_coloring = color;
            return;
        }
        int v = -1, vsat = -1, vdeg = -1;
        unsigned vtaken = 0;
        for (size_t u = 0; u < adj.size(); ++u) {
            if (color[u] >= 0) continue;
            unsigned taken = 0;
            for (int w : adj[u])
                if (color[w] >= 0) taken |= 1u << color[w];
            const int sat = std::popcount(taken);
            const int deg = static_cast<int>(adj[u].size());
            if (sat > vsat || (sat == vsat && deg > vdeg)) {
                vsat = sat;
                vdeg = deg;
                v = static_cast<int>(u);
                vtaken = taken;
            }
        }
        const int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if (vtaken & (1u << c)) continue;
            color[v] = c;
            ++assigned;
            dfs(std::max(used, c + 1));
            --assigned;
            color[v] = -1;
            if (best <= lower) return;
        }
    }
};

}  // namespace

int min_pages_on_layout(const std::vector<Edge>& edges, const Layout& layout, int cap,
                        std::vector<int>* coloring_out, long long node_budget) {
    const auto adj = conflict_graph(edges, layout);
    ColorSearch search(adj, cap, 0);
    search.budget = node_budget;
    search.dfs(0);
    if (coloring_out) {
        if (search.best <= cap)
            *coloring_out = search.best_coloring;
        else
            coloring_out->clear();
    }
    return search.best;
}

int brute_force_mbt(const CirculantSpec& spec, int page_cap) {
    const int n = spec.n();
    if (n > 10) throw too_large("brute_force_mbt: n exceeds the exhaustive-search guard (10)");
    const std::vector<Edge> edges = spec.edges();

    // Edges at a common vertex pairwise conflict, so pages >= max degree.
    std::vector<int> deg(n + 1, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    const int lower = *std::max_element(deg.begin(), deg.end());

    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> ord(n);
    int best = page_cap + 1;
    do {
        if (rest.front() > rest.back()) continue;  // reflection dedup
        ord.clear();
        ord.push_back(1);
        ord.insert(ord.end(), rest.begin(), rest.end());
        const Layout layout(ord);

        const auto adj = conflict_graph(edges, layout);
        ColorSearch search(adj, std::min(best - 1, page_cap), lower);
        search.dfs(0);
        best = std::min(best, search.best);
        if (best <= lower) break;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

}  // namespace circulant
