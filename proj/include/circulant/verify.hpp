#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circulant/graph.hpp"

namespace circulant {

struct unknown_vertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct too_large : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Circular vertex order; index 0 is the anchor and the stored direction is
// one fixed rotational sense.  Immutable once built.
class Layout {
  public:
    Layout() = default;
    explicit Layout(std::vector<int> order);

    const std::vector<int>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    // 0-based position; throws unknown_vertex for labels not in the layout
    int pos(int v) const;

  private:
    std::vector<int> order_;
    std::vector<int> pos_;  // label -> index + 1
};

struct BookEmbedding {
    Layout layout;
    int pages = 0;
    std::map<Edge, int> assignment;  // edge -> page in [0, pages)
    std::string route;               // case tag that produced the embedding
};

// Chord crossing under a circular layout: true iff the endpoint pairs
// strictly interleave.  Edges sharing an endpoint never cross.
bool crosses(const Layout& layout, const Edge& e1, const Edge& e2);

struct Violation {
    Edge e1, e2;
    std::string reason;
};

struct VerificationReport {
    bool proper_matching_per_page = false;
    bool noncrossing_per_page = false;
    bool complete_cover = false;
    int pages_used = 0;
    std::optional<Violation> first_violation;

    bool valid() const { return proper_matching_per_page && noncrossing_per_page && complete_cover; }
};

// Checks the matching-book conditions: every page a matching, every page
// noncrossing in the layout, and the assignment covering E(spec) exactly.
// Violations are data, not errors.
VerificationReport verify_embedding(const CirculantSpec& spec, const BookEmbedding& emb);

// Exact matching book thickness by exhaustive search over circular orders
// (vertex 1 anchored, reflections deduplicated) with an exact conflict-graph
// coloring per order.  Guarded to n <= 10.  Returns the exact value when it
// is <= page_cap, page_cap + 1 otherwise.
int brute_force_mbt(const CirculantSpec& spec, int page_cap = 6);

// Minimum pages achievable on one fixed layout: the chromatic number of the
// conflict graph (conflict = shared endpoint or crossing), computed by
// branch and bound, capped at `cap` (returns cap + 1 when infeasible).
// Shared by the oracle and the constructive fallback path.  A positive
// node_budget bounds the search; the result is then only an upper-bound
// witness (cap + 1 may mean "not found within budget").
int min_pages_on_layout(const std::vector<Edge>& edges, const Layout& layout, int cap,
                        std::vector<int>* coloring_out = nullptr, long long node_budget = 0);

}  // namespace circulant
