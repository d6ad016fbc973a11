#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "circulant/graph.hpp"

namespace circulant {

struct jump_coincidence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct precondition_violated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct size_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The four structural families of C(Z_n, {k1,k2}).  `copies` is always
// gcd(k1, k2, n); the remaining parameters describe one connected
// component.
struct SingleJumpUnion {  // component isomorphic to C(n1, k)
    int copies = 0, n1 = 0, k = 0;
};
struct BundleUnion {  // component: cycle bundle, base C_base_len, fiber C_fiber_len
    int copies = 0, base_len = 0, fiber_len = 0, shift = 0;
    bool trivial_shift = false;
};
struct PrismUnion {  // component isomorphic to K_2 x C_fiber_len (cartesian)
    int copies = 0, fiber_len = 0;
};
struct HalfJumpUnion {  // component isomorphic to C(n1, n1/2)
    int copies = 0, n1 = 0;
};

struct Classification {
    std::variant<SingleJumpUnion, BundleUnion, PrismUnion, HalfJumpUnion> family;
    int d1 = 0, d2 = 0, d = 0;  // gcd(n,k1), gcd(n,k2) with d1 <= d2, gcd(d1,d2)
    int n = 0, k1 = 0, k2 = 0;  // normalized instance, jump roles swapped so d1 <= d2
};

// Decides the family of C(Z_n, {k1,k2}) and computes all parameters.
// Jumps are folded into [1, n/2] first; equal jumps raise jump_coincidence.
Classification classify(int n, int k1, int k2);

std::string describe(const Classification& c);

// One connected component as an explicit labeled graph.
struct ComponentGraph {
    std::vector<int> vertices;  // sorted labels
    std::vector<Edge> edges;    // canonical order
};

// Connected components of C(Z_n, S) via union-find.
int component_count(const CirculantSpec& spec);
// The component containing `v`.
ComponentGraph component_of(const CirculantSpec& spec, int v);

// Vertex bijection onto an explicit target edge set; valid iff it maps the
// source edge set bijectively onto the target edge set.
struct IsoCertificate {
    std::map<int, int> theta;
    std::vector<Edge> target_edges;
    std::string target_desc;
};

// Certificate for the component of C(Z_n, {k1,k2}) containing vertex
// gcd(k1,k2,n).  Covers the single-jump, prism and half-jump families; the
// bundle family is validated through reconstruct_bundle_edges instead.
IsoCertificate component_certificate(int n, int k1, int k2);

bool verify_certificate(const ComponentGraph& source, const IsoCertificate& cert);

// The three-step rewiring of a connected C(Z_n,{k1,k2}) with
// 1 < d1 < d2 < n/2 and gcd(d1,d2) = 1 into base x fiber rows plus a shift:
//   rows[i] is a k1-cycle of length n/d1; row 0 starts at vertex 1 and row i
//   starts at (and contains) vertex 1 + i*k2; the shift solves
//   (k1/d1) x - (n/d1) y = k2 with 0 <= x <= n/d1 - 1.
struct BundleDecomposition {
    std::vector<std::vector<int>> rows;
    int shift = 0;
};

BundleDecomposition bundle_decompose(int n, int k1, int k2);

// Edge set of base-cycle rows glued by identity matchings, with the wrap
// matching twisted by `shift` fiber positions.  Equals the original edge
// set when the decomposition is sound.
std::vector<Edge> reconstruct_bundle_edges(const BundleDecomposition& bd, int n);

}  // namespace circulant
