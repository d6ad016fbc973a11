#pragma once

#include <array>

#include "circulant/graph.hpp"
#include "circulant/verify.hpp"

namespace circulant {

struct unsupported_instance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Page indices are fixed to one palette so emitted figures stay comparable
// across routes.
inline constexpr int kPageYellow = 0;
inline constexpr int kPagePurple = 1;
inline constexpr int kPageGreen = 2;
inline constexpr int kPageRed = 3;
inline constexpr int kPageBlue = 4;

inline constexpr std::array<const char*, 5> kPageColorNames = {"yellow", "purple", "green", "red",
                                                               "blue"};

// Builds a verified optimal matching book embedding of C(n,k) with
// pages = predicted_mbt(n,k).  The route tag names the construction that
// produced it (dispatch on n parity, k parity, gcd, remainder and the
// partition-set count), with "+fallback" appended when the written-out
// coloring had to be completed or replaced by search on the same layout.
BookEmbedding embed(int n, int k);

// The individual constructions behind the dispatcher.  Each checks its own
// precondition and returns a verified embedding.
BookEmbedding embed_even_k_odd(int n, int k);   // n even, k odd: Delta pages
BookEmbedding embed_even_k_even(int n, int k);  // n, k even: Delta+1 pages
BookEmbedding embed_odd_gcd(int n, int k);      // n odd, gcd(n,k) >= 3: 5 pages
BookEmbedding embed_odd_r1(int n, int k);       // n odd, coprime, n mod k = 1
BookEmbedding embed_odd_rk1(int n, int k);      // n odd, coprime, n mod k = k-1
BookEmbedding embed_odd_mid_r(int n, int k);    // n odd, coprime, 2 <= n mod k <= k-2

}  // namespace circulant
