#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace circulant {

// Integer machinery behind the classification and layout constructions:
// gcd, linear Diophantine solving with a canonical solution range, the
// position map for arithmetic progressions mod b, and the remainder
// reduction that drives the vertex-partition schemes.
//
// All arithmetic is on 64-bit signed integers; callers keep n <= 10^6 so
// intermediate products fit comfortably.

struct no_solution : std::domain_error {
    using std::domain_error::domain_error;
};
struct invalid_range : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct not_coprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int64_t gcd_positive(int64_t a, int64_t b);

// Canonical solution of a*x + b*y = c (signs as posed by the caller).
struct DioSolution {
    int64_t x0 = 0;
    int64_t y0 = 0;
};

// Solves a*x + b*y = c and returns the solution with 0 <= x0 <= |b|-1.
// Unique when gcd(a,b) = 1; throws no_solution when gcd(a,b) does not
// divide c.
DioSolution solve_diophantine(int64_t a, int64_t b, int64_t c);

// 1-based position of the element 1+c in the ordered set
// {1, 1+a, 1+2a, ..., 1+(b-1)a} reduced mod b.  Equals 1 + x0 where
// a*x0 - b*y0 = c.  Requires gcd(a,b) = 1 and 0 <= c <= b-1.
int64_t position_in_progression(int64_t a, int64_t b, int64_t c);

// One division step of the remainder reduction: k_{i-1} = a_i*k_i + r_i
// with k_i = k_{i-1} - r_{i-1}.
struct ReductionStep {
    int64_t a = 0;
    int64_t k = 0;
    int64_t r = 0;
};

// Full reduction record for coprime (n, k):
//   n = a*k + r, then steps i = 1..m+1 with k_0 = k, r_0 = r,
//   k_i = k_{i-1} - r_{i-1}, k_{i-1} = a_i*k_i + r_i,
// stopping at the first index m+1 with r_{m+1} = 0 (then k_{m+1} = 1).
// s is the least index s < m with k_s >= 3 and r_s = 1, when one exists.
// t is the partition-set count:
//   r = 1 or r = k-1  ->  t = k
//   s exists          ->  t = k_s + 1
//   otherwise         ->  t = k_m
struct ReductionTrace {
    int64_t n = 0;
    int64_t k = 0;
    int64_t a = 0;
    int64_t r = 0;
    std::vector<ReductionStep> steps;  // steps[i-1] holds (a_i, k_i, r_i)
    int64_t m = 0;
    std::optional<int64_t> s;
    int64_t t = 0;

    // k_i with k_0 = k.
    int64_t k_at(int64_t i) const { return i == 0 ? k : steps.at(static_cast<size_t>(i - 1)).k; }
    // r_i with r_0 = r.
    int64_t r_at(int64_t i) const { return i == 0 ? r : steps.at(static_cast<size_t>(i - 1)).r; }
};

// Runs the reduction for n > k >= 2 with gcd(n,k) = 1; throws not_coprime
// otherwise.
ReductionTrace reduction_trace(int64_t n, int64_t k);

}  // namespace circulant
