#include "circulant/numth.hpp"

#include <numeric>

namespace circulant {

int64_t gcd_positive(int64_t a, int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gcd_positive: arguments must be >= 1");
    return std::gcd(a, b);
}

namespace {

// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a,b), a,b >= 0.
struct XgcdResult {
    int64_t g, x, y;
};

XgcdResult xgcd(int64_t a, int64_t b) {
    int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    return {a, x0, y0};
}

int64_t floor_mod(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

DioSolution solve_diophantine(int64_t a, int64_t b, int64_t c) {
    if (a == 0 || b == 0) throw std::invalid_argument("solve_diophantine: zero coefficient");
    const int64_t aa = a < 0 ? -a : a;
    const int64_t bb = b < 0 ? -b : b;
    const auto [g, xa, yb] = xgcd(aa, bb);
    if (c % g != 0) throw no_solution("solve_diophantine: gcd(a,b) does not divide c");

    // Particular solution of a*x + b*y = c, then shift x into [0, |b|-1].
    // The solution family is x = x* + t*(b/g), so stepping by |b|/g keeps
    // the equation satisfied; when gcd = 1 the canonical x is unique.
    int64_t x = xa * (a < 0 ? -1 : 1) * (c / g);
    const int64_t step = bb / g;
    x = floor_mod(x, step);
    if (x > bb - 1) throw no_solution("solve_diophantine: no solution with 0 <= x <= |b|-1");
    const int64_t y = (c - a * x) / b;
    return {x, y};
}

int64_t position_in_progression(int64_t a, int64_t b, int64_t c) {
    if (b < 1) throw std::invalid_argument("position_in_progression: b must be >= 1");
    if (c < 0 || c > b - 1) throw invalid_range("position_in_progression: c outside [0, b-1]");
    if (std::gcd(a, b) != 1) throw not_coprime("position_in_progression: gcd(a,b) != 1");
    // a*x - b*y = c  <=>  a*x = c (mod b)
    const DioSolution s = solve_diophantine(a, -b, c);
    return 1 + s.x0;
}

ReductionTrace reduction_trace(int64_t n, int64_t k) {
    if (!(n > k && k >= 2)) throw std::invalid_argument("reduction_trace: need n > k >= 2");
    if (std::gcd(n, k) != 1) throw not_coprime("reduction_trace: gcd(n,k) != 1");

    ReductionTrace tr;
    tr.n = n;
    tr.k = k;
    tr.a = n / k;
    tr.r = n % k;

    int64_t kp = k, rp = tr.r;  // k_{i-1}, r_{i-1}
    while (rp != 0) {
        const int64_t ki = kp - rp;
        const int64_t ai = kp / ki;
        const int64_t ri = kp % ki;
        tr.steps.push_back({ai, ki, ri});
        kp = ki;
        rp = ri;
    }
    tr.m = static_cast<int64_t>(tr.steps.size()) - 1;

    for (int64_t i = 1; i < tr.m; ++i) {
        if (tr.k_at(i) >= 3 && tr.r_at(i) == 1) {
            tr.s = i;
            break;
        }
    }

    if (tr.r == 1 || tr.r == k - 1)
        tr.t = k;
    else if (tr.s)
        tr.t = tr.k_at(*tr.s) + 1;
    else
        tr.t = tr.k_at(tr.m);
    return tr;
}

}  // namespace circulant
