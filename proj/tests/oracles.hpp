#pragma once

// Slow reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// Crossings induced by label positions u, v on an n-circle: the two labels cut the circle
// into arcs [u, v) and [v, u); count vertex pairs lying in a common arc.
inline i64 f(int n, int u, int v) {
    std::vector<int> arc(n + 1, 1);
    for (int w = u; w != v; w = w % n + 1) arc[w] = 0;
    i64 same = 0;
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) same += arc[s] == arc[t] ? 1 : 0;
    return same;
}

// Sum of f over all label pairs of a bipartite-circle drawing.
inline i64 mono(int n, const std::vector<int>& x) {
    i64 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += f(n, x[i], x[j]);
    return s;
}

// Minimum of mono over every label sequence in [n]^m.
inline i64 cr2_brute(int m, int n) {
    std::vector<int> x(m, 1);
    i64 best = std::numeric_limits<i64>::max();
    for (;;) {
        best = std::min(best, mono(n, x));
        int i = m - 1;
        while (i >= 0 && x[i] == n) x[i--] = 1;
        if (i < 0) break;
        ++x[i];
    }
    return best;
}

// 0, n or 2n by walking clockwise from a and recording the order in which b, c, d show up.
inline i64 residue_by_walk(int n, int a, int b, int c, int d) {
    std::vector<int> seen;
    for (int step = 1; step < n; ++step) {
        const int w = (a - 1 + step) % n + 1;
        if (w == b || w == c || w == d) seen.push_back(w);
    }
    if (seen == std::vector<int>{b, c, d}) return 0;
    if (seen == std::vector<int>{d, c, b}) return 2 * n;
    return n;
}

inline i64 choose(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
