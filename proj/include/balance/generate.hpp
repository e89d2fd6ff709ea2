#ifndef BALANCE_GENERATE_HPP
#define BALANCE_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "balance/graph.hpp"

namespace balance {

// Self-contained PRNG so that seeded generators produce the same graph on
// every platform (std distributions are implementation-defined).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }
};

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Circulant C_n(S): vertex i adjacent to i ± s (mod n) for each s in S.
inline Graph make_circulant(int n, const std::vector<int>& connections) {
    if (n < 2) throw std::invalid_argument("circulant: need n >= 2");
    Graph g(n);
    std::vector<char> used((std::size_t)(n / 2 + 1), 0);
    for (int s : connections) {
        if (s < 1 || s > n / 2) throw std::invalid_argument("circulant: connection out of range 1..n/2");
        if (used[(std::size_t)s]) throw std::invalid_argument("circulant: duplicate connection");
        used[(std::size_t)s] = 1;
        if (2 * s == n) {
            for (int i = 0; i < s; ++i) g.add_edge(i, i + s);
        } else {
            for (int i = 0; i < n; ++i) {
                int j = (i + s) % n;
                if (i < j)
                    g.add_edge(i, j);
                else
                    g.add_edge(j, i);
            }
        }
    }
    return g;
}

inline Graph make_hypercube(int d) {
    if (d < 0 || d > 13) throw std::invalid_argument("hypercube: need 0 <= d <= 13");
    int n = 1 << d;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b)
            if (!(i & (1 << b))) g.add_edge(i, i | (1 << b));
    return g;
}

inline Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

// Generalized Petersen graph GP(n, k): outer n-cycle, inner vertices n..2n-1
// joined as i ~ i+k (mod n), plus spokes. GP(8, 3) is the Moebius-Kantor graph.
inline Graph make_generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) throw std::invalid_argument("generalized_petersen: need n >= 3, 1 <= k < n/2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        int a = n + i, b = n + (i + k) % n;
        if (a < b)
            g.add_edge(a, b);
        else
            g.add_edge(b, a);
        g.add_edge(i, n + i);
    }
    return g;
}

// Pairing (configuration) model with rejection of loops and multi-edges;
// deterministic for a fixed seed. Uniform over simple realizations.
inline Graph make_random_regular(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("random_regular: need 0 <= k < n");
    if ((long long)n * k % 2 != 0) throw std::invalid_argument("random_regular: n*k must be even");
    if (k == 0) return Graph(n);

    constexpr int kRejectionCap = 10000;
    SplitMix64 rng(seed);
    std::vector<int> stubs((std::size_t)n * (std::size_t)k);
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c) stubs[(std::size_t)(v * k + c)] = v;
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = (std::size_t)rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) {
                ok = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_regular: rejection cap exceeded");
}

} // namespace balance

#endif
