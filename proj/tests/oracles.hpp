#ifndef BALANCE_TESTS_ORACLES_HPP
#define BALANCE_TESTS_ORACLES_HPP

// Independent reference implementations used to derive expected test values.
// These deliberately share no code path with the library: plain subset masks,
// direct recursion, bit strings.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "balance/graph.hpp"

namespace oracle {

// Reference graph6 encoder (n <= 62): writes the upper-triangle bit string
// column by column, pads to a multiple of 6, then packs 6-bit groups.
inline std::string graph6_reference(const balance::Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || n > 62) throw std::invalid_argument("graph6_reference: supports 1 <= n <= 62");
    std::string bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, (char)(n + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] == '1');
        out.push_back((char)(value + 63));
    }
    return out;
}

inline std::vector<std::uint32_t> adjacency_masks32(const balance::Graph& g) {
    int n = g.vertex_count();
    if (n > 31) throw std::invalid_argument("oracle: graph too large for 32-bit masks");
    std::vector<std::uint32_t> adj((std::size_t)n, 0);
    for (auto [u, v] : g.edges()) {
        adj[(std::size_t)u] |= 1u << v;
        adj[(std::size_t)v] |= 1u << u;
    }
    return adj;
}

inline bool mask_independent(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    for (int v = 0; (1u << v) <= mask; ++v)
        if ((mask >> v) & 1)
            if (adj[(std::size_t)v] & mask) return false;
    return true;
}

// Exhaustive independence number over all subsets (n <= ~24).
inline int alpha_brute(const balance::Graph& g) {
    auto adj = adjacency_masks32(g);
    int n = g.vertex_count(), best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!mask_independent(adj, mask)) continue;
        int size = __builtin_popcount(mask);
        if (size > best) best = size;
    }
    return best;
}

// Exhaustive simple-balanceability: some independent set whose degree sum
// lands on floor(m/2) or ceil(m/2).
inline bool simply_balanceable_brute(const balance::Graph& g) {
    auto adj = adjacency_masks32(g);
    int n = g.vertex_count();
    long long m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!mask_independent(adj, mask)) continue;
        long long sum = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) sum += g.degree(v);
        if (sum == m / 2 || sum == (m + 1) / 2) return true;
    }
    return false;
}

// Exhaustive balanceability via the two-set characterization, recomputing
// e(W) and the cut from scratch for every subset.
inline bool balanceable_brute(const balance::Graph& g) {
    auto adj = adjacency_masks32(g);
    int n = g.vertex_count();
    long long m = g.edge_count();
    bool internal_ok = false, external_ok = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long long inside = 0, cut = 0;
        for (int v = 0; v < n; ++v) {
            if (!((mask >> v) & 1)) continue;
            inside += __builtin_popcount(adj[(std::size_t)v] & mask);
            cut += __builtin_popcount(adj[(std::size_t)v] & ~mask);
        }
        inside /= 2;
        if (inside == m / 2 || inside == (m + 1) / 2) internal_ok = true;
        if (cut == m / 2 || cut == (m + 1) / 2) external_ok = true;
        if (internal_ok && external_ok) return true;
    }
    return false;
}

// Direct edge-coloring backtracking (no line graph involved), m <= ~16.
inline bool edge_colorable_direct(const balance::Graph& g, int k) {
    auto es = g.edges();
    int m = (int)es.size();
    std::vector<int> color((std::size_t)m, -1);
    auto share = [&](int i, int j) {
        auto [a, b] = es[(std::size_t)i];
        auto [c, d] = es[(std::size_t)j];
        return a == c || a == d || b == c || b == d;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (color[(std::size_t)j] == c && share(i, j)) ok = false;
            if (!ok) continue;
            color[(std::size_t)i] = c;
            if (self(self, i + 1)) return true;
            color[(std::size_t)i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace oracle

#endif
