#ifndef BALANCE_BALANCE_HPP
#define BALANCE_BALANCE_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balance/graph.hpp"
#include "balance/search.hpp"

namespace balance {

inline constexpr int kDefaultOracleCap = 28;
// single-word subset masks bound the exhaustive scans regardless of cap
inline constexpr int kOracleHardLimit = 62;

// l is essentially half of k when l is floor(k/2) or ceil(k/2).
inline bool essentially_half(long long l, long long k) {
    if (k < 0) throw std::invalid_argument("essentially_half: k must be nonnegative");
    return l == k / 2 || l == (k + 1) / 2;
}

struct BalanceCounts {
    long long internal = 0;            // e(X)
    long long cut = 0;                 // e(X, V \ X)
    long long external_complement = 0; // e(V \ X)
};

inline BalanceCounts balance_counts(const Graph& g, const VertexSet& x) {
    g.require_set(x);
    BalanceCounts c;
    long long deg_sum = 0;
    for (int v : x.to_vector()) {
        c.internal += g.degree_into(v, x);
        deg_sum += g.degree(v);
    }
    c.internal /= 2;
    c.cut = deg_sum - 2 * c.internal;
    c.external_complement = g.edge_count() - c.internal - c.cut;
    return c;
}

// Machine-checkable witness of balanceability: either an externally balanced
// independent set I, or an internally balanced set W paired with a partition
// side X whose cut is essentially half of the edges.
struct BalanceCertificate {
    enum class Kind { simply_balanced, two_part };
    Kind kind = Kind::simply_balanced;
    VertexSet I;
    VertexSet W;
    VertexSet X;

    static BalanceCertificate simply(VertexSet i) {
        BalanceCertificate c;
        c.kind = Kind::simply_balanced;
        c.I = std::move(i);
        return c;
    }
    static BalanceCertificate two_part(VertexSet w, VertexSet x) {
        BalanceCertificate c;
        c.kind = Kind::two_part;
        c.W = std::move(w);
        c.X = std::move(x);
        return c;
    }
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_certificate(const Graph& g, const BalanceCertificate& cert) {
    auto check_bound = [&](const VertexSet& s, const char* name) {
        if (s.universe_size() != g.vertex_count())
            throw parse_error(std::string("certificate: set ") + name + " does not match the graph");
    };
    long long m = g.edge_count();
    if (cert.kind == BalanceCertificate::Kind::simply_balanced) {
        check_bound(cert.I, "I");
        long long deg_sum = 0;
        for (int v : cert.I.to_vector()) {
            if (g.degree_into(v, cert.I) > 0)
                return {false, "I is not independent (vertex " + std::to_string(v) + " has a neighbor in I)"};
            deg_sum += g.degree(v);
        }
        if (!essentially_half(deg_sum, m))
            return {false, "degree sum of I is " + std::to_string(deg_sum) + ", not essentially half of " + std::to_string(m)};
        return {true, ""};
    }
    check_bound(cert.W, "W");
    check_bound(cert.X, "X");
    long long ew = balance_counts(g, cert.W).internal;
    if (!essentially_half(ew, m))
        return {false, "e(W) = " + std::to_string(ew) + ", not essentially half of " + std::to_string(m)};
    long long cut = balance_counts(g, cert.X).cut;
    if (!essentially_half(cut, m))
        return {false, "e(X, V\\X) = " + std::to_string(cut) + ", not essentially half of " + std::to_string(m)};
    return {true, ""};
}

enum class VerdictStatus { holds, fails, undecided };
enum class Refutation { exhaustive_search, parity_condition, independence_bound };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    default: return "undecided";
    }
}
inline const char* to_string(Refutation r) {
    switch (r) {
    case Refutation::exhaustive_search: return "exhaustive-search";
    case Refutation::parity_condition: return "parity-condition";
    default: return "independence-bound";
    }
}

struct Verdict {
    VerdictStatus status = VerdictStatus::undecided;
    std::optional<BalanceCertificate> certificate;
    std::optional<Refutation> refutation;
    std::string method;

    bool holds() const { return status == VerdictStatus::holds; }
    bool fails() const { return status == VerdictStatus::fails; }

    static Verdict make_holds(BalanceCertificate cert, std::string method_name) {
        Verdict v;
        v.status = VerdictStatus::holds;
        v.certificate = std::move(cert);
        v.method = std::move(method_name);
        return v;
    }
    static Verdict make_fails(Refutation why, std::string method_name) {
        Verdict v;
        v.status = VerdictStatus::fails;
        v.refutation = why;
        v.method = std::move(method_name);
        return v;
    }
    static Verdict make_undecided(std::string method_name) {
        Verdict v;
        v.status = VerdictStatus::undecided;
        v.method = std::move(method_name);
        return v;
    }
};

namespace detail {

inline VertexSet set_from_mask(int n, word_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.add(v);
    return s;
}

inline std::vector<word_t> adjacency_words(const Graph& g) {
    std::vector<word_t> adj((std::size_t)g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[(std::size_t)v] = g.row(v)[0];
    return adj;
}

} // namespace detail

// Exhaustive scan for a set W with e(W) essentially half of m. Subsets are
// visited in Gray-code order so each step toggles one vertex and the edge
// count updates in O(1) words; the first witness in that order is returned.
inline SearchResult<VertexSet> find_internally_balanced_set(const Graph& g, int cap = kDefaultOracleCap) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    SearchResult<VertexSet> res;
    if (n > cap || n > kOracleHardLimit) {
        res.status = SearchStatus::undecided;
        return res;
    }
    if (essentially_half(0, m)) {
        res.status = SearchStatus::found;
        res.witness = VertexSet(n);
        return res;
    }
    auto adj = detail::adjacency_words(g);
    long long lo = m / 2, hi = (m + 1) / 2;
    word_t cur = 0;
    long long internal = 0;
    const word_t total = word_t(1) << n;
    for (word_t idx = 1; idx < total; ++idx) {
        int v = std::countr_zero(idx);
        word_t vbit = word_t(1) << v;
        if (cur & vbit) {
            cur ^= vbit;
            internal -= std::popcount(adj[(std::size_t)v] & cur);
        } else {
            internal += std::popcount(adj[(std::size_t)v] & cur);
            cur ^= vbit;
        }
        res.nodes++;
        if (internal >= lo && internal <= hi) {
            res.status = SearchStatus::found;
            res.witness = detail::set_from_mask(n, cur);
            return res;
        }
    }
    res.status = SearchStatus::none;
    return res;
}

// Exhaustive scan for a partition side X with e(X, V\X) essentially half of m.
// X and its complement give the same cut, so only subsets avoiding the last
// vertex are visited.
inline SearchResult<VertexSet> find_externally_balanced_partition(const Graph& g, int cap = kDefaultOracleCap) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    SearchResult<VertexSet> res;
    if (n > cap || n > kOracleHardLimit) {
        res.status = SearchStatus::undecided;
        return res;
    }
    if (essentially_half(0, m)) {
        res.status = SearchStatus::found;
        res.witness = VertexSet(n);
        return res;
    }
    auto adj = detail::adjacency_words(g);
    long long lo = m / 2, hi = (m + 1) / 2;
    word_t cur = 0;
    long long cut = 0;
    const word_t total = n >= 1 ? word_t(1) << (n - 1) : 1;
    for (word_t idx = 1; idx < total; ++idx) {
        int v = std::countr_zero(idx);
        word_t vbit = word_t(1) << v;
        if (cur & vbit) {
            cur ^= vbit;
            cut -= g.degree(v) - 2 * std::popcount(adj[(std::size_t)v] & cur);
        } else {
            cut += g.degree(v) - 2 * std::popcount(adj[(std::size_t)v] & cur);
            cur ^= vbit;
        }
        res.nodes++;
        if (cut >= lo && cut <= hi) {
            res.status = SearchStatus::found;
            res.witness = detail::set_from_mask(n, cur);
            return res;
        }
    }
    res.status = SearchStatus::none;
    return res;
}

// Exhaustive balanceability decision on small graphs via the two-set
// characterization: holds iff both an internally balanced set and an
// externally balanced partition exist.
inline Verdict decide_balanceable_oracle(const Graph& g, int cap = kDefaultOracleCap) {
    auto internal = find_internally_balanced_set(g, cap);
    if (internal.status == SearchStatus::undecided) return Verdict::make_undecided("oracle-exhaustive");
    if (internal.status == SearchStatus::none)
        return Verdict::make_fails(Refutation::exhaustive_search, "oracle-exhaustive");
    auto external = find_externally_balanced_partition(g, cap);
    if (external.status == SearchStatus::undecided) return Verdict::make_undecided("oracle-exhaustive");
    if (external.status == SearchStatus::none)
        return Verdict::make_fails(Refutation::exhaustive_search, "oracle-exhaustive");
    return Verdict::make_holds(BalanceCertificate::two_part(*internal.witness, *external.witness),
                               "oracle-exhaustive");
}

namespace detail {

// Depth-first enumeration of independent sets in lexicographic order of
// their sorted member lists, pruned by the reachable degree-sum window.
struct SimplyBalancedScan {
    int n;
    long long lo, hi;
    std::vector<word_t> adj;
    std::vector<int> deg;
    std::vector<long long> suffix_deg; // max degree sum available from vertex v on
    word_t witness = 0;

    bool dfs(int start, word_t chosen, long long sum) {
        if (sum >= lo && sum <= hi) {
            witness = chosen;
            return true;
        }
        if (start >= n || sum + suffix_deg[(std::size_t)start] < lo) return false;
        for (int v = start; v < n; ++v) {
            if (adj[(std::size_t)v] & chosen) continue;
            if (sum + deg[(std::size_t)v] > hi) continue;
            if (dfs(v + 1, chosen | (word_t(1) << v), sum + deg[(std::size_t)v])) return true;
        }
        return false;
    }
};

} // namespace detail

// Exhaustive simple-balanceability decision: searches for an independent set
// whose degree sum is essentially half of m.
inline Verdict decide_simply_balanceable_oracle(const Graph& g, int cap = kDefaultOracleCap) {
    int n = g.vertex_count();
    if (n > cap || n > kOracleHardLimit) return Verdict::make_undecided("oracle-independent-scan");
    detail::SimplyBalancedScan scan;
    scan.n = n;
    long long m = g.edge_count();
    scan.lo = m / 2;
    scan.hi = (m + 1) / 2;
    scan.adj = detail::adjacency_words(g);
    scan.deg.resize((std::size_t)n);
    for (int v = 0; v < n; ++v) scan.deg[(std::size_t)v] = g.degree(v);
    scan.suffix_deg.assign((std::size_t)n + 1, 0);
    for (int v = n - 1; v >= 0; --v)
        scan.suffix_deg[(std::size_t)v] = scan.suffix_deg[(std::size_t)v + 1] + scan.deg[(std::size_t)v];
    if (scan.dfs(0, 0, 0))
        return Verdict::make_holds(BalanceCertificate::simply(detail::set_from_mask(n, scan.witness)),
                                   "oracle-independent-scan");
    return Verdict::make_fails(Refutation::exhaustive_search, "oracle-independent-scan");
}

} // namespace balance

#endif
