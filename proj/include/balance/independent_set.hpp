#ifndef BALANCE_INDEPENDENT_SET_HPP
#define BALANCE_INDEPENDENT_SET_HPP

#include <bit>
#include <vector>

#include "balance/graph.hpp"
#include "balance/search.hpp"

namespace balance {

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    g.require_set(s);
    for (int v : s.to_vector())
        if (g.degree_into(v, s) > 0) return false;
    return true;
}

namespace detail {

// Branch-and-bound MIS over single-word bitmasks (n <= 64, which covers every
// exact-search size this library commits to). Branches on a maximum-degree
// candidate (ties to the smallest index), include before exclude, bounded by
// a greedy clique cover of the candidate set.
struct MisSearch64 {
    std::vector<word_t> adj; // one word per vertex
    long long node_limit;
    long long nodes = 0;
    bool out_of_budget = false;
    int target = -1; // stop once a set of this size is found (-1: maximize)
    word_t best = 0;
    int best_size = -1;

    MisSearch64(const Graph& g, long long limit) : node_limit(limit) {
        int n = g.vertex_count();
        adj.resize((std::size_t)n, 0);
        for (int v = 0; v < n; ++v) adj[(std::size_t)v] = g.row(v)[0];
    }

    int clique_cover_bound(word_t candidates) const {
        word_t cliques[64];
        int nq = 0;
        word_t rest = candidates;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool placed = false;
            for (int i = 0; i < nq; ++i) {
                if ((cliques[i] & ~adj[(std::size_t)v]) == 0) {
                    cliques[i] |= word_t(1) << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques[nq++] = word_t(1) << v;
        }
        return nq;
    }

    bool recurse(word_t chosen, int chosen_size, word_t candidates) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return true;
        }
        if (chosen_size > best_size) {
            best = chosen;
            best_size = chosen_size;
            if (target >= 0 && chosen_size >= target) return true;
        }
        if (!candidates) return false;
        int bound = chosen_size + clique_cover_bound(candidates);
        if (target >= 0 ? bound < target : bound <= best_size) return false;

        int pick = -1, pick_deg = -1;
        word_t rest = candidates;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj[(std::size_t)v] & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        word_t vbit = word_t(1) << pick;
        if (recurse(chosen | vbit, chosen_size + 1, candidates & ~vbit & ~adj[(std::size_t)pick])) return true;
        return recurse(chosen, chosen_size, candidates & ~vbit);
    }
};

// Fallback for n > 64; same branching rule over multi-word sets.
struct MisSearchWide {
    const Graph& g;
    long long node_limit;
    long long nodes = 0;
    bool out_of_budget = false;
    int target = -1;
    VertexSet best;
    int best_size = -1;

    MisSearchWide(const Graph& graph, long long limit)
        : g(graph), node_limit(limit), best(graph.vertex_count()) {}

    int clique_cover_bound(const VertexSet& candidates) const {
        std::vector<VertexSet> cliques;
        for (int v : candidates.to_vector()) {
            bool placed = false;
            for (VertexSet& q : cliques) {
                if (g.degree_into(v, q) == q.size()) {
                    q.add(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                VertexSet q(g.vertex_count());
                q.add(v);
                cliques.push_back(std::move(q));
            }
        }
        return (int)cliques.size();
    }

    bool recurse(const VertexSet& chosen, int chosen_size, const VertexSet& candidates) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return true;
        }
        if (chosen_size > best_size) {
            best = chosen;
            best_size = chosen_size;
            if (target >= 0 && chosen_size >= target) return true;
        }
        if (candidates.empty()) return false;
        int bound = chosen_size + clique_cover_bound(candidates);
        if (target >= 0 ? bound < target : bound <= best_size) return false;

        int pick = -1, pick_deg = -1;
        for (int v : candidates.to_vector()) {
            int d = g.degree_into(v, candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        VertexSet with = chosen;
        with.add(pick);
        VertexSet next = candidates;
        next.remove(pick);
        next.subtract(g.neighbors(pick));
        if (recurse(with, chosen_size + 1, next)) return true;
        VertexSet without_v = candidates;
        without_v.remove(pick);
        return recurse(chosen, chosen_size, without_v);
    }
};

inline SearchResult<VertexSet> run_mis(const Graph& g, int target, const SearchBudget& budget) {
    SearchResult<VertexSet> res;
    int n = g.vertex_count();
    bool out_of_budget;
    VertexSet best(n);
    int best_size;
    if (n <= 64) {
        MisSearch64 s(g, budget.node_limit);
        s.target = target;
        word_t full = n == 64 ? ~word_t(0) : (word_t(1) << n) - 1;
        s.recurse(0, 0, full);
        res.nodes = s.nodes;
        out_of_budget = s.out_of_budget;
        best_size = s.best_size;
        for (int v = 0; v < n; ++v)
            if ((s.best >> v) & 1) best.add(v);
    } else {
        MisSearchWide s(g, budget.node_limit);
        s.target = target;
        s.recurse(VertexSet(n), 0, VertexSet::full(n));
        res.nodes = s.nodes;
        out_of_budget = s.out_of_budget;
        best_size = s.best_size;
        best = s.best;
    }
    if (target >= 0 && best_size >= target) {
        res.status = SearchStatus::found;
        res.witness = best;
    } else if (out_of_budget) {
        res.status = SearchStatus::undecided;
    } else if (target < 0) {
        res.status = SearchStatus::found;
        res.witness = best;
    } else {
        res.status = SearchStatus::none;
    }
    return res;
}

} // namespace detail

// Exact maximum independent set by branch and bound.
inline SearchResult<VertexSet> max_independent_set(const Graph& g, const SearchBudget& budget = {}) {
    return detail::run_mis(g, -1, budget);
}

// Decision form: an independent set of size exactly k when alpha(g) >= k
// (larger finds are truncated to their k smallest vertices), `none` when the
// search exhaustively rules it out.
inline SearchResult<VertexSet> independent_set_at_least(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("independent_set_at_least: k out of range");
    if (k == 0) {
        SearchResult<VertexSet> res;
        res.status = SearchStatus::found;
        res.witness = VertexSet(g.vertex_count());
        return res;
    }
    SearchResult<VertexSet> res = detail::run_mis(g, k, budget);
    if (res.found() && res.witness->size() > k) {
        VertexSet trimmed(g.vertex_count());
        int left = k;
        for (int v : res.witness->to_vector()) {
            if (left-- == 0) break;
            trimmed.add(v);
        }
        res.witness = trimmed;
    }
    return res;
}

} // namespace balance

#endif
