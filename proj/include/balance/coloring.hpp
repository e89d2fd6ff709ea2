#ifndef BALANCE_COLORING_HPP
#define BALANCE_COLORING_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "balance/graph.hpp"
#include "balance/search.hpp"

namespace balance {

// Proper vertex coloring with contiguous color indices 0..count-1.
struct Coloring {
    std::vector<int> color;
    int count = 0;
};

// Proper edge coloring; entry i colors the i-th edge in lexicographic order.
struct EdgeColoring {
    std::vector<int> color;
    int count = 0;
};

inline bool coloring_is_proper(const Graph& g, const Coloring& c) {
    if ((int)c.color.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (c.color[(std::size_t)u] == c.color[(std::size_t)v]) return false;
    std::vector<char> used((std::size_t)std::max(c.count, 1), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int col = c.color[(std::size_t)v];
        if (col < 0 || col >= c.count) return false;
        used[(std::size_t)col] = 1;
    }
    for (int i = 0; i < c.count; ++i)
        if (!used[(std::size_t)i]) return false;
    return true;
}

inline bool edge_coloring_is_proper(const Graph& g, const EdgeColoring& c) {
    auto es = g.edges();
    if (c.color.size() != es.size()) return false;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (c.color[i] < 0 || c.color[i] >= std::max(c.count, 1)) return false;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [x, y] = es[j];
            bool share = a == x || a == y || b == x || b == y;
            if (share && c.color[i] == c.color[j]) return false;
        }
    }
    return true;
}

inline Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if ((int)order.size() != n) throw std::invalid_argument("greedy_coloring: order size mismatch");
    std::vector<char> seen((std::size_t)n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[(std::size_t)v]) throw std::invalid_argument("greedy_coloring: not a permutation");
        seen[(std::size_t)v] = 1;
    }
    Coloring c;
    c.color.assign((std::size_t)n, -1);
    std::vector<char> forbidden((std::size_t)n + 1, 0);
    for (int v : order) {
        for (int u : g.neighbor_list(v))
            if (c.color[(std::size_t)u] >= 0) forbidden[(std::size_t)c.color[(std::size_t)u]] = 1;
        int col = 0;
        while (forbidden[(std::size_t)col]) ++col;
        c.color[(std::size_t)v] = col;
        c.count = std::max(c.count, col + 1);
        for (int u : g.neighbor_list(v))
            if (c.color[(std::size_t)u] >= 0) forbidden[(std::size_t)c.color[(std::size_t)u]] = 0;
    }
    return c;
}

inline std::vector<int> natural_order(int n) {
    std::vector<int> o((std::size_t)n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

// Exact k-colorability by backtracking over vertices in index order.
// Symmetry breaking: a vertex may use color c only when colors 0..c-1
// already appear among earlier vertices.
inline SearchResult<Coloring> is_k_colorable(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 1) throw std::invalid_argument("is_k_colorable: need k >= 1");
    int n = g.vertex_count();
    SearchResult<Coloring> res;
    std::vector<int> color((std::size_t)n, -1);

    struct Frame {
        int vertex;
        int next_color;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    bool exhausted_budget = false;

    if (n == 0) {
        res.status = SearchStatus::found;
        res.witness = Coloring{{}, 0};
        return res;
    }

    while (!stack.empty()) {
        Frame& f = stack.back();
        int v = f.vertex;
        if (v == n) {
            Coloring c;
            c.color = color;
            c.count = 1 + *std::max_element(color.begin(), color.end());
            res.status = SearchStatus::found;
            res.witness = std::move(c);
            return res;
        }
        int max_used = -1;
        for (int u = 0; u < v; ++u) max_used = std::max(max_used, color[(std::size_t)u]);
        int limit = std::min(k - 1, max_used + 1);
        int chosen = -1;
        for (int col = f.next_color; col <= limit; ++col) {
            if (++res.nodes > budget.node_limit) {
                exhausted_budget = true;
                break;
            }
            bool ok = true;
            for (int u : g.neighbor_list(v)) {
                if (u < v && color[(std::size_t)u] == col) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = col;
                break;
            }
        }
        if (exhausted_budget) break;
        if (chosen < 0) {
            color[(std::size_t)v] = -1;
            stack.pop_back();
            if (!stack.empty()) {
                color[(std::size_t)stack.back().vertex] = -1;
                ++stack.back().next_color;
            }
        } else {
            color[(std::size_t)v] = chosen;
            f.next_color = chosen; // revisited on backtrack via the pop above
            stack.push_back({v + 1, 0});
        }
    }

    res.status = exhausted_budget ? SearchStatus::undecided : SearchStatus::none;
    return res;
}

namespace detail {

// True when the connected induced subgraph on `comp` is an odd cycle.
inline bool component_is_odd_cycle(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() % 2 == 0 || comp.size() < 3) return false;
    for (int v : comp)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool component_is_complete(const Graph& g, const std::vector<int>& comp) {
    for (int v : comp)
        if (g.degree(v) != (int)comp.size() - 1) return false;
    return true;
}

// Reverse-BFS greedy from `root` on the vertices of `sub` (a connected graph),
// with `pre` colors already fixed for vertices outside `sub` (used by the
// two-nonadjacent-neighbors case). Returns colors for all of sub's vertices.
inline void reverse_bfs_greedy(const Graph& g, const std::vector<int>& comp_vertices, int root,
                               std::vector<int>& color) {
    std::vector<char> in_comp((std::size_t)g.vertex_count(), 0);
    for (int v : comp_vertices) in_comp[(std::size_t)v] = 1;
    std::vector<int> order;
    order.reserve(comp_vertices.size());
    std::vector<char> seen((std::size_t)g.vertex_count(), 0);
    order.push_back(root);
    seen[(std::size_t)root] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        for (int u : g.neighbor_list(order[qi])) {
            if (in_comp[(std::size_t)u] && !seen[(std::size_t)u]) {
                seen[(std::size_t)u] = 1;
                order.push_back(u);
            }
        }
    }
    std::vector<char> forbidden((std::size_t)g.vertex_count() + 1, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int u : g.neighbor_list(v))
            if (color[(std::size_t)u] >= 0) forbidden[(std::size_t)color[(std::size_t)u]] = 1;
        int col = 0;
        while (forbidden[(std::size_t)col]) ++col;
        color[(std::size_t)v] = col;
        for (int u : g.neighbor_list(v))
            if (color[(std::size_t)u] >= 0) forbidden[(std::size_t)color[(std::size_t)u]] = 0;
    }
}

inline bool connected_within(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return true;
    std::vector<char> in((std::size_t)g.vertex_count(), 0);
    for (int v : verts) in[(std::size_t)v] = 1;
    std::vector<int> queue{verts[0]};
    std::vector<char> seen((std::size_t)g.vertex_count(), 0);
    seen[(std::size_t)verts[0]] = 1;
    std::size_t reached = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (int u : g.neighbor_list(queue[qi])) {
            if (in[(std::size_t)u] && !seen[(std::size_t)u]) {
                seen[(std::size_t)u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == verts.size();
}

inline int first_cut_vertex(const Graph& g, const std::vector<int>& comp) {
    for (int c : comp) {
        std::vector<int> rest;
        rest.reserve(comp.size() - 1);
        for (int v : comp)
            if (v != c) rest.push_back(v);
        if (!connected_within(g, rest)) return c;
    }
    return -1;
}

// Colors one connected component in place, using at most max(D, 1) colors
// unless the component is complete or an odd cycle (which take D + 1).
inline void brooks_color_component(const Graph& g, const std::vector<int>& comp, std::vector<int>& color);

inline void brooks_color_pieces_at(const Graph& g, const std::vector<int>& comp, int cut,
                                   std::vector<int>& color) {
    // Split the component at a cut vertex; each side plus the cut vertex is
    // connected and the cut vertex has degree < D there, so the reverse-BFS
    // case applies. Colorings are aligned by permuting each piece so the cut
    // vertex lands on color 0.
    std::vector<char> in_comp((std::size_t)g.vertex_count(), 0);
    for (int v : comp) in_comp[(std::size_t)v] = 1;
    std::vector<char> assigned((std::size_t)g.vertex_count(), 0);
    assigned[(std::size_t)cut] = 1;

    for (int s : comp) {
        if (s == cut || assigned[(std::size_t)s]) continue;
        // gather the piece: component of comp - cut containing s, plus cut
        std::vector<int> piece{s};
        std::vector<char> seen((std::size_t)g.vertex_count(), 0);
        seen[(std::size_t)s] = 1;
        for (std::size_t qi = 0; qi < piece.size(); ++qi) {
            for (int u : g.neighbor_list(piece[qi])) {
                if (u != cut && in_comp[(std::size_t)u] && !seen[(std::size_t)u]) {
                    seen[(std::size_t)u] = 1;
                    piece.push_back(u);
                }
            }
        }
        piece.push_back(cut);
        std::vector<int> piece_color((std::size_t)g.vertex_count(), -1);
        // the piece is connected and cut has degree < D inside it
        std::sort(piece.begin(), piece.end());
        auto sub = induced_subgraph(g, [&] {
            VertexSet s2(g.vertex_count());
            for (int v : piece) s2.add(v);
            return s2;
        }());
        std::vector<int> local((std::size_t)sub.graph.vertex_count(), -1);
        brooks_color_component(sub.graph, natural_order(sub.graph.vertex_count()), local);
        // permute so that cut gets color 0, then copy out
        int cut_local = -1;
        for (int i = 0; i < sub.graph.vertex_count(); ++i)
            if (sub.vertex_map[(std::size_t)i] == cut) cut_local = i;
        int c0 = local[(std::size_t)cut_local];
        for (int i = 0; i < sub.graph.vertex_count(); ++i) {
            int col = local[(std::size_t)i];
            if (col == c0)
                col = 0;
            else if (col == 0)
                col = c0;
            int orig = sub.vertex_map[(std::size_t)i];
            piece_color[(std::size_t)orig] = col;
        }
        for (int v : piece) {
            if (v == cut) continue;
            color[(std::size_t)v] = piece_color[(std::size_t)v];
            assigned[(std::size_t)v] = 1;
        }
    }
    color[(std::size_t)cut] = 0;
}

inline void brooks_color_component(const Graph& g, const std::vector<int>& comp, std::vector<int>& color) {
    int dmax = 0;
    for (int v : comp) dmax = std::max(dmax, g.degree(v));

    if (component_is_complete(g, comp)) {
        int c = 0;
        for (int v : comp) color[(std::size_t)v] = c++;
        return;
    }
    if (component_is_odd_cycle(g, comp)) {
        // walk the cycle, alternating 0/1 with a final 2
        int start = comp[0];
        std::vector<int> cyc{start};
        int prev = -1, cur = start;
        while ((int)cyc.size() < (int)comp.size()) {
            for (int u : g.neighbor_list(cur)) {
                if (u != prev) {
                    prev = cur;
                    cur = u;
                    cyc.push_back(u);
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < cyc.size(); ++i)
            color[(std::size_t)cyc[i]] = i + 1 == cyc.size() ? 2 : (int)(i % 2);
        return;
    }

    // non-complete, not an odd cycle: D colors suffice
    for (int v : comp) {
        if (g.degree(v) < dmax) {
            reverse_bfs_greedy(g, comp, v, color);
            return;
        }
    }
    // D-regular from here on
    int cut = first_cut_vertex(g, comp);
    if (cut >= 0) {
        brooks_color_pieces_at(g, comp, cut, color);
        return;
    }
    // 2-connected and D-regular, D >= 3: find x with nonadjacent neighbors
    // a, b whose removal keeps the component connected; color a, b alike and
    // finish greedily toward x.
    for (int x : comp) {
        auto nb = g.neighbor_list(x);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                if (g.has_edge(a, b)) continue;
                std::vector<int> rest;
                rest.reserve(comp.size() - 2);
                for (int v : comp)
                    if (v != a && v != b) rest.push_back(v);
                if (!connected_within(g, rest)) continue;
                color[(std::size_t)a] = 0;
                color[(std::size_t)b] = 0;
                reverse_bfs_greedy(g, rest, x, color);
                return;
            }
        }
    }
    // unreachable for valid inputs; caller verifies and falls back
}

} // namespace detail

// Constructive Brooks coloring: each connected component that is neither
// complete nor an odd cycle gets at most max(D, 1) colors, where D is that
// component's maximum degree; the exceptional components take D + 1. The
// construction is verified and falls back to exact search before failing.
inline Coloring brooks_coloring(const Graph& g, const SearchBudget& budget = {}) {
    int n = g.vertex_count();
    Coloring result;
    result.color.assign((std::size_t)n, -1);
    for (const VertexSet& comp_set : components(g)) {
        std::vector<int> comp = comp_set.to_vector();
        int dmax = 0;
        for (int v : comp) dmax = std::max(dmax, g.degree(v));
        bool exceptional = detail::component_is_complete(g, comp) || detail::component_is_odd_cycle(g, comp);
        int target = exceptional ? dmax + 1 : std::max(dmax, 1);

        std::vector<int> color((std::size_t)n, -1);
        detail::brooks_color_component(g, comp, color);

        bool ok = true;
        int used = 0;
        for (int v : comp) {
            int c = color[(std::size_t)v];
            if (c < 0 || c >= target) {
                ok = false;
                break;
            }
            used = std::max(used, c + 1);
            for (int u : g.neighbor_list(v))
                if (color[(std::size_t)u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) {
            auto sub = induced_subgraph(g, comp_set);
            auto exact = is_k_colorable(sub.graph, target, budget);
            if (!exact.found()) throw defect_error("brooks_coloring: construction failed");
            for (int i = 0; i < sub.graph.vertex_count(); ++i)
                color[(std::size_t)sub.vertex_map[(std::size_t)i]] = exact.witness->color[(std::size_t)i];
            used = exact.witness->count;
        }
        for (int v : comp) result.color[(std::size_t)v] = color[(std::size_t)v];
        result.count = std::max(result.count, used);
    }
    if (!coloring_is_proper(g, result)) throw defect_error("brooks_coloring: verification failed");
    return result;
}

// Color classes of a coloring, largest first (ties by lower color index);
// each class lists vertices in increasing order.
inline std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> classes((std::size_t)c.count);
    for (int v = 0; v < (int)c.color.size(); ++v) classes[(std::size_t)c.color[(std::size_t)v]].push_back(v);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return classes;
}

// Exact k-edge-colorability via vertex coloring of the line graph.
inline SearchResult<EdgeColoring> is_k_edge_colorable(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 1) throw std::invalid_argument("is_k_edge_colorable: need k >= 1");
    SearchResult<EdgeColoring> res;
    if (g.edge_count() == 0) {
        res.status = SearchStatus::found;
        res.witness = EdgeColoring{{}, 0};
        return res;
    }
    LineGraph lg = line_graph(g);
    auto inner = is_k_colorable(lg.graph, k, budget);
    res.status = inner.status;
    res.nodes = inner.nodes;
    if (inner.found()) res.witness = EdgeColoring{inner.witness->color, inner.witness->count};
    return res;
}

} // namespace balance

#endif
