#ifndef BALANCE_GRAPH_HPP
#define BALANCE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace balance {

// Errors are split by how the CLI maps them to exit codes: bad input text,
// an operation asked of a graph it does not apply to, and internal
// construction assertions that must never fire on valid inputs.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct inapplicable_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct defect_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using word_t = std::uint64_t;

inline int popcount_words(const word_t* w, int nwords) {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

// Subset of the vertices of a graph on a fixed number of vertices,
// stored as a bitmask over 64-bit words.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative size");
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }

    int universe_size() const { return n_; }

    void add(int v) {
        check(v);
        bits_[v >> 6] |= word_t(1) << (v & 63);
    }
    void remove(int v) {
        check(v);
        bits_[v >> 6] &= ~(word_t(1) << (v & 63));
    }
    bool contains(int v) const {
        if (v < 0 || v >= n_) return false;
        return (bits_[v >> 6] >> (v & 63)) & 1;
    }
    int size() const { return popcount_words(bits_.data(), (int)bits_.size()); }
    bool empty() const {
        for (word_t w : bits_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }
    VertexSet complement() const {
        VertexSet r(n_);
        for (int v = 0; v < n_; ++v)
            if (!contains(v)) r.add(v);
        return r;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    // Members in increasing order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve((std::size_t)size());
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            word_t w = bits_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back((int)(i * 64 + (std::size_t)b));
                w &= w - 1;
            }
        }
        return out;
    }
    int min_element() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return (int)(i * 64) + std::countr_zero(bits_[i]);
        return -1;
    }

    const std::vector<word_t>& words() const { return bits_; }
    std::vector<word_t>& words() { return bits_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("VertexSet: vertex out of range");
    }
    void require_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    int n_;
    std::vector<word_t> bits_;
};

// Simple undirected graph on vertices 0..n-1 with one adjacency bitmask row
// per vertex. Built once by parsers/generators/constructions and treated as
// immutable afterwards; all algorithms below are pure functions over it.
class Graph {
public:
    Graph() : n_(0), m_(0), row_words_(0) {}
    explicit Graph(int n)
        : n_(n), m_(0), row_words_((n + 63) / 64), adj_((std::size_t)n * (std::size_t)((n + 63) / 64), 0), deg_(n, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int row_word_count() const { return row_words_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: loop rejected");
        if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge rejected");
        row(u)[v >> 6] |= word_t(1) << (v & 63);
        row(v)[u >> 6] |= word_t(1) << (u & 63);
        ++deg_[u];
        ++deg_[v];
        ++m_;
    }

    int degree(int v) const {
        check(v);
        return deg_[v];
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
        return d;
    }

    const word_t* row(int v) const { return adj_.data() + (std::size_t)v * (std::size_t)row_words_; }

    // Neighbors of v as a VertexSet.
    VertexSet neighbors(int v) const {
        check(v);
        VertexSet s(n_);
        const word_t* r = row(v);
        for (int i = 0; i < row_words_; ++i) s.words()[(std::size_t)i] = r[i];
        return s;
    }

    std::vector<int> neighbor_list(int v) const { return neighbors(v).to_vector(); }

    // Edges in lexicographic order as (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve((std::size_t)m_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbor_list(u))
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    // |neighbors(v) ∩ s|
    int degree_into(int v, const VertexSet& s) const {
        check(v);
        require_set(s);
        const word_t* r = row(v);
        int c = 0;
        for (int i = 0; i < row_words_; ++i) c += std::popcount(r[i] & s.words()[(std::size_t)i]);
        return c;
    }

    void require_set(const VertexSet& s) const {
        if (s.universe_size() != n_) throw std::invalid_argument("VertexSet does not belong to this graph");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    word_t* row(int v) { return adj_.data() + (std::size_t)v * (std::size_t)row_words_; }
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_;
    int m_;
    int row_words_;
    std::vector<word_t> adj_;
    std::vector<int> deg_;
};

struct RegularityInfo {
    bool regular = false;
    int k = 0; // common degree, valid only when regular
};

inline RegularityInfo regularity(const Graph& g) {
    if (g.vertex_count() == 0) throw inapplicable_error("regularity: empty graph");
    RegularityInfo info;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return info;
    info.regular = true;
    info.k = k;
    return info;
}

// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<char> seen((std::size_t)n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[(std::size_t)s]) continue;
        VertexSet comp(n);
        queue.clear();
        queue.push_back(s);
        seen[(std::size_t)s] = 1;
        comp.add(s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.neighbor_list(u)) {
                if (!seen[(std::size_t)v]) {
                    seen[(std::size_t)v] = 1;
                    comp.add(v);
                    queue.push_back(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return components(g).size() == 1;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // new index -> original index, increasing
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    g.require_set(s);
    InducedSubgraph out;
    out.vertex_map = s.to_vector();
    int k = (int)out.vertex_map.size();
    std::vector<int> back((std::size_t)g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) back[(std::size_t)out.vertex_map[(std::size_t)i]] = i;
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int v : g.neighbor_list(out.vertex_map[(std::size_t)i]))
            if (back[(std::size_t)v] > i) out.graph.add_edge(i, back[(std::size_t)v]);
    return out;
}

inline Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) throw std::invalid_argument("disjoint_union: empty list");
    int n = 0;
    for (const Graph& g : gs) n += g.vertex_count();
    Graph u(n);
    int off = 0;
    for (const Graph& g : gs) {
        for (auto [a, b] : g.edges()) u.add_edge(off + a, off + b);
        off += g.vertex_count();
    }
    return u;
}

struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex; // line-graph vertex -> edge of the base graph
};

// Vertices of the line graph are the edges of g in lexicographic order;
// two are adjacent iff the edges share an endpoint.
inline LineGraph line_graph(const Graph& g) {
    LineGraph lg;
    lg.edge_of_vertex = g.edges();
    int m = (int)lg.edge_of_vertex.size();
    lg.graph = Graph(m);
    for (int i = 0; i < m; ++i) {
        auto [a, b] = lg.edge_of_vertex[(std::size_t)i];
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = lg.edge_of_vertex[(std::size_t)j];
            if (a == c || a == d || b == c || b == d) lg.graph.add_edge(i, j);
        }
    }
    return lg;
}

// Vertex (i, j) of g □ h gets index i*|V(h)| + j.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph p(ng * nh);
    for (int i = 0; i < ng; ++i)
        for (auto [u, v] : h.edges()) p.add_edge(i * nh + u, i * nh + v);
    for (auto [x, y] : g.edges())
        for (int j = 0; j < nh; ++j) p.add_edge(x * nh + j, y * nh + j);
    return p;
}

inline bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return (long long)g.edge_count() * 2 == (long long)n * (n - 1);
}

} // namespace balance

#endif
