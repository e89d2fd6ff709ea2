#ifndef BALANCE_CONSTRUCT_HPP
#define BALANCE_CONSTRUCT_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "balance/balance.hpp"
#include "balance/coloring.hpp"
#include "balance/graph.hpp"
#include "balance/independent_set.hpp"

namespace balance {

namespace detail {

inline VertexSet pull_back(const VertexSet& s, const std::vector<int>& vertex_map, int n_orig) {
    VertexSet out(n_orig);
    for (int i : s.to_vector()) out.add(vertex_map[(std::size_t)i]);
    return out;
}

// Independent set of a given size: largest Brooks color class first, exact
// search as a fallback (the fallback firing is unexpected and logged).
inline VertexSet independent_set_of_size(const Graph& g, int size, const char* who,
                                         const SearchBudget& budget = {}) {
    if (size == 0) return VertexSet(g.vertex_count());
    Coloring col = brooks_coloring(g, budget);
    auto classes = color_classes(col);
    if (!classes.empty() && (int)classes[0].size() >= size) {
        VertexSet s(g.vertex_count());
        for (int i = 0; i < size; ++i) s.add(classes[0][(std::size_t)i]);
        return s;
    }
    std::fprintf(stderr, "%s: Brooks class too small, falling back to exact search\n", who);
    auto exact = independent_set_at_least(g, size, budget);
    if (!exact.found()) throw defect_error(std::string(who) + ": no independent set of required size");
    return *exact.witness;
}

} // namespace detail

// Certificate for a cubic graph. Order 0 mod 4: an independent set of size
// n/4 (degree sum 3n/4 = m/2). Order 2 mod 4, n = 4k+2: fix the first edge
// xy, take an independent set I of size k-1 avoiding N[{x,y}], and use
// X = I ∪ {x,y}; then e(X, V\X) = 3(k-1)+4 = 3k+1 and W = V\X has
// e(W) = (6k+3)-1-(3k+1) = 3k+1 as well.
inline BalanceCertificate cubic_balance_certificate(const Graph& g, const SearchBudget& budget = {}) {
    RegularityInfo reg = regularity(g);
    if (!reg.regular || reg.k != 3) throw inapplicable_error("cubic_balance_certificate: graph is not cubic");
    int n = g.vertex_count();
    long long m = g.edge_count(); // 3n/2

    BalanceCertificate cert;
    if (n % 4 == 0) {
        VertexSet i_set = detail::independent_set_of_size(g, n / 4, "cubic_balance_certificate", budget);
        cert = BalanceCertificate::simply(std::move(i_set));
    } else {
        int k = (n - 2) / 4;
        auto first_edge = g.edges().front();
        int x = first_edge.first, y = first_edge.second;
        VertexSet closed_nbhd = g.neighbors(x) | g.neighbors(y);
        closed_nbhd.add(x);
        closed_nbhd.add(y);
        VertexSet rest = closed_nbhd.complement();
        if (rest.size() < 4 * (k - 1))
            throw defect_error("cubic_balance_certificate: residual graph too small");
        auto sub = induced_subgraph(g, rest);
        VertexSet i_local = detail::independent_set_of_size(sub.graph, k - 1, "cubic_balance_certificate", budget);
        VertexSet x_set = detail::pull_back(i_local, sub.vertex_map, n);
        x_set.add(x);
        x_set.add(y);
        BalanceCounts counts = balance_counts(g, x_set);
        if (counts.internal != 1 || counts.cut != 3LL * k + 1 || counts.external_complement != 3LL * k + 1)
            throw defect_error("cubic_balance_certificate: count assertion failed (internal " +
                               std::to_string(counts.internal) + ", cut " + std::to_string(counts.cut) + ")");
        cert = BalanceCertificate::two_part(x_set.complement(), x_set);
    }
    VerifyResult check = verify_certificate(g, cert);
    if (!check) throw defect_error("cubic_balance_certificate: verification failed: " + check.diagnostic);
    (void)m;
    return cert;
}

// Combine certificates of g and h into one for their disjoint union
// (h's vertices offset by |V(g)|). Requires |E(h)| even, so h's essentially-
// half counts are exactly |E(h)|/2 and the combined counts stay essentially
// half of |E(g)| + |E(h)|.
inline BalanceCertificate join_certificates(const Graph& g, const BalanceCertificate& cg, const Graph& h,
                                            const BalanceCertificate& ch) {
    if (h.edge_count() % 2 != 0)
        throw inapplicable_error("join_certificates: |E(h)| must be even");
    VerifyResult vg = verify_certificate(g, cg);
    if (!vg) throw std::invalid_argument("join_certificates: certificate for g does not verify: " + vg.diagnostic);
    VerifyResult vh = verify_certificate(h, ch);
    if (!vh) throw std::invalid_argument("join_certificates: certificate for h does not verify: " + vh.diagnostic);

    auto as_two_part = [](const Graph& graph, const BalanceCertificate& c) {
        if (c.kind == BalanceCertificate::Kind::two_part) return std::pair<VertexSet, VertexSet>{c.W, c.X};
        (void)graph;
        return std::pair<VertexSet, VertexSet>{c.I.complement(), c.I};
    };
    auto [wg, xg] = as_two_part(g, cg);
    auto [wh, xh] = as_two_part(h, ch);

    int ng = g.vertex_count(), total = ng + h.vertex_count();
    VertexSet w_union(total), x_union(total);
    for (int v : wg.to_vector()) w_union.add(v);
    for (int v : xg.to_vector()) x_union.add(v);
    for (int v : wh.to_vector()) w_union.add(ng + v);
    for (int v : xh.to_vector()) x_union.add(ng + v);

    BalanceCertificate cert = BalanceCertificate::two_part(std::move(w_union), std::move(x_union));
    Graph u = disjoint_union({g, h});
    VerifyResult check = verify_certificate(u, cert);
    if (!check) throw defect_error("join_certificates: combined certificate failed: " + check.diagnostic);
    return cert;
}

// Structure of a 4-regular graph's components: the K5 components (the only
// complete 4-regular graphs) and the order residues mod 4 of the rest.
struct ComponentProfile {
    std::vector<VertexSet> complete_k5_components;
    std::vector<VertexSet> other_components;
    VertexSet k5_vertices; // union of the K5 components
    int a = 0;             // |complete_k5_components|
    int a0 = 0, a1 = 0, a2 = 0, a3 = 0;
};

inline ComponentProfile component_profile(const Graph& g) {
    RegularityInfo reg = regularity(g);
    if (!reg.regular || reg.k != 4) throw inapplicable_error("component_profile: graph is not 4-regular");
    ComponentProfile p;
    p.k5_vertices = VertexSet(g.vertex_count());
    for (VertexSet& comp : components(g)) {
        int size = comp.size();
        long long edges_inside = 0;
        for (int v : comp.to_vector()) edges_inside += g.degree_into(v, comp);
        edges_inside /= 2;
        if (size == 5 && edges_inside == 10) {
            p.k5_vertices |= comp;
            p.complete_k5_components.push_back(std::move(comp));
            ++p.a;
        } else {
            switch (size % 4) {
            case 0: ++p.a0; break;
            case 1: ++p.a1; break;
            case 2: ++p.a2; break;
            default: ++p.a3; break;
            }
            p.other_components.push_back(std::move(comp));
        }
    }
    return p;
}

namespace detail {

// First (in component order, preferring subsets that avoid the last
// component) nonempty proper subset of components whose total order is
// divisible by 4. Any such subset S has a complement with the same property,
// so searching subsets that avoid the last component loses nothing.
inline std::optional<std::vector<int>> component_split(const std::vector<VertexSet>& comps) {
    int c = (int)comps.size();
    if (c < 2) return std::nullopt;
    std::optional<std::vector<int>> by_residue[4];
    for (int i = 0; i + 1 < c; ++i) {
        int r = comps[(std::size_t)i].size() % 4;
        std::optional<std::vector<int>> snapshot[4];
        for (int j = 0; j < 4; ++j) snapshot[j] = by_residue[j];
        for (int j = 0; j < 4; ++j) {
            if (!snapshot[j]) continue;
            int nr = (j + r) % 4;
            if (!by_residue[nr]) {
                by_residue[nr] = *snapshot[j];
                by_residue[nr]->push_back(i);
            }
        }
        if (!by_residue[r]) by_residue[r] = std::vector<int>{i};
    }
    return by_residue[0];
}

} // namespace detail

// Certificate for a 4-regular graph of order divisible by 4, by structural
// recursion on the components:
//   1. if some nonempty proper subset of components has total order 0 mod 4,
//      certify both induced parts and join them;
//   2. the disjoint union of four K5s gets the explicit two-part certificate
//      built from two half-certificates (W = one K5, X = one vertex of it
//      plus two vertices of the other);
//   3. a connected graph gets an independent set of size n/4 via Brooks;
//   4. any other terminal gets an independent set assembled per component:
//      one vertex from each K5, and from each non-complete component of
//      order 4k+r either k or k+1 Brooks-derived vertices, balanced so the
//      total is exactly n/4.
inline BalanceCertificate four_regular_certificate(const Graph& g, const SearchBudget& budget = {}) {
    RegularityInfo reg = regularity(g);
    if (!reg.regular || reg.k != 4) throw inapplicable_error("four_regular_certificate: graph is not 4-regular");
    int n = g.vertex_count();
    if (n % 4 != 0) throw inapplicable_error("four_regular_certificate: order must be divisible by 4");

    std::vector<VertexSet> comps = components(g);

    if (auto split = detail::component_split(comps)) {
        VertexSet side(n);
        for (int idx : *split) side |= comps[(std::size_t)idx];
        VertexSet other = side.complement();
        auto part_a = induced_subgraph(g, side);
        auto part_b = induced_subgraph(g, other);
        BalanceCertificate cert_a = four_regular_certificate(part_a.graph, budget);
        BalanceCertificate cert_b = four_regular_certificate(part_b.graph, budget);
        BalanceCertificate joined = join_certificates(part_a.graph, cert_a, part_b.graph, cert_b);
        // pull the union-coordinate certificate back to g's labels
        std::vector<int> union_map = part_a.vertex_map;
        union_map.insert(union_map.end(), part_b.vertex_map.begin(), part_b.vertex_map.end());
        BalanceCertificate cert = BalanceCertificate::two_part(detail::pull_back(joined.W, union_map, n),
                                                               detail::pull_back(joined.X, union_map, n));
        VerifyResult check = verify_certificate(g, cert);
        if (!check) throw defect_error("four_regular_certificate: split certificate failed: " + check.diagnostic);
        return cert;
    }

    BalanceCertificate cert;
    if (comps.size() == 1) {
        VertexSet i_set = detail::independent_set_of_size(g, n / 4, "four_regular_certificate", budget);
        cert = BalanceCertificate::simply(std::move(i_set));
    } else {
        ComponentProfile profile = component_profile(g);
        if (profile.a0 != 0)
            throw defect_error("four_regular_certificate: unsplit terminal with a component of order 0 mod 4");
        if (profile.a == 4 && profile.other_components.empty()) {
            // two half-certificates over pairs of K5s, joined
            auto half = [&](const VertexSet& ka, const VertexSet& kb) {
                VertexSet both = ka | kb;
                auto sub = induced_subgraph(g, both);
                VertexSet w(sub.graph.vertex_count()), x(sub.graph.vertex_count());
                std::vector<int> in_b;
                for (int i = 0; i < sub.graph.vertex_count(); ++i) {
                    if (ka.contains(sub.vertex_map[(std::size_t)i]))
                        w.add(i);
                    else
                        in_b.push_back(i);
                }
                x.add(w.min_element());
                x.add(in_b[0]);
                x.add(in_b[1]);
                return std::pair<InducedSubgraph, BalanceCertificate>{std::move(sub),
                                                                      BalanceCertificate::two_part(w, x)};
            };
            auto [sub1, half1] = half(profile.complete_k5_components[0], profile.complete_k5_components[1]);
            auto [sub2, half2] = half(profile.complete_k5_components[2], profile.complete_k5_components[3]);
            BalanceCertificate joined = join_certificates(sub1.graph, half1, sub2.graph, half2);
            std::vector<int> union_map = sub1.vertex_map;
            union_map.insert(union_map.end(), sub2.vertex_map.begin(), sub2.vertex_map.end());
            cert = BalanceCertificate::two_part(detail::pull_back(joined.W, union_map, n),
                                                detail::pull_back(joined.X, union_map, n));
        } else {
            // per-component assembly
            int residue_sum = profile.a;
            for (const VertexSet& comp : profile.other_components) residue_sum += comp.size() % 4;
            if (residue_sum % 4 != 0)
                throw defect_error("four_regular_certificate: residue sum not divisible by 4");
            int keep_ceil = residue_sum / 4; // components contributing k_C + 1
            int decrements = (int)profile.other_components.size() - keep_ceil;
            if (decrements < 0)
                throw defect_error("four_regular_certificate: infeasible contribution split");

            VertexSet i_set(n);
            for (const VertexSet& k5 : profile.complete_k5_components) i_set.add(k5.min_element());
            int done = 0;
            for (const VertexSet& comp : profile.other_components) {
                int size = comp.size();
                int take = size / 4 + (done < decrements ? 0 : 1);
                ++done;
                auto sub = induced_subgraph(g, comp);
                VertexSet local = detail::independent_set_of_size(sub.graph, take, "four_regular_certificate", budget);
                i_set |= detail::pull_back(local, sub.vertex_map, n);
            }
            if (i_set.size() != n / 4)
                throw defect_error("four_regular_certificate: assembled set has wrong size");
            cert = BalanceCertificate::simply(std::move(i_set));
        }
    }
    VerifyResult check = verify_certificate(g, cert);
    if (!check) throw defect_error("four_regular_certificate: verification failed: " + check.diagnostic);
    return cert;
}

} // namespace balance

#endif
