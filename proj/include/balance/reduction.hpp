#ifndef BALANCE_REDUCTION_HPP
#define BALANCE_REDUCTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "balance/balance.hpp"
#include "balance/characterize.hpp"
#include "balance/generate.hpp"
#include "balance/coloring.hpp"
#include "balance/graph.hpp"
#include "balance/independent_set.hpp"

namespace balance {

// Hardness instance G' = L(g) □ K4 for a 4-regular g: 9-regular on 4m
// vertices, with vertex (edge e, copy c) at index 4e + c. G' is simply
// balanceable iff g is 4-edge-colorable.
struct HardnessInstance {
    Graph graph;
    std::vector<std::pair<int, int>> edges; // edge list of the source graph, fiber order
    static constexpr int copies = 4;

    int vertex_of(int edge_index, int copy) const { return edge_index * copies + copy; }
};

inline HardnessInstance hardness_instance(const Graph& g) {
    RegularityInfo reg = regularity(g);
    if (!reg.regular || reg.k != 4) throw inapplicable_error("hardness_instance: graph is not 4-regular");
    HardnessInstance inst;
    LineGraph lg = line_graph(g);
    inst.edges = lg.edge_of_vertex;
    inst.graph = cartesian_product(lg.graph, make_complete(4));
    int m = g.edge_count();
    if (inst.graph.vertex_count() != 4 * m) throw defect_error("hardness_instance: vertex count mismatch");
    RegularityInfo prod_reg = regularity(inst.graph);
    if (!prod_reg.regular || prod_reg.k != 9) throw defect_error("hardness_instance: product is not 9-regular");
    return inst;
}

namespace detail {

// Exact MIS over a graph whose vertices are partitioned into consecutive
// cliques ("fibers") of equal width: pick at most one vertex per fiber,
// bounded by the number of fibers left.
struct FiberMis {
    const Graph& g;
    int fibers, copies, nwords;
    long long node_limit, nodes = 0;
    bool out_of_budget = false;
    int best = 0;

    FiberMis(const Graph& graph, int nfibers, int width, long long limit)
        : g(graph), fibers(nfibers), copies(width), nwords(graph.row_word_count()), node_limit(limit) {}

    void recurse(int f, int chosen, const std::vector<word_t>& allowed) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return;
        }
        if (chosen > best) best = chosen;
        if (f == fibers || out_of_budget) return;
        if (chosen + (fibers - f) <= best) return;
        std::vector<word_t> next((std::size_t)nwords);
        for (int c = 0; c < copies; ++c) {
            int v = f * copies + c;
            if (!((allowed[(std::size_t)(v >> 6)] >> (v & 63)) & 1)) continue;
            const word_t* row = g.row(v);
            for (int w = 0; w < nwords; ++w) next[(std::size_t)w] = allowed[(std::size_t)w] & ~row[w];
            recurse(f + 1, chosen + 1, next);
            if (out_of_budget) return;
        }
        recurse(f + 1, chosen, allowed);
    }
};

} // namespace detail

// alpha of a hardness instance, branching fiber by fiber.
inline SearchResult<int> fiber_alpha(const HardnessInstance& inst, const SearchBudget& budget = {}) {
    int fibers = (int)inst.edges.size();
    detail::FiberMis search(inst.graph, fibers, HardnessInstance::copies, budget.node_limit);
    std::vector<word_t> all((std::size_t)inst.graph.row_word_count(), 0);
    for (int v = 0; v < inst.graph.vertex_count(); ++v) all[(std::size_t)(v >> 6)] |= word_t(1) << (v & 63);
    search.recurse(0, 0, all);
    SearchResult<int> res;
    res.nodes = search.nodes;
    if (search.out_of_budget) {
        res.status = SearchStatus::undecided;
        return res;
    }
    res.status = SearchStatus::found;
    res.witness = search.best;
    return res;
}

// Both sides of the p-colorability criterion, computed independently:
// is_k_colorable(h, p) against alpha(h □ Kp) = |V(h)|.
struct PColorabilityCheck {
    std::optional<bool> colorable;
    std::optional<int> alpha_product;
    std::optional<bool> agrees;
};

inline PColorabilityCheck p_colorable_iff_alpha(const Graph& h, int p, const SearchBudget& budget = {}) {
    PColorabilityCheck out;
    auto col = is_k_colorable(h, p, budget);
    if (col.status != SearchStatus::undecided) out.colorable = col.found();
    auto mis = max_independent_set(cartesian_product(h, make_complete(p)), budget);
    if (mis.found()) out.alpha_product = mis.witness->size();
    if (out.colorable && out.alpha_product)
        out.agrees = (*out.colorable == (*out.alpha_product == h.vertex_count()));
    return out;
}

// End-to-end check of the reduction's equivalence chain on one instance:
// g is 4-edge-colorable iff alpha(G') = m iff G' is simply balanceable.
struct ReductionReport {
    int m = 0;
    int n_prime = 0;
    std::optional<bool> edge_colorable_4;
    std::optional<int> alpha_prime;
    Verdict simply_balanceable_prime;
    std::optional<bool> equivalence_ok;

    bool complete() const {
        return edge_colorable_4.has_value() && alpha_prime.has_value() &&
               simply_balanceable_prime.status != VerdictStatus::undecided;
    }
};

inline ReductionReport reduction_equivalence_check(const Graph& g, const SearchBudget& budget = {}) {
    ReductionReport report;
    HardnessInstance inst = hardness_instance(g);
    report.m = g.edge_count();
    report.n_prime = inst.graph.vertex_count();

    auto edge_col = is_k_edge_colorable(g, 4, budget);
    if (edge_col.status != SearchStatus::undecided) report.edge_colorable_4 = edge_col.found();

    auto alpha = fiber_alpha(inst, budget);
    if (alpha.found()) report.alpha_prime = *alpha.witness;

    report.simply_balanceable_prime = regular_simply_balanceable(inst.graph, budget);

    if (report.complete()) {
        bool via_alpha = *report.alpha_prime == report.m;
        bool via_sb = report.simply_balanceable_prime.holds();
        report.equivalence_ok = (*report.edge_colorable_4 == via_alpha) && (via_alpha == via_sb);
    }
    return report;
}

} // namespace balance

#endif
