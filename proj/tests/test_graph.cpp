#include <doctest.h>

#include "balance/generate.hpp"
#include "balance/graph.hpp"
#include "corpus.hpp"

using namespace balance;

TEST_CASE("graph basics and invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 9), std::invalid_argument);
}

TEST_CASE("handshake over the corpus") {
    for (const auto& [name, g] : corpus::full_corpus()) {
        INFO(name);
        long long deg_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2LL * g.edge_count());
    }
}

TEST_CASE("vertex sets") {
    VertexSet s = VertexSet::of(70, {0, 63, 64, 69});
    CHECK(s.size() == 4);
    CHECK(s.contains(64));
    CHECK(!s.contains(1));
    CHECK(s.min_element() == 0);
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 69});
    CHECK(s.complement().size() == 66);
    VertexSet t(70);
    t.add(63);
    CHECK((s & t).to_vector() == std::vector<int>{63});
    CHECK((s | t) == s);
    CHECK_THROWS_AS(s.add(70), std::invalid_argument);
}

TEST_CASE("components ordered by smallest member") {
    Graph g = disjoint_union({make_cycle(3), make_cycle(3)});
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 3);
    CHECK(comps[0].min_element() == 0);
    CHECK(comps[1].min_element() == 3);

    auto one = components(make_petersen());
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 10);

    auto two = components(disjoint_union({make_complete(5), make_cycle(7)}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].size() == 5);
    CHECK(two[1].size() == 7);
}

TEST_CASE("components partition the vertex set") {
    for (const auto& [name, g] : corpus::assorted_corpus()) {
        INFO(name);
        auto comps = components(g);
        VertexSet seen(g.vertex_count());
        int total = 0;
        for (const auto& comp : comps) {
            for (int v : comp.to_vector()) {
                CHECK(!seen.contains(v));
                seen.add(v);
            }
            total += comp.size();
            CHECK(is_connected(induced_subgraph(g, comp).graph));
        }
        CHECK(total == g.vertex_count());
    }
}

TEST_CASE("induced subgraphs") {
    Graph k4 = make_complete(4);
    auto sub = induced_subgraph(k4, VertexSet::of(4, {0, 1, 2}));
    CHECK(sub.graph == make_complete(3));
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2});

    auto pair = induced_subgraph(make_cycle(5), VertexSet::of(5, {0, 2}));
    CHECK(pair.graph.vertex_count() == 2);
    CHECK(pair.graph.edge_count() == 0);

    // deleting a closed neighborhood of an edge from Petersen leaves 4 vertices
    Graph pet = make_petersen();
    VertexSet nbhd = pet.neighbors(0) | pet.neighbors(1);
    nbhd.add(0);
    nbhd.add(1);
    CHECK(nbhd.size() == 6);
    auto rest = induced_subgraph(pet, nbhd.complement());
    CHECK(rest.graph.vertex_count() == 4);
}

TEST_CASE("disjoint union") {
    Graph two_triangles = disjoint_union({make_cycle(3), make_cycle(3)});
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);

    Graph k5 = make_complete(5);
    Graph four_k5 = disjoint_union({k5, k5, k5, k5});
    CHECK(four_k5.vertex_count() == 20);
    CHECK(four_k5.edge_count() == 40);

    CHECK(disjoint_union({make_complete(1)}) == make_complete(1));
    CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);
}

TEST_CASE("line graphs") {
    // cycles are their own line graphs (a connected 2-regular graph on 5
    // vertices is exactly C5, up to labels)
    Graph lc5 = line_graph(make_cycle(5)).graph;
    CHECK(lc5.vertex_count() == 5);
    CHECK(regularity(lc5).k == 2);
    CHECK(is_connected(lc5));
    // the star K_{1,3} collapses to a triangle
    CHECK(line_graph(make_complete_bipartite(1, 3)).graph == make_complete(3));

    auto lg = line_graph(make_circulant(6, {1, 2}));
    auto reg = regularity(lg.graph);
    CHECK(reg.regular);
    CHECK(reg.k == 6);
    CHECK(lg.edge_of_vertex.size() == 12);

    // line graph of a k-regular graph is (2k-2)-regular
    for (const auto& [name, g] : corpus::four_regular_corpus()) {
        if (g.vertex_count() > 12) continue;
        INFO(name);
        auto r = regularity(line_graph(g).graph);
        CHECK(r.regular);
        CHECK(r.k == 6);
    }
    for (const auto& [name, g] : corpus::cubic_corpus()) {
        if (g.vertex_count() > 10) continue;
        INFO(name);
        auto r = regularity(line_graph(g).graph);
        CHECK(r.regular);
        CHECK(r.k == 4);
    }
}

TEST_CASE("cartesian products") {
    Graph square = cartesian_product(make_complete(2), make_complete(2));
    CHECK(square.vertex_count() == 4);
    CHECK(regularity(square).k == 2);
    CHECK(is_connected(square)); // connected 2-regular on 4 vertices: C4

    Graph prism = cartesian_product(make_cycle(3), make_complete(2));
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(regularity(prism).k == 3);

    for (const auto& [name, g] : corpus::assorted_corpus()) {
        if (g.vertex_count() > 8) continue;
        INFO(name);
        Graph p = cartesian_product(g, make_cycle(3));
        CHECK(p.vertex_count() == g.vertex_count() * 3);
        CHECK(p.edge_count() == g.vertex_count() * 3 + 3 * g.edge_count());
    }
}

TEST_CASE("regularity") {
    auto pet = regularity(make_petersen());
    CHECK(pet.regular);
    CHECK(pet.k == 3);
    CHECK(!regularity(make_complete_bipartite(1, 3)).regular);
    auto k5 = regularity(make_complete(5));
    CHECK(k5.regular);
    CHECK(k5.k == 4);
    CHECK_THROWS_AS(regularity(Graph(0)), inapplicable_error);
}

TEST_CASE("generators") {
    CHECK(make_cycle(6).edge_count() == 6);
    CHECK(regularity(make_cycle(6)).k == 2);
    CHECK(make_hypercube(3).edge_count() == 12);
    CHECK(regularity(make_hypercube(4)).k == 4);
    CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
    CHECK(make_circulant(8, {1, 4}).edge_count() == 12); // 4 is n/2: half-step class
    CHECK(regularity(make_circulant(8, {1, 4})).k == 3);
    CHECK(make_generalized_petersen(5, 2) == make_petersen());
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(8, {5}), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(8, {1, 1}), std::invalid_argument);
}

TEST_CASE("random regular graphs") {
    Graph g = make_random_regular(10, 3, 1);
    auto reg = regularity(g);
    CHECK(reg.regular);
    CHECK(reg.k == 3);
    // same seed, same graph; different seed, (almost surely) different graph
    CHECK(make_random_regular(10, 3, 1) == g);
    CHECK(make_random_regular(10, 3, 7) == make_random_regular(10, 3, 7));

    CHECK_THROWS_AS(make_random_regular(5, 3, 1), std::invalid_argument); // odd n*k
    CHECK_THROWS_AS(make_random_regular(4, 4, 1), std::invalid_argument); // k >= n

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph r = make_random_regular(12, 4, seed);
        auto info = regularity(r);
        CHECK(info.regular);
        CHECK(info.k == 4);
    }
}
