#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cmchordal/chordal.hpp"
#include "oracles.hpp"

using namespace cmchordal;

TEST_CASE("mcs_order and perfect elimination") {
    Graph k3 = Graph::complete(3);
    CHECK(is_perfect_elimination(k3, mcs_order(k3))); // any order works on K_n
    CHECK(is_perfect_elimination(Graph::complete(4), {3, 1, 4, 2}));

    Graph p3 = Graph::path(3);
    CHECK(is_perfect_elimination(p3, {1, 3, 2}));

    Graph p4 = Graph::path(4);
    CHECK(is_perfect_elimination(p4, mcs_order(p4)));

    // C4 admits no perfect elimination order at all
    Graph c4 = Graph::cycle(4);
    std::vector<int> order = {1, 2, 3, 4};
    do {
        CHECK(!is_perfect_elimination(c4, order));
    } while (std::next_permutation(order.begin(), order.end()));

    CHECK_THROWS_AS(is_perfect_elimination(p3, {1, 2}), precondition_error);
    CHECK_THROWS_AS(is_perfect_elimination(p3, {1, 2, 2}), precondition_error);
    CHECK_THROWS_AS(is_perfect_elimination(p3, {1, 2, 4}), precondition_error);

    // determinism
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_chordal(9, 2, seed);
        CHECK(mcs_order(g) == mcs_order(g));
    }
}

TEST_CASE("is_chordal: examples") {
    CHECK(!is_chordal(Graph::cycle(4)));
    CHECK(!is_chordal(Graph::cycle(5)));
    CHECK(is_chordal(Graph::path(6)));
    CHECK(is_chordal(Graph::complete(5)));
    // C5 plus one chord leaves a chordless 4-cycle
    CHECK(!is_chordal(Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}})));
}

TEST_CASE("is_chordal equals the naive definition, n <= 6 exhaustive") {
    for (int n = 1; n <= 6; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            CHECK(is_chordal(g) == oracles::naive_is_chordal(g));
        }
}

TEST_CASE("is_chordal equals exhaustive elimination-order search, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            CHECK(is_chordal(g) == oracles::brute_has_perfect_elimination(g));
        }
}

TEST_CASE("maximal_cliques: examples") {
    CHECK(maximal_cliques(Graph::complete(3)).facets == std::vector<VertexSet>{{1, 2, 3}});
    CHECK(maximal_cliques(Graph::path(3)).facets == std::vector<VertexSet>{{1, 2}, {2, 3}});
    CHECK(maximal_cliques(Graph::cycle(4)).facets ==
          std::vector<VertexSet>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    // isolated vertices become singleton facets
    CHECK(maximal_cliques(Graph::edgeless(2)).facets == std::vector<VertexSet>{{1}, {2}});
}

TEST_CASE("maximal_cliques matches subset enumeration") {
    for (int n = 1; n <= 5; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            CHECK(maximal_cliques(g).facets == oracles::brute_maximal_cliques(g));
        }
    // larger random graphs hit the branch-and-bound path through complements
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = oracles::graph_from_mask(9, static_cast<long long>(seed * 2654435761ULL) &
                                                  (oracles::labeled_graph_count(9) - 1));
        CHECK(maximal_cliques(g).facets == oracles::brute_maximal_cliques(g));
    }
}

TEST_CASE("chordal graphs have at most n maximal cliques") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 2 + static_cast<int>(seed % 10);
        Graph g = random_chordal(n, 3, seed);
        CHECK(static_cast<int>(maximal_cliques(g).facets.size()) <= n);
    }
}

TEST_CASE("quasi_forest_leaf_order: examples") {
    auto p3_order = quasi_forest_leaf_order(maximal_cliques(Graph::path(3)));
    REQUIRE(p3_order.has_value());
    CHECK(p3_order->size() == 2);
    CHECK(oracles::is_valid_leaf_order(*p3_order));

    // the clique complex of C4 has no leaf at all
    CHECK(!quasi_forest_leaf_order(maximal_cliques(Graph::cycle(4))).has_value());

    // single facet is trivially a leaf order
    auto k3_order = quasi_forest_leaf_order(maximal_cliques(Graph::complete(3)));
    REQUIRE(k3_order.has_value());
    CHECK(k3_order->size() == 1);
}

TEST_CASE("leaf order exists iff chordal, n <= 6 exhaustive") {
    for (int n = 1; n <= 6; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            auto order = quasi_forest_leaf_order(maximal_cliques(g));
            CHECK(order.has_value() == is_chordal(g));
            if (order)
                CHECK(oracles::is_valid_leaf_order(*order));
        }
}

TEST_CASE("leaf order for random chordal graphs, with validation") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = random_chordal(2 + static_cast<int>(seed % 11), 3, seed);
        auto order = quasi_forest_leaf_order(maximal_cliques(g));
        REQUIRE(order.has_value());
        CHECK(oracles::is_valid_leaf_order(*order));
    }
}

TEST_CASE("free_vertex_facets: examples") {
    // P4: {1,2} free 1, {2,3} none, {3,4} free 4
    auto p4 = free_vertex_facets(maximal_cliques(Graph::path(4)));
    CHECK(p4.m == 2);
    CHECK(p4.free_per_facet == std::vector<VertexSet>{{1}, {}, {4}});
    CHECK(p4.free_facets == std::vector<VertexSet>{{1, 2}, {3, 4}});

    auto k3 = free_vertex_facets(maximal_cliques(Graph::complete(3)));
    CHECK(k3.m == 1);
    CHECK(k3.free_per_facet == std::vector<VertexSet>{{1, 2, 3}});

    auto star = free_vertex_facets(maximal_cliques(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})));
    CHECK(star.m == 3);
    CHECK(star.free_facets == std::vector<VertexSet>{{1, 2}, {1, 3}, {1, 4}});
    CHECK(star.free_per_facet == std::vector<VertexSet>{{2}, {3}, {4}});
}

TEST_CASE("free vertex iff closed neighborhood equals the facet, chordal n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            if (!is_chordal(g))
                continue;
            FacetList facets = maximal_cliques(g);
            FreeVertexReport rep = free_vertex_facets(facets);
            for (std::size_t i = 0; i < facets.facets.size(); ++i) {
                std::uint64_t facet_mask = to_mask(facets.facets[i]);
                for (int v : facets.facets[i]) {
                    std::uint64_t closed = g.neighbor_mask(v) | (std::uint64_t{1} << (v - 1));
                    bool simplicial_here = closed == facet_mask;
                    bool reported_free =
                        std::binary_search(rep.free_per_facet[i].begin(),
                                           rep.free_per_facet[i].end(), v);
                    CHECK(reported_free == simplicial_here);
                }
            }
        }
}
