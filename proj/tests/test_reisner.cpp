#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmchordal/classify.hpp"
#include "cmchordal/covers.hpp"
#include "cmchordal/reisner.hpp"
#include "oracles.hpp"

using namespace cmchordal;

namespace {
const std::vector<FieldSpec> kAllFields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                           FieldSpec::prime(3)};
}

TEST_CASE("independence complex: examples") {
    SimplicialComplex c4 = independence_complex(Graph::cycle(4));
    CHECK(c4.facets == std::vector<VertexSet>{{1, 3}, {2, 4}});

    SimplicialComplex k3 = independence_complex(Graph::complete(3));
    CHECK(k3.facets == std::vector<VertexSet>{{1}, {2}, {3}});

    SimplicialComplex k2 = independence_complex(Graph::path(2));
    CHECK(k2.facets == std::vector<VertexSet>{{1}, {2}});

    CHECK_THROWS_AS(independence_complex(Graph(0)), precondition_error);
}

TEST_CASE("reisner criterion: known verdicts") {
    for (FieldSpec k : kAllFields) {
        CAPTURE(k.name());
        // two disjoint edges: connected in degree 0 fails
        CHECK(!reisner_is_cm(independence_complex(Graph::cycle(4)), k));
        // zero-dimensional complexes are always CM
        CHECK(reisner_is_cm(independence_complex(Graph::complete(3)), k));
        CHECK(reisner_is_cm(independence_complex(Graph::path(4)), k));
        CHECK(!reisner_is_cm(independence_complex(Graph::path(3)), k));
    }
    CHECK_THROWS_AS(reisner_is_cm(SimplicialComplex{}, FieldSpec::prime(2)), precondition_error);
}

TEST_CASE("chordality-necessity control: C4 is unmixed but not CM") {
    Graph c4 = Graph::cycle(4);
    CHECK(is_unmixed(c4));
    for (FieldSpec k : kAllFields)
        CHECK(!reisner_is_cm_serial(independence_complex(c4), k));
}

TEST_CASE("serial and parallel kernels agree") {
    std::vector<SimplicialComplex> batch;
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        batch.push_back(independence_complex(random_chordal(3 + seed % 7, 2, seed)));
    for (long long mask = 0; mask < oracles::labeled_graph_count(4); ++mask) {
        Graph g = oracles::graph_from_mask(4, mask);
        if (g.vertex_count() > 0)
            batch.push_back(independence_complex(g));
    }
    batch.push_back(make_complex(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                     {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}));
    for (const auto& c : batch)
        for (FieldSpec k : kAllFields)
            CHECK(reisner_is_cm(c, k) == reisner_is_cm_serial(c, k));
}

TEST_CASE("a CM verdict always comes with a pure complex") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_chordal(2 + seed % 8, 2, seed);
        SimplicialComplex c = independence_complex(g);
        if (reisner_is_cm(c, FieldSpec::prime(2)))
            for (const auto& f : c.facets)
                CHECK(f.size() == c.facets.front().size());
    }
}

TEST_CASE("oracle matches the combinatorial criterion on small chordal graphs") {
    for (int n = 2; n <= 5; ++n)
        for (long long mask = 0; mask < oracles::labeled_graph_count(n); ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            if (g.has_isolated_vertex() || !is_chordal(g))
                continue;
            bool combinatorial = cm_partition(g).has_value();
            for (FieldSpec k : kAllFields)
                CHECK(reisner_is_cm(independence_complex(g), k) == combinatorial);
        }
}
