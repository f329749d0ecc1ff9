#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmchordal/homology.hpp"
#include "oracles.hpp"

using namespace cmchordal;

namespace {

const std::vector<FieldSpec> kAllFields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                           FieldSpec::prime(3)};

// real projective plane, minimal 6-vertex triangulation: homology differs
// between characteristic 2 and everything else
SimplicialComplex rp2() {
    return make_complex(6, {{1, 2, 3},
                            {1, 2, 4},
                            {1, 3, 5},
                            {1, 4, 6},
                            {1, 5, 6},
                            {2, 3, 6},
                            {2, 4, 5},
                            {2, 5, 6},
                            {3, 4, 5},
                            {3, 4, 6}});
}

SimplicialComplex random_complex(std::mt19937_64& rng) {
    int n = 3 + static_cast<int>(rng() % 5);
    int gens = 1 + static_cast<int>(rng() % 5);
    std::vector<VertexSet> faces;
    for (int i = 0; i < gens; ++i) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (mask == 0)
            mask = 1;
        faces.push_back(from_mask(mask));
    }
    return make_complex(n, faces);
}

} // namespace

TEST_CASE("field spec") {
    CHECK(FieldSpec::rationals().name() == "q");
    CHECK(FieldSpec::prime(2).name() == "f2");
    CHECK(FieldSpec::prime(3).name() == "f3");
    CHECK_THROWS_AS(FieldSpec::prime(5), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime(4), precondition_error);
}

TEST_CASE("rank kernels on known matrices") {
    std::vector<std::vector<int>> m1 = {{2}};
    CHECK(matrix_rank_rational(m1) == 1);
    CHECK(matrix_rank_mod_p(m1, 2) == 0); // 2 vanishes mod 2
    CHECK(matrix_rank_mod_p(m1, 3) == 1);

    std::vector<std::vector<int>> m2 = {{1, 1}, {1, 1}};
    CHECK(matrix_rank_rational(m2) == 1);
    CHECK(matrix_rank_mod_p(m2, 2) == 1);

    std::vector<std::vector<int>> m3 = {{3, 0}, {0, 3}};
    CHECK(matrix_rank_rational(m3) == 2);
    CHECK(matrix_rank_mod_p(m3, 3) == 0);
    CHECK(matrix_rank_mod_p(m3, 2) == 2);

    std::vector<std::vector<int>> zero = {{0, 0}, {0, 0}};
    CHECK(matrix_rank_rational(zero) == 0);
    CHECK(matrix_rank_mod_p(zero, 2) == 0);
}

TEST_CASE("rank kernels against minor enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 5;
        std::size_t cols = 1 + rng() % 5;
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
        for (auto& row : m)
            for (auto& x : row)
                x = static_cast<int>(rng() % 7) - 3;
        CHECK(matrix_rank_rational(m) == oracles::brute_rank(m));
        // mod-p rank can only drop
        CHECK(matrix_rank_mod_p(m, 2) <= matrix_rank_rational(m));
        CHECK(matrix_rank_mod_p(m, 3) <= matrix_rank_rational(m));
    }
}

TEST_CASE("reduced betti numbers of the standard examples") {
    for (FieldSpec k : kAllFields) {
        CAPTURE(k.name());

        BettiProfile two_points = reduced_betti(make_complex(2, {{1}, {2}}), k);
        CHECK(two_points.dim == 0);
        CHECK(two_points.betti(-1) == 0);
        CHECK(two_points.betti(0) == 1);

        BettiProfile hollow = reduced_betti(make_complex(3, {{1, 2}, {2, 3}, {1, 3}}), k);
        CHECK(hollow.dim == 1);
        CHECK(hollow.betti(-1) == 0);
        CHECK(hollow.betti(0) == 0);
        CHECK(hollow.betti(1) == 1);

        BettiProfile simplex = reduced_betti(make_complex(3, {{1, 2, 3}}), k);
        for (int i = -1; i <= simplex.dim; ++i)
            CHECK(simplex.betti(i) == 0);

        BettiProfile empty = reduced_betti(make_complex(0, {{}}), k);
        CHECK(empty.dim == -1);
        CHECK(empty.betti(-1) == 1);

        // two disjoint edges (the independence complex of the 4-cycle)
        BettiProfile pair = reduced_betti(make_complex(4, {{1, 3}, {2, 4}}), k);
        CHECK(pair.betti(-1) == 0);
        CHECK(pair.betti(0) == 1);
        CHECK(pair.betti(1) == 0);
    }

    CHECK_THROWS_AS(reduced_betti(SimplicialComplex{}, FieldSpec::rationals()), precondition_error);
}

TEST_CASE("projective plane: homology depends on the field") {
    SimplicialComplex c = rp2();
    REQUIRE(c.dim() == 2);
    REQUIRE(face_count(c) == 1 + 6 + 15 + 10);

    BettiProfile q = reduced_betti(c, FieldSpec::rationals());
    CHECK(q.betti(0) == 0);
    CHECK(q.betti(1) == 0);
    CHECK(q.betti(2) == 0);

    BettiProfile f2 = reduced_betti(c, FieldSpec::prime(2));
    CHECK(f2.betti(0) == 0);
    CHECK(f2.betti(1) == 1);
    CHECK(f2.betti(2) == 1);

    BettiProfile f3 = reduced_betti(c, FieldSpec::prime(3));
    CHECK(f3.betti(1) == 0);
    CHECK(f3.betti(2) == 0);
}

TEST_CASE("link: examples") {
    SimplicialComplex hollow = make_complex(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(link(hollow, {}) == hollow);
    CHECK(link(hollow, {1}) == make_complex(3, {{2}, {3}}));

    SimplicialComplex solid = make_complex(3, {{1, 2, 3}});
    CHECK(link(solid, {1, 2}) == make_complex(3, {{3}}));
    // link of a facet is the empty complex
    CHECK(link(solid, {1, 2, 3}) == make_complex(3, {{}}));

    CHECK_THROWS_AS(link(hollow, {1, 2, 3}), precondition_error);
}

TEST_CASE("euler characteristic identity on random complexes") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        SimplicialComplex c = random_complex(rng);
        auto faces = enumerate_faces(c);
        for (FieldSpec k : kAllFields) {
            BettiProfile b = reduced_betti(c, k);
            long lhs = 0;
            for (const auto& f : faces)
                lhs += (f.size() % 2 == 0) ? -1 : 1; // (-1)^(|f|-1)
            long rhs = 0;
            for (int i = -1; i <= b.dim; ++i)
                rhs += (i % 2 == 0 ? 1 : -1) * b.betti(i);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rational betti numbers never exceed mod-p betti numbers") {
    std::mt19937_64 rng(31);
    std::vector<SimplicialComplex> samples = {rp2()};
    for (int trial = 0; trial < 60; ++trial)
        samples.push_back(random_complex(rng));
    for (const auto& c : samples) {
        BettiProfile q = reduced_betti(c, FieldSpec::rationals());
        for (int p : {2, 3}) {
            BettiProfile fp = reduced_betti(c, FieldSpec::prime(p));
            for (int i = -1; i <= q.dim; ++i)
                CHECK(q.betti(i) <= fp.betti(i));
        }
    }
}

TEST_CASE("make_complex prunes dominated generators") {
    SimplicialComplex c = make_complex(3, {{1}, {1, 2}, {1, 2}, {2}, {3}});
    CHECK(c.facets == std::vector<VertexSet>{{1, 2}, {3}});
    CHECK(is_face(c, {1}));
    CHECK(is_face(c, {}));
    CHECK(!is_face(c, {1, 3}));
    CHECK(c.dim() == 1);
    CHECK(face_count(c) == 5); // {}, {1}, {2}, {3}, {1,2}
}
