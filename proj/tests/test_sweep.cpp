#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmchordal/sweep.hpp"

using namespace cmchordal;

TEST_CASE("exhaustive sweep n=4 with all checks is clean") {
    SweepOptions opt;
    opt.fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
    opt.check_leaf_converse = true;
    SweepStats s = sweep_all_graphs(4, opt);
    CHECK(s.graphs == 64);
    CHECK(s.clean());
    CHECK(s.chordal == 38);
    CHECK(s.cm == 16);
    CHECK(s.oracle_runs == 38 * 3);
}

TEST_CASE("random sweep is clean and deterministic") {
    SweepOptions opt;
    opt.fields = {FieldSpec::prime(2)};
    SweepStats a = sweep_random_chordal(7, 2, 120, 99, opt);
    SweepStats b = sweep_random_chordal(7, 2, 120, 99, opt);
    CHECK(a.graphs == 120);
    CHECK(a.skipped == 0); // the generator never produces isolated vertices
    CHECK(a.clean());
    CHECK(a.chordal == 120);
    CHECK(a.cm == b.cm);
    CHECK(a.gorenstein == b.gorenstein);
}

TEST_CASE("serial reference path and parallel path agree") {
    SweepOptions serial;
    serial.fields = {FieldSpec::prime(3)};
    serial.jobs = 1;
    SweepOptions parallel = serial;
    parallel.jobs = 0;

    SweepStats s = sweep_all_graphs(5, serial);
    SweepStats p = sweep_all_graphs(5, parallel);
    CHECK(s.graphs == p.graphs);
    CHECK(s.skipped == p.skipped);
    CHECK(s.chordal == p.chordal);
    CHECK(s.cm == p.cm);
    CHECK(s.gorenstein == p.gorenstein);
    CHECK(s.disagreements == p.disagreements);

    SweepStats sr = sweep_random_chordal(8, 2, 60, 5, serial);
    SweepStats pr = sweep_random_chordal(8, 2, 60, 5, parallel);
    CHECK(sr.cm == pr.cm);
    CHECK(sr.disagreements == pr.disagreements);
}

TEST_CASE("caps and argument validation") {
    SweepOptions opt;
    CHECK_THROWS_AS(sweep_all_graphs(9, opt), cap_error);
    CHECK_THROWS_AS(sweep_all_graphs(0, opt), precondition_error);
    CHECK_THROWS_AS(sweep_random_chordal(5, 2, -1, 0, opt), precondition_error);
    // count 0 is a no-op, not an error
    CHECK(sweep_random_chordal(5, 2, 0, 0, opt).graphs == 0);
}

TEST_CASE("stats serialization mentions every counter") {
    SweepOptions opt;
    SweepStats s = sweep_all_graphs(3, opt);
    std::string text = stats_to_text(s);
    CHECK(text.find("graphs tested") != std::string::npos);
    CHECK(text.find("disagreements") != std::string::npos);
    std::string json = stats_to_json(s);
    CHECK(json.find("\"graphs\": 8") != std::string::npos);
    CHECK(json.find("\"disagreements\": 0") != std::string::npos);
}
