#include <doctest.h>

#include <random>

#include "forestcol/io.hpp"
#include "test_util.hpp"

using namespace forestcol;

TEST_CASE("minimal document round trip") {
    std::string text = R"({
  "params": {"d1": 0, "d2": 2},
  "vertices": [{"id": 7, "w1": 1, "w2": 0}],
  "edges": []
})";
    ParsedGraph parsed = parse_graph(text);
    CHECK(parsed.graph.vertex_count() == 1);
    CHECK(parsed.graph.weight(7, 1) == 1);
    CHECK_FALSE(parsed.report.changed());

    std::string canon = serialize_graph(parsed.graph);
    ParsedGraph again = parse_graph(canon);
    CHECK(again.graph == parsed.graph);
    CHECK(serialize_graph(again.graph) == canon);
}

TEST_CASE("normalization surfaces warnings") {
    std::string text = R"({
  "params": {"d1": 0, "d2": 2},
  "vertices": [{"id": 0}, {"id": 1, "w1": 9}],
  "edges": [{"u": 0, "v": 1, "multiplicity": 3}]
})";
    ParsedGraph parsed = parse_graph(text);
    CHECK(parsed.graph.multiplicity(0, 1) == 2);
    CHECK(parsed.graph.weight(1, 1) == 1);
    CHECK(parsed.report.multiplicities_clamped == 1);
    CHECK(parsed.report.weights_clamped == 1);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_graph("not json at all {"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"params": {"d1": 0}})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"params": {"d1": 0, "d2": 1}})"), ParseError);
    // loop
    CHECK_THROWS_AS(parse_graph(R"({
        "params": {"d1": 0, "d2": 2},
        "vertices": [{"id": 0}],
        "edges": [{"u": 0, "v": 0}]})"),
                    ParseError);
    // duplicate id
    CHECK_THROWS_AS(parse_graph(R"({
        "params": {"d1": 0, "d2": 2},
        "vertices": [{"id": 0}, {"id": 0}],
        "edges": []})"),
                    ParseError);
    // unknown endpoint
    CHECK_THROWS_AS(parse_graph(R"({
        "params": {"d1": 0, "d2": 2},
        "vertices": [{"id": 0}],
        "edges": [{"u": 0, "v": 3}]})"),
                    ParseError);
    // zero multiplicity
    CHECK_THROWS_AS(parse_graph(R"({
        "params": {"d1": 0, "d2": 2},
        "vertices": [{"id": 0}, {"id": 1}],
        "edges": [{"u": 0, "v": 1, "multiplicity": 0}]})"),
                    ParseError);
    // negative weight
    CHECK_THROWS_AS(parse_graph(R"({
        "params": {"d1": 0, "d2": 2},
        "vertices": [{"id": 0, "w1": -1}],
        "edges": []})"),
                    ParseError);
}

TEST_CASE("round trip is lossless over random graphs") {
    std::mt19937_64 rng(97);
    for (int iter = 0; iter < 60; ++iter) {
        Params p(iter % 3, 2 + iter % 6);
        WeightedMultigraph g = testutil::random_graph(p, 1 + iter % 9, 12, rng);
        ParsedGraph back = parse_graph(serialize_graph(g));
        CHECK(back.graph == g);
        CHECK_FALSE(back.report.changed());
        CHECK(serialize_graph(back.graph) == serialize_graph(g));
    }
}

TEST_CASE("coloring documents round trip") {
    Coloring c;
    c.set(3, 1);
    c.set(9, 2);
    CaseTrace trace;
    trace.records.push_back({4, 0, 17, 0, "u=3"});
    std::string text = serialize_coloring(c, &trace);
    Coloring back = parse_coloring(text);
    CHECK(back.assignment == c.assignment);

    CHECK_THROWS_AS(parse_coloring("{}"), ParseError);
    CHECK_THROWS_AS(parse_coloring(R"({"assignments": [{"id": 0, "class": 3}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_coloring(R"({"assignments": [{"id": 0, "class": 1}, {"id": 0, "class": 2}]})"),
        ParseError);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("4") == Rational(4, 1));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}
