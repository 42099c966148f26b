#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kcbg/bigraph.hpp"
#include "kcbg/constructions.hpp"
#include "kcbg/fixtures.hpp"
#include "test_support.hpp"

using namespace kcbg;
namespace ts = kcbg::testsupport;

namespace {

// the order-(6,5) path graph, transcribed edge by edge
BipartiteGraph path_6_5() {
    return BipartiteGraph(6, 5,
                          {{5, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}});
}

}  // namespace

TEST_CASE("graph construction validates and canonicalizes") {
    BipartiteGraph star(2, 1, {{1, 0}, {0, 0}});
    CHECK(star.edge_count() == 2);
    CHECK(star.edges() == std::vector<Edge>{{0, 0}, {1, 0}});

    CHECK(path_6_5().edge_count() == 10);

    CHECK_THROWS_AS(BipartiteGraph(2, 1, {{0, 5}}), Error);
    CHECK_THROWS_AS(BipartiteGraph(2, 1, {{-1, 0}}), Error);
    CHECK_THROWS_AS(BipartiteGraph(0, 1, {}), Error);

    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 0}, {0, 0}}), Error);
    BipartiteGraph lenient(2, 2, {{0, 0}, {0, 0}}, true);
    CHECK(lenient.edge_count() == 1);
}

TEST_CASE("degree_stats on the reference graphs") {
    DegreeStats bar = degree_stats(path_6_5());
    CHECK(bar.delta_U == 1);
    CHECK(bar.Delta_U == 2);
    CHECK(bar.delta_V == 2);
    CHECK(bar.Delta_V == 2);
    CHECK(bar.edge_count == 10);

    DegreeStats complete = degree_stats(complete_g(6, 4));
    CHECK(complete.delta_U == 4);
    CHECK(complete.Delta_U == 4);
    CHECK(complete.delta_V == 6);
    CHECK(complete.Delta_V == 6);
    CHECK(complete.edge_count == 24);

    DegreeStats sd = degree_stats(small_delta_7_4());
    CHECK(sd.delta_U == 1);
    CHECK(sd.Delta_U == 3);
    CHECK(sd.delta_V == 4);
    CHECK(sd.Delta_V == 4);
    CHECK(sd.edge_count == 16);
}

TEST_CASE("degree sums equal the edge count") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        BipartiteGraph g = ts::random_bipartite(rng, 1 + t % 8, 1 + t % 5, 0.4);
        long long sum_u = 0, sum_v = 0;
        for (int i = 0; i < g.n(); ++i) sum_u += g.deg_u(i);
        for (int j = 0; j < g.m(); ++j) sum_v += g.deg_v(j);
        REQUIRE(sum_u == g.edge_count());
        REQUIRE(sum_v == g.edge_count());
    }
}

TEST_CASE("build_tilde adds k dominating V-vertices") {
    BipartiteGraph tilde = build_tilde(path_6_5());
    CHECK(tilde.n() == 6);
    CHECK(tilde.m() == 6);
    CHECK(tilde.edge_count() == 16);
    for (int i = 0; i < 6; ++i) CHECK(tilde.has_edge(i, 5));

    BipartiteGraph k33 = build_tilde(complete_g(3, 2));
    CHECK(k33 == complete_g(3, 3));

    CHECK_THROWS_AS(build_tilde(complete_g(4, 4)), Error);
    CHECK_THROWS_AS(build_tilde(complete_g(3, 4)), Error);
}

TEST_CASE("removing the added class recovers the original graph") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 7;
        int m = 1 + (t % (n - 1));
        BipartiteGraph g = ts::random_bipartite(rng, n, m, 0.5);
        BipartiteGraph tilde = build_tilde(g);
        REQUIRE(tilde.n() == tilde.m());
        std::vector<Edge> kept;
        for (const Edge& e : tilde.edges()) {
            if (e.second < m) kept.push_back(e);
        }
        REQUIRE(BipartiteGraph(n, m, kept) == g);
        for (int d = m; d < tilde.m(); ++d) REQUIRE(tilde.deg_v(d) == n);
    }
}

TEST_CASE("component_count") {
    CHECK(component_count(ddot_g(6, 5, 2)).count == 3);
    CHECK(component_count(path_6_5()).count == 1);
    CHECK(component_count(BipartiteGraph(2, 2, {})).count == 4);

    Components c = component_count(ddot_g(6, 5, 2));
    // {u0,u1,v0,v3}, {u2,u3,v1,v4}, {u4,u5,v2}
    CHECK(c.label_u == std::vector<int>{0, 0, 1, 1, 2, 2});
    CHECK(c.label_v == std::vector<int>{0, 1, 2, 0, 1});
}

TEST_CASE("is_subgraph") {
    CHECK(is_subgraph(bar_g(6, 5), hat_g(6, 5, 2)));
    CHECK(is_subgraph(path_6_5(), path_6_5()));
    CHECK_FALSE(is_subgraph(hat_g(6, 5, 2), bar_g(6, 5)));
    CHECK_THROWS_AS(is_subgraph(complete_g(2, 2), complete_g(2, 3)), Error);
}

TEST_CASE("is_subgraph is antisymmetric on equal orders") {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        BipartiteGraph a = ts::random_bipartite(rng, 4, 3, 0.5);
        BipartiteGraph b = ts::random_bipartite(rng, 4, 3, 0.5);
        if (is_subgraph(a, b) && is_subgraph(b, a)) REQUIRE(a == b);
    }
}

TEST_CASE("remove_edge") {
    BipartiteGraph g = remove_edge(path_6_5(), {5, 0});
    CHECK(g.edge_count() == 9);
    CHECK_FALSE(g.has_edge(5, 0));
    CHECK_THROWS_AS(remove_edge(g, {5, 0}), Error);
}

TEST_CASE("edge list format is bit-exact") {
    CHECK(serialize(BipartiteGraph(2, 1, {{0, 0}, {1, 0}}), Format::edgelist) == "2 1\n0 0\n1 0\n");
    BipartiteGraph parsed = parse("2 1\n0 0\n1 0\n", Format::edgelist);
    CHECK(parsed == BipartiteGraph(2, 1, {{0, 0}, {1, 0}}));
}

TEST_CASE("edge list parsing diagnostics") {
    CHECK_THROWS_WITH_AS(parse("2 1\n0 9\n", Format::edgelist),
                         doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse("", Format::edgelist), Error);
    CHECK_THROWS_AS(parse("2\n", Format::edgelist), Error);
    CHECK_THROWS_AS(parse("2 1\n0 zero\n", Format::edgelist), Error);
    CHECK_THROWS_AS(parse("2 2\n0 0\n0 0\n", Format::edgelist), Error);
    CHECK(parse("2 2\n0 0\n0 0\n", Format::edgelist, true).edge_count() == 1);

    BipartiteGraph commented = parse("# header comment\n2 1\n0 0 # inline\n\n1 0\n", Format::edgelist);
    CHECK(commented.edge_count() == 2);
}

TEST_CASE("dot export names classes and ranks") {
    std::string dot = serialize(complete_g(2, 1), Format::dot);
    CHECK(dot.find("u0 -- v0") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(parse(dot, Format::dot) == complete_g(2, 1));
    CHECK_THROWS_AS(parse("graph g { u0 -- v0; }", Format::dot), Error);
    CHECK_THROWS_AS(parse("digraph oops", Format::dot), Error);
}

TEST_CASE("json format carries labels") {
    BipartiteGraph g(2, 1, {{0, 0}, {1, 0}});
    g.set_labels({"relay-a", "relay-b"}, {"sensor"});
    std::string text = serialize(g, Format::json);
    BipartiteGraph back = parse(text, Format::json);
    CHECK(back == g);
    CHECK(back.u_labels() == std::vector<std::string>{"relay-a", "relay-b"});
    CHECK_THROWS_AS(parse("{\"n\": 2}", Format::json), Error);
    CHECK_THROWS_AS(parse("not json", Format::json), Error);
    CHECK_THROWS_AS(parse("{\"n\": 2, \"m\": 1, \"edges\": [[0, 9]]}", Format::json), Error);
}

TEST_CASE("serialize and parse are inverse on 120 random graphs") {
    std::mt19937 rng(20240501);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + t % 9;
        int m = 1 + (t * 7) % 6;
        BipartiteGraph g = ts::random_bipartite(rng, n, m, 0.25 + 0.1 * (t % 6));
        for (Format f : {Format::edgelist, Format::dot, Format::json}) {
            std::string text = serialize(g, f);
            REQUIRE(parse(text, f) == g);
            REQUIRE(serialize(parse(text, f), f) == text);
        }
    }
}
