#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kcbg/connectivity.hpp"
#include "kcbg/criticality.hpp"
#include "kcbg/fixtures.hpp"
#include "test_support.hpp"

using namespace kcbg;
namespace ts = kcbg::testsupport;

namespace {

Digraph cycle_digraph(int order) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < order; ++v) arcs.emplace_back(v, (v + 1) % order);
    return make_digraph(order, std::move(arcs));
}

}  // namespace

TEST_CASE("local_connectivity examples") {
    // on the path graph any internal vertex separates u0 from u3
    CHECK(local_connectivity(bar_g(6, 5), {Side::U, 0}, {Side::U, 3}) == 1);
    CHECK(local_connectivity(complete_g(3, 2), {Side::U, 0}, {Side::U, 1}) == 2);

    BipartiteGraph two_parts(2, 2, {{0, 0}, {1, 1}});
    CHECK(local_connectivity(two_parts, {Side::U, 0}, {Side::U, 1}) == 0);

    CHECK_THROWS_AS(local_connectivity(complete_g(3, 2), {Side::U, 0}, {Side::U, 0}), Error);
    CHECK_THROWS_AS(local_connectivity(complete_g(3, 2), {Side::U, 0}, {Side::V, 0}), Error);
    CHECK_THROWS_AS(local_connectivity(complete_g(3, 2), {Side::U, 0}, {Side::U, 7}), Error);
}

TEST_CASE("flow cuts equal exhaustive cut enumeration") {
    std::mt19937 rng(31337);
    std::vector<BipartiteGraph> corpus;
    for (const auto& named : ts::construction_corpus(6)) corpus.push_back(named.graph);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + t % 6;
        int m = 1 + t % 5;
        if (n + m > 12) continue;
        corpus.push_back(ts::random_bipartite(rng, n, m, 0.25 + 0.15 * (t % 4)));
    }
    long long pairs = 0;
    for (const BipartiteGraph& g : corpus) {
        if (g.n() + g.m() > 12) continue;
        int total = g.n() + g.m();
        for (int x = 0; x < total; ++x) {
            for (int y = x + 1; y < total; ++y) {
                VertexRef rx = x < g.n() ? VertexRef{Side::U, x} : VertexRef{Side::V, x - g.n()};
                VertexRef ry = y < g.n() ? VertexRef{Side::U, y} : VertexRef{Side::V, y - g.n()};
                if (rx.side != ry.side && g.has_edge(rx.side == Side::U ? rx.index : ry.index,
                                                     rx.side == Side::U ? ry.index : rx.index)) {
                    continue;
                }
                REQUIRE(local_connectivity(g, rx, ry) == ts::oracle_min_vertex_cut(g, x, y));
                ++pairs;
            }
        }
    }
    CHECK(pairs > 500);
}

TEST_CASE("kappa_set examples") {
    CHECK(kappa_set(bar_g(6, 5), v_class(bar_g(6, 5))) == 1);
    CHECK(kappa_set(bar_g(6, 5), u_class(bar_g(6, 5))) == 1);
    CHECK(kappa_set(complete_g(4, 3), v_class(complete_g(4, 3))) == 4);
    CHECK(kappa_set(complete_g(4, 3), u_class(complete_g(4, 3))) == 3);

    CHECK_THROWS_AS(kappa_set(complete_g(3, 2), {{Side::U, 0}}), Error);
    CHECK_THROWS_AS(kappa_set(complete_g(3, 2), {{Side::U, 0}, {Side::V, 0}}), Error);
}

TEST_CASE("kappa examples") {
    CHECK(kappa(bar_g(6, 5)) == 1);
    CHECK(kappa(kappa_tuned_g(6, 4, 2)) == 2);
    CHECK(kappa(check_g(6, 4)) == 0);
    CHECK(kappa(complete_g(4, 3)) == 3);
    CHECK(kappa(complete_g(1, 3)) == 1);
    CHECK_THROWS_AS(kappa(complete_g(1, 1)), Error);
}

TEST_CASE("contract_matching") {
    BipartiteGraph square = complete_g(2, 2);
    Matching m;
    m.pairs = {{0, 0}, {1, 1}};
    Digraph d = contract_matching(square, m);
    CHECK(d.order == 2);
    CHECK(d.arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(d.contracted_from == std::vector<Edge>{{0, 0}, {1, 1}});

    BipartiteGraph tilde = build_tilde(bar_g(6, 5));
    Digraph dt = contract_matching(tilde, max_matching(tilde));
    CHECK(dt.order == 6);
    CHECK(strongly_k_connected(dt, 1));

    CHECK_THROWS_AS(contract_matching(complete_g(3, 2), m), Error);
    Matching wrong;
    wrong.pairs = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(contract_matching(square, wrong), Error);
    Matching nonedge;
    nonedge.pairs = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(contract_matching(BipartiteGraph(2, 2, {{0, 0}, {1, 0}}), nonedge), Error);
}

TEST_CASE("strongly_k_connected on cycles") {
    CHECK(strongly_k_connected(cycle_digraph(6), 1));
    CHECK_FALSE(strongly_k_connected(cycle_digraph(6), 2));
    CHECK(strongly_k_connected(cycle_digraph(2), 1));
    CHECK_THROWS_AS(strongly_k_connected(cycle_digraph(3), 3), Error);

    BipartiteGraph tilde = build_tilde(bar_g(8, 5));
    Digraph d = contract_matching(tilde, max_matching(tilde));
    CHECK(strongly_k_connected(d, 3));
    CHECK(is_kcb_bruteforce(bar_g(8, 5)).verdict);
}

TEST_CASE("strong connectivity matches brute-force deletion") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> pick_order(2, 7);
    for (int trial = 0; trial < 60; ++trial) {
        int order = pick_order(rng);
        std::bernoulli_distribution coin(0.2 + 0.1 * (trial % 5));
        std::vector<std::pair<int, int>> arcs;
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                if (a != b && coin(rng)) arcs.emplace_back(a, b);
            }
        }
        Digraph d = make_digraph(order, arcs);
        for (int k = 1; k < order; ++k) {
            REQUIRE(strongly_k_connected(d, k) == ts::oracle_strongly_k_connected(order, d.arcs, k));
        }
    }
    // contraction digraphs from the construction corpus
    for (const auto& named : ts::construction_corpus(8)) {
        const BipartiteGraph& g = named.graph;
        if (g.n() > 10) continue;
        BipartiteGraph tilde = build_tilde(g);
        MatchingSolver solver(tilde);
        if (solver.max_size() < tilde.m()) continue;
        Digraph d = contract_matching(tilde, solver.extract());
        int k = g.n() - g.m();
        if (d.order <= k) continue;
        REQUIRE(strongly_k_connected(d, k) == ts::oracle_strongly_k_connected(d.order, d.arcs, k));
    }
}

TEST_CASE("the full equivalence chain matches the definition oracle") {
    std::vector<BipartiteGraph> corpus;
    for (const auto& named : ts::construction_corpus(8)) corpus.push_back(named.graph);
    for (BipartiteGraph& g : ts::random_corpus(60, 7, 777)) corpus.push_back(std::move(g));
    for (const BipartiteGraph& g : corpus) {
        if (component_count(g).count != 1) continue;
        BipartiteGraph tilde = build_tilde(g);
        MatchingSolver solver(tilde);
        if (solver.max_size() < tilde.m()) continue;
        Digraph d = contract_matching(tilde, solver.extract());
        int k = g.n() - g.m();
        REQUIRE(is_kcb_bruteforce(g).verdict == strongly_k_connected(d, k));
    }
}

TEST_CASE("check_connectivity_bounds") {
    ConnectivityReport bar = check_connectivity_bounds(bar_g(6, 5));
    CHECK(bar.kappa == 1);
    CHECK(bar.kappa_U == 1);
    CHECK(bar.kappa_V == 1);
    CHECK(bar.kappaV_bound_ok);
    CHECK(bar.kappaU_bound_ok);
    CHECK(bar.kappa_bound_ok);
    REQUIRE(bar.small_separator_isolates_u.has_value());
    CHECK(*bar.small_separator_isolates_u);

    ConnectivityReport star = check_connectivity_bounds(star_g(6, 5));
    CHECK(star.kappaV_bound_ok);
    CHECK(star.kappaU_bound_ok);
    CHECK(star.kappa_bound_ok);

    ConnectivityReport sd = check_connectivity_bounds(small_delta_7_4());
    CHECK(sd.kappaV_bound_ok);
    CHECK(sd.kappaU_bound_ok);
    CHECK(sd.kappa_bound_ok);
    REQUIRE(sd.small_separator_isolates_u.has_value());
    CHECK(*sd.small_separator_isolates_u);

    CHECK_THROWS_AS(check_connectivity_bounds(ddot_g(6, 5, 2)), Error);
    CHECK_THROWS_AS(check_connectivity_bounds(complete_g(4, 1)), Error);
}

TEST_CASE("bar_g connectivity matches its degree extrema across small orders") {
    for (int n = 3; n <= 10; ++n) {
        for (int m = 2; m < n; ++m) {
            int k = n - m;
            BipartiteGraph g = bar_g(n, m);
            ConnectivityReport r = check_connectivity_bounds(g);
            REQUIRE((r.kappa_V == k || r.kappa_V == k + 1));
            REQUIRE(r.kappa_U == r.degrees.delta_U);
            REQUIRE(r.kappa == std::min(r.degrees.delta_U, r.degrees.delta_V));
            if (k == 1) REQUIRE(r.kappa_V == 1);
            if (r.small_separator_isolates_u) REQUIRE(*r.small_separator_isolates_u);
        }
    }
}
