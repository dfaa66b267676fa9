#include <doctest.h>

#include <stdexcept>

#include "bootperc/closure.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/edge_list.hpp"
#include "bootperc/serialize.hpp"
#include "bootperc/verifier.hpp"

using namespace bootperc;

namespace {

// two cliques {0..6} and {7..11}, each outside vertex wired to three
// consecutive inside vertices; {0..6} is closed under the 4-neighbour rule
Graph closed_set_fixture() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) edges.push_back({u, v});
    for (int u = 7; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) edges.push_back({u, v});
    for (int i = 0; i < 5; ++i)
        for (int j : {i % 7, (i + 1) % 7, (i + 2) % 7}) edges.push_back({7 + i, j});
    return Graph(12, edges);
}

} // namespace

TEST_CASE("gap polynomial values and sign pattern") {
    CHECK(gap_polynomial(30, 3, 4) == 0);
    CHECK(gap_polynomial(30, 3, 5) == -10);
    CHECK(gap_polynomial(30, 3, 15) == 0);
    CHECK_THROWS_AS(gap_polynomial(30, 2, 4), std::invalid_argument);

    // nonnegative at the small-side boundary, negative just past it
    for (int r = 3; r <= 8; ++r)
        for (int n = 10 * r; n <= 120; ++n) {
            CHECK(gap_polynomial(n, r, 2 * r - 2) >= 0);
            CHECK(gap_polynomial(n, r, 2 * r - 1) < 0);
        }
}

TEST_CASE("allowed closed-set sizes") {
    GapIntervals gi = allowed_closed_sizes(30, 3);
    CHECK(gi.small_max == 4);
    CHECK(gi.large_min == 15);
    GapIntervals g4 = allowed_closed_sizes(100, 4);
    CHECK(g4.small_max == 6);
    CHECK(g4.large_min == 49);
    CHECK(g4.k == 1);
    CHECK_THROWS_AS(allowed_closed_sizes(20, 3), std::invalid_argument); // n < 10r
    CHECK_THROWS_AS(allowed_closed_sizes(100, 2), std::invalid_argument);
}

TEST_CASE("closure-gap check passes on dense graphs") {
    Graph g = random_min_degree_graph(40, 21, 0.6, 11);
    Report rep = check_closure_gap(g, 3, 300, 5);
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 300);
    CHECK(!rep.counterexample.has_value());

    // sparse graph: the precondition fails loudly instead of reporting
    Graph sparse = grid(7, 2);
    CHECK_THROWS_AS(check_closure_gap(sparse, 3, 10, 1), std::invalid_argument);
    // clique-pair at r=4 misses the needed degree floor by one
    CHECK_THROWS_AS(check_closure_gap(clique_pair_bipartite(40, 4), 4, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("closure-gap check goes exhaustive on tiny search spaces") {
    Graph g = random_min_degree_graph(30, 16, 0.6, 3);
    Report rep = check_closure_gap(g, 3, 100000, 5); // more samples than C(30,3)
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 4060);
    CHECK(rep.notes.find("exhaustive") != std::string::npos);
}

TEST_CASE("sets above the percolation size always take over") {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) e.push_back({u, v});
    Graph k20(20, e);
    Report rep = check_big_sets_percolate(k20, 4, 2, 50, 1);
    CHECK(rep.passed);

    Graph dense = random_min_degree_graph(40, 22, 0.6, 8);
    Report r2 = check_big_sets_percolate(dense, 4, 2, 200, 9);
    CHECK(r2.passed);

    // the degree hypothesis is checked up front
    CHECK_THROWS_AS(check_big_sets_percolate(double_clique_matching(8), 3, 2, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("near-complete graphs: every r-set percolates") {
    Graph g = random_min_degree_graph(12, 10, 0.5, 9);
    Report rep = check_all_r_sets_percolate(g, 4, 2);
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 495);

    // n below the bound the hypothesis needs
    Graph small = random_min_degree_graph(8, 6, 0.5, 9);
    CHECK_THROWS_AS(check_all_r_sets_percolate(small, 4, 2), std::invalid_argument);
}

TEST_CASE("closed-set structure: complement clique and inside degrees") {
    Graph g = closed_set_fixture();
    VertexSet a = VertexSet::from_ids(12, {0, 1, 2, 3, 4, 5, 6});
    REQUIRE(is_closed(g, a, 4));
    Report rep = check_closed_set_structure(g, a, 4);
    CHECK(rep.passed);

    CHECK_THROWS_AS(check_closed_set_structure(g, VertexSet::full(12), 4),
                    std::invalid_argument); // wrong size
    // a set that is not closed is a caller error, not a finding
    VertexSet open = VertexSet::from_ids(12, {0, 1, 2, 3, 4, 5, 7});
    CHECK_THROWS_AS(check_closed_set_structure(g, open, 4), std::invalid_argument);
}

TEST_CASE("extremal family verification") {
    ConstructionSpec dc;
    dc.family = "double-clique-matching";
    dc.n = 10;
    dc.r = 3;
    Budget b{.limit = kDefaultBudget};
    Report rep = verify_construction_extremal(dc, b);
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 120); // C(10,3)

    ConstructionSpec cp;
    cp.family = "clique-pair-bipartite";
    cp.n = 16;
    cp.r = 4;
    Budget b2{.limit = kDefaultBudget};
    CHECK(verify_construction_extremal(cp, b2).passed);
}

TEST_CASE("a failing family yields a replayable counterexample") {
    // matched cliques are extremal for the 3-neighbour rule, not the 2-neighbour one
    ConstructionSpec dc;
    dc.family = "double-clique-matching";
    dc.n = 8;
    dc.r = 2;
    Budget b{.limit = kDefaultBudget};
    Report rep = verify_construction_extremal(dc, b);
    CHECK(!rep.passed);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->offending_set == std::vector<int>{1, 4});

    // replay: rebuild the graph from the serialized edge list and re-run
    Graph replay = parse_edge_list(rep.counterexample->graph_edge_list);
    VertexSet bad = VertexSet::from_ids(replay.vertex_count(),
                                        rep.counterexample->offending_set);
    CHECK(percolates(replay, bad, 2));
}

TEST_CASE("budget exhaustion is inconclusive, never a failure") {
    ConstructionSpec cp;
    cp.family = "clique-pair-bipartite";
    cp.n = 20;
    cp.r = 5;
    Budget b{.limit = 10};
    Report rep = verify_construction_extremal(cp, b);
    CHECK(rep.passed);
    CHECK(rep.inconclusive == 1);
    CHECK(b.used <= 10);
}

TEST_CASE("threshold sweep emits one row per instance") {
    Budget b{.limit = kDefaultBudget};
    std::vector<InstanceRow> streamed;
    Report rep = verify_main_theorem_sweep(3, {30, 32}, 2, 7, b, 0.55,
                                           [&](const InstanceRow& row) { streamed.push_back(row); });
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 6);
    REQUIRE(rep.rows.size() == 6);
    CHECK(streamed.size() == 6);
    for (std::size_t i = 0; i < streamed.size(); ++i) {
        CHECK(streamed[i].outcome == "pass");
        CHECK(streamed[i].witness_size == 3);
        CHECK(streamed[i].seed == rep.rows[i].seed);
    }
    CHECK(rep.rows[0].n == 30);
    CHECK(rep.rows[5].n == 32);

    // identical call, identical rows
    Budget b2{.limit = kDefaultBudget};
    Report again = verify_main_theorem_sweep(3, {30, 32}, 2, 7, b2);
    for (std::size_t i = 0; i < again.rows.size(); ++i) {
        CHECK(again.rows[i].seed == rep.rows[i].seed);
        CHECK(again.rows[i].closures_used == rep.rows[i].closures_used);
    }
}

TEST_CASE("sweep at the higher threshold takes the bipartite fast path") {
    Budget b{.limit = kDefaultBudget};
    Report rep = verify_main_theorem_sweep(4, {60, 61}, 1, 3, b);
    CHECK(rep.passed);
    CHECK(rep.instances_checked == 2);
    for (const auto& row : rep.rows) {
        CHECK(row.outcome == "pass");
        CHECK(row.witness_size == 4);
        CHECK(row.closures_used == 1); // one closure call certifies the instance
    }
}

TEST_CASE("sweep under a starved budget reports inconclusive rows") {
    Budget b{.limit = 2};
    Report rep = verify_main_theorem_sweep(3, {30, 30}, 2, 7, b);
    CHECK(rep.passed); // no counterexample seen
    CHECK(rep.inconclusive == 2);
    for (const auto& row : rep.rows) CHECK(row.outcome == "inconclusive");
}

TEST_CASE("report serialization keeps a fixed field order") {
    Budget b{.limit = kDefaultBudget};
    Report rep = verify_main_theorem_sweep(3, {30, 30}, 1, 7, b);
    json j = to_json(rep);
    CHECK(j["suite"] == "main-theorem-sweep-r3");
    CHECK(j["passed"] == true);
    CHECK(j["counterexample"].is_null());
    std::string row = csv_row(rep.rows[0]);
    CHECK(row.find("main-theorem-sweep-r3,30,3,") == 0);
    CHECK(csv_header() == "suite,n,r,seed,outcome,witness_size,closures_used");
}
