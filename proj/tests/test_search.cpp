#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hypermatch/construct.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/search.hpp"

using hm::Edge;
using hm::Hypergraph;
using hm::RunConfig;
using hm::Vertex;

namespace {

// All triples inside {1..11} plus one lonely edge through vertex 12: a low-degree vertex
// that rule 1 must repair first.
Hypergraph lonely_vertex_instance() {
    std::vector<Edge> edges;
    for (int a = 1; a <= 9; ++a)
        for (int b = a + 1; b <= 10; ++b)
            for (int c = b + 1; c <= 11; ++c) edges.push_back({a, b, c});
    edges.push_back({1, 2, 12});
    return Hypergraph(12, 3, std::move(edges));
}

}  // namespace

TEST_CASE("deficiency conditions hold on complete graphs and fail on empty ones") {
    CHECK(hm::deficiency_conditions_hold(hm::gen_complete(3, 12), hm::make_rat(1, 20),
                                         hm::make_rat(1, 10000), 1));
    std::string why;
    CHECK_FALSE(hm::deficiency_conditions_hold(Hypergraph(12, 3, {}), hm::make_rat(1, 20),
                                               hm::make_rat(1, 10000), 1, &why));
    CHECK_FALSE(why.empty());
    CHECK(why.find("condition") != std::string::npos);
    // The empty vertex set is vacuously fine.
    CHECK(hm::deficiency_conditions_hold(Hypergraph(0, 3, {}), hm::make_rat(1, 20),
                                         hm::make_rat(1, 10000), 1));
}

TEST_CASE("conditions are thread-count invariant") {
    Hypergraph H = hm::gen_random_dense(3, 14, 6, 12);
    std::string w1, w4;
    bool r1 = hm::deficiency_conditions_hold(H, hm::make_rat(1, 20), hm::make_rat(1, 10000), 1, &w1);
    bool r4 = hm::deficiency_conditions_hold(H, hm::make_rat(1, 20), hm::make_rat(1, 10000), 4, &w4);
    CHECK(r1 == r4);
    CHECK(w1 == w4);
}

TEST_CASE("every edge of a complete graph is safe") {
    Hypergraph K6 = hm::gen_complete(3, 6);
    auto safe = hm::safe_edges(K6, RunConfig{});
    CHECK(safe.size() == static_cast<size_t>(K6.edge_count()));
    CHECK(std::is_sorted(safe.begin(), safe.end()));

    // Parity barrier: removing any edge still leaves no perfect matching on what remains.
    auto none = hm::safe_edges(hm::gen_parity(3, 3, 6), RunConfig{});
    CHECK(none.empty());
}

TEST_CASE("safe_edges is deterministic across thread counts") {
    Hypergraph H = hm::gen_random_dense(3, 12, 6, 8, true);
    RunConfig serial;
    RunConfig parallel;
    parallel.threads = 4;
    CHECK(hm::safe_edges(H, serial) == hm::safe_edges(H, parallel));
}

TEST_CASE("rule 1 repairs the lowest-degree vertex") {
    Hypergraph H = lonely_vertex_instance();
    // chi2 = n^2/18 - delta1 = 8 - 1 > 0, so the low-degree branch triggers; the only
    // edge through vertex 12 is {1,2,12}, and removing it leaves a complete 9-graph.
    hm::SearchReport report;
    hm::RemovalChoice choice = hm::find_removal_edge(H, RunConfig{}, &report);
    CHECK(choice.rule == 1);
    CHECK(choice.edge == Edge{1, 2, 12});
    CHECK(report.safety_checks >= 1);
}

TEST_CASE("rule 2 picks the first safe edge when degrees are healthy") {
    hm::RemovalChoice choice = hm::find_removal_edge(hm::gen_complete(3, 12), RunConfig{});
    CHECK(choice.rule == 2);
    CHECK(choice.edge == Edge{1, 2, 3});
}

TEST_CASE("no qualifying edge raises a regime violation") {
    CHECK_THROWS_AS(hm::find_removal_edge(hm::gen_parity(3, 3, 6), RunConfig{}),
                    hm::RegimeViolation);
}

TEST_CASE("find_pm walks removals down to the brute tail") {
    Hypergraph K12 = hm::gen_complete(3, 12);
    RunConfig cfg;
    cfg.brute_threshold = 8;
    hm::SearchReport report;
    hm::Decision dec = hm::find_pm(K12, cfg, &report);
    CHECK(dec.pm_exists);
    REQUIRE(dec.matching.has_value());
    CHECK(hm::is_perfect_matching(K12, *dec.matching));
    CHECK(report.fallbacks == 0);
    // 12 -> 9 -> 6 by removal, then the 6-vertex tail decides exactly.
    CHECK(report.removals.size() == 2);
    for (const auto& ev : report.removals) {
        CHECK(ev.rule == 2);
        CHECK(ev.conditions_after_ok);
    }
    CHECK(report.removals[0].n_before == 12);
    CHECK(report.removals[1].n_before == 9);
}

TEST_CASE("find_pm on a planted dense instance") {
    Hypergraph H = hm::gen_random_dense(3, 15, 10, /*seed=*/21, /*plant_pm=*/true);
    RunConfig cfg;
    cfg.gamma = hm::make_rat(1, 10);
    cfg.brute_threshold = 9;
    hm::SearchReport report;
    hm::Decision dec = hm::find_pm(H, cfg, &report);
    CHECK(dec.pm_exists);
    REQUIRE(dec.matching.has_value());
    CHECK(hm::is_perfect_matching(H, *dec.matching));
    // Whatever mix of removals and fallbacks happened, the loop made progress and the
    // recorded events carry exact potentials.
    for (const auto& ev : report.removals) {
        CHECK((ev.rule == 1 || ev.rule == 2));
        CHECK_FALSE(ev.chi1.empty());
        CHECK_FALSE(ev.chi2.empty());
    }
}

TEST_CASE("find_pm hands barriers straight to the certificate path") {
    RunConfig cfg;
    cfg.cfar = 0;
    cfg.brute_threshold = 0;
    hm::SearchReport report;
    hm::Decision dec = hm::find_pm(hm::gen_parity(3, 3, 6), cfg, &report);
    CHECK_FALSE(dec.pm_exists);
    REQUIRE(dec.certificate.has_value());
    CHECK(hm::verify_certificate(hm::gen_parity(3, 3, 6), *dec.certificate));
    CHECK(report.removals.empty());
}

TEST_CASE("find_pm below the threshold is pure brute force") {
    Hypergraph K6 = hm::gen_complete(3, 6);
    hm::SearchReport report;
    hm::Decision dec = hm::find_pm(K6, RunConfig{}, &report);
    CHECK(dec.pm_exists);
    CHECK(dec.mode == hm::DecisionMode::brute);
    REQUIRE(dec.matching.has_value());
    CHECK(dec.matching->edges == std::vector<Edge>{{1, 2, 3}, {4, 5, 6}});
    CHECK(report.removals.empty());
}
