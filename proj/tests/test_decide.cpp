#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "hypermatch/construct.hpp"
#include "hypermatch/decide.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/lattice.hpp"

using hm::Certificate;
using hm::Edge;
using hm::EdgeLattice;
using hm::FullPair;
using hm::Hypergraph;
using hm::OrderedPartition;
using hm::RunConfig;
using hm::Vertex;
using hm::ZMat;
using hm::ZVec;

namespace {

// Brute oracle for is_soluble: every matching of at most dim-1 edges, by subset scan.
bool brute_soluble(const Hypergraph& H, const FullPair& pair) {
    int bound = pair.lattice.dim() - 1;
    ZVec whole = hm::index_vector(pair.partition, H.vertices());
    if (pair.lattice.contains(whole)) return true;
    long long m = H.edge_count();
    // Size 1.
    if (bound >= 1) {
        for (long long i = 0; i < m; ++i) {
            ZVec res = whole;
            ZVec ie = hm::index_vector(pair.partition, H.edge(static_cast<int>(i)));
            for (size_t c = 0; c < res.size(); ++c) res[c] -= ie[c];
            if (pair.lattice.contains(res)) return true;
        }
    }
    // Size 2.
    if (bound >= 2) {
        for (long long i = 0; i < m; ++i) {
            const Edge& a = H.edge(static_cast<int>(i));
            for (long long j = i + 1; j < m; ++j) {
                const Edge& b = H.edge(static_cast<int>(j));
                std::vector<Vertex> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) continue;
                ZVec res = whole;
                ZVec ia = hm::index_vector(pair.partition, a);
                ZVec ib = hm::index_vector(pair.partition, b);
                for (size_t c = 0; c < res.size(); ++c) res[c] -= ia[c] + ib[c];
                if (pair.lattice.contains(res)) return true;
            }
        }
    }
    return false;
}

RunConfig asymptotic_config(long long cfar) {
    RunConfig cfg;
    cfg.brute_threshold = 0;  // never brute below any n
    cfg.cfar = cfar;
    return cfg;
}

const EdgeLattice& parity_lattice() {
    static EdgeLattice L = EdgeLattice::from_generators({{0, 3}, {2, 1}}, 2, 3);
    return L;
}

// Unordered view of the parts, for shape checks that should not depend on scan order.
std::set<std::vector<Vertex>> part_family(const OrderedPartition& P) {
    return {P.parts.begin(), P.parts.end()};
}

}  // namespace

TEST_CASE("is_soluble basic outcomes") {
    // Complete graph, trivial partition: the empty matching already works.
    Hypergraph K9 = hm::gen_complete(3, 9);
    FullPair triv{OrderedPartition{{K9.vertices()}}, hm::enumerate_full_lattices(1, 3)[0]};
    auto M = hm::is_soluble(K9, triv);
    REQUIRE(M.has_value());
    CHECK(M->edges.empty());

    // Parity barrier under its construction pair: insoluble.
    Hypergraph P = hm::gen_parity(3, 3, 6);
    FullPair pair{OrderedPartition{{{1, 2, 3}, {4, 5, 6, 7, 8, 9}}}, parity_lattice()};
    CHECK(hm::is_soluble(P, pair) == std::nullopt);
}

TEST_CASE("is_soluble returns the first witness in (size, edge-index) order") {
    // i(V) = (3,3) is off-lattice; only the second edge repairs the residue.
    Hypergraph H(6, 3, {{1, 2, 4}, {1, 4, 5}});
    FullPair pair{OrderedPartition{{{1, 2, 3}, {4, 5, 6}}}, parity_lattice()};
    auto M = hm::is_soluble(H, pair);
    REQUIRE(M.has_value());
    REQUIRE(M->edges.size() == 1);
    CHECK(M->edges[0] == Edge{1, 4, 5});
}

TEST_CASE("is_soluble agrees with the brute matching scan") {
    std::vector<Hypergraph> instances;
    instances.push_back(hm::gen_parity(3, 3, 6));
    instances.push_back(hm::gen_parity(3, 4, 8));
    instances.push_back(hm::gen_random_dense(3, 9, 3, 5));
    instances.push_back(hm::gen_random_dense(3, 12, 5, 6));

    for (const Hypergraph& H : instances) {
        // Trivial d = 1 pair plus both d = 2 lattices under a fixed bipartition.
        std::vector<FullPair> pairs;
        pairs.push_back({OrderedPartition{{H.vertices()}}, hm::enumerate_full_lattices(1, 3)[0]});
        std::vector<Vertex> lo(H.vertices().begin(), H.vertices().begin() + 3);
        std::vector<Vertex> hi(H.vertices().begin() + 3, H.vertices().end());
        for (const EdgeLattice& L : hm::enumerate_full_lattices(2, 3))
            pairs.push_back({OrderedPartition{{lo, hi}}, L});
        for (const FullPair& pair : pairs) {
            auto fast = hm::is_soluble(H, pair);
            CHECK(fast.has_value() == brute_soluble(H, pair));
            if (fast)
                for (const Edge& e : fast->edges) CHECK(H.has_edge(e));
        }
    }

    // A d = 3 case where two-edge matchings matter.
    Hypergraph M3 = hm::gen_mod3(4, 12);
    OrderedPartition abc{{{1, 2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11, 12}}};
    for (const EdgeLattice& L : hm::enumerate_full_lattices(3, 4)) {
        FullPair pair{abc, L};
        CHECK(hm::is_soluble(M3, pair).has_value() == brute_soluble(M3, pair));
    }
}

TEST_CASE("far_witness finds minimal hitting sets for off-lattice edges") {
    // One off-lattice edge {1,4,5}: the empty set no longer suffices.
    Hypergraph H(6, 3, {{1, 2, 4}, {1, 4, 5}});
    FullPair pair{OrderedPartition{{{1, 2, 3}, {4, 5, 6}}}, parity_lattice()};
    CHECK(hm::far_witness(H, pair, 0) == std::nullopt);
    auto w1 = hm::far_witness(H, pair, 1);
    REQUIRE(w1.has_value());
    CHECK(*w1 == std::vector<Vertex>{1});

    // All edges on-lattice: the empty witness.
    Hypergraph P = hm::gen_parity(3, 3, 6);
    FullPair ppair{OrderedPartition{{{1, 2, 3}, {4, 5, 6, 7, 8, 9}}}, parity_lattice()};
    auto w0 = hm::far_witness(P, ppair, 0);
    REQUIRE(w0.has_value());
    CHECK(w0->empty());

    // Mod-3 barrier: only the pivot vertex carries off-lattice edges.
    Hypergraph M3 = hm::gen_mod3(4, 12);
    OrderedPartition abc{{{1, 2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11, 12}}};
    EdgeLattice weighted = hm::edge_lattice(M3.remove_vertices(std::vector<Vertex>{1}),
                                            OrderedPartition{{{2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11, 12}}});
    // Use the lattice generated by the pivot-free edges, lifted to the full partition: the
    // pivot edges {1} u D fall outside it.
    EdgeLattice lifted = EdgeLattice::from_generators(weighted.generators(), 3, 4);
    FullPair mpair{abc, lifted};
    auto wm = hm::far_witness(M3, mpair, 2);
    REQUIRE(wm.has_value());
    CHECK(*wm == std::vector<Vertex>{1});
}

TEST_CASE("parity barrier certificate is pinned exactly") {
    Hypergraph H = hm::gen_parity(3, 3, 6);
    RunConfig cfg = asymptotic_config(0);
    hm::Decision dec = hm::decide_existence(H, cfg);
    CHECK(dec.mode == hm::DecisionMode::asymptotic);
    CHECK_FALSE(dec.pm_exists);
    REQUIRE(dec.certificate.has_value());
    const Certificate& cert = *dec.certificate;
    CHECK(cert.C == 0);
    CHECK(cert.far_set.empty());
    // The first full lattice in scan order is <(1,2),(0,6)>; only the (B, A) part order
    // sends every parity edge into it, so that is the partition the scan certifies with.
    CHECK(cert.partition.parts ==
          std::vector<std::vector<Vertex>>{{4, 5, 6, 7, 8, 9}, {1, 2, 3}});
    CHECK(cert.lattice.basis() == ZMat{{1, 2}, {0, 6}});
    CHECK(cert.refuted_matching_bound == 1);
    CHECK(hm::verify_certificate(H, cert));
}

TEST_CASE("mod-3 barrier certificate isolates the pivot") {
    Hypergraph H = hm::gen_mod3(4, 12);
    RunConfig cfg = asymptotic_config(1);
    hm::Decision dec = hm::decide_existence(H, cfg);
    CHECK_FALSE(dec.pm_exists);
    REQUIRE(dec.certificate.has_value());
    const Certificate& cert = *dec.certificate;
    CHECK(cert.far_set == std::vector<Vertex>{1});
    CHECK(cert.lattice.dim() == 3);
    CHECK(cert.refuted_matching_bound == 2);
    CHECK(hm::verify_certificate(H, cert));
    // The partition is the construction's (A, B, C) up to where the far vertex landed:
    // stripping vertex 1 must leave exactly {A \ {1}, B, C}.
    std::set<std::vector<Vertex>> stripped;
    for (auto part : cert.partition.parts) {
        part.erase(std::remove(part.begin(), part.end(), 1), part.end());
        stripped.insert(part);
    }
    std::set<std::vector<Vertex>> expected{
        {2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11, 12}};
    CHECK(stripped == expected);
}

TEST_CASE("non-divisible vertex count yields the divisibility certificate") {
    Hypergraph H = hm::gen_complete(3, 10);
    hm::Decision dec = hm::decide_existence(H, RunConfig{});
    CHECK(dec.mode == hm::DecisionMode::asymptotic);
    CHECK_FALSE(dec.pm_exists);
    REQUIRE(dec.certificate.has_value());
    CHECK(dec.certificate->far_set.empty());
    CHECK(dec.certificate->partition.dimension() == 1);
    CHECK(dec.certificate->lattice.basis() == ZMat{{3}});
    CHECK(dec.certificate->refuted_matching_bound == 0);
    CHECK(hm::verify_certificate(H, *dec.certificate));
}

TEST_CASE("verify_certificate rejects malformed certificates loudly") {
    Hypergraph H = hm::gen_parity(3, 3, 6);
    Certificate good = *hm::decide_existence(H, asymptotic_config(0)).certificate;

    Certificate bad = good;
    bad.C = -1;
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);

    bad = good;
    bad.far_set = {2, 1};
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);

    bad = good;
    bad.far_set = {99};
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);

    bad = good;
    bad.far_set = {1};  // exceeds the C = 0 budget it claims
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);

    bad = good;
    bad.refuted_matching_bound = 0;  // must equal dim - 1
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);

    bad = good;
    bad.partition.parts = {{1, 2}, {4, 5, 6, 7, 8, 9}};  // vertex 3 missing
    CHECK_THROWS_AS(hm::verify_certificate(H, bad), std::invalid_argument);
}

TEST_CASE("verify_certificate returns false on semantic failures") {
    Hypergraph H = hm::gen_parity(3, 3, 6);
    Certificate good = *hm::decide_existence(H, asymptotic_config(0)).certificate;
    CHECK(hm::verify_certificate(H, good));

    // Swapping a vertex across parts breaks coverage.
    Certificate swapped = good;
    swapped.partition.parts = {{1, 2, 4}, {3, 5, 6, 7, 8, 9}};
    CHECK_FALSE(hm::verify_certificate(H, swapped));

    // A non-full lattice is never a certificate lattice.
    Certificate lmax = good;
    lmax.lattice = EdgeLattice::from_generators(hm::sum_vectors(2, 3), 2, 3);
    CHECK_FALSE(hm::verify_certificate(H, lmax));

    // The right shape against the wrong instance: parity with |A| even is soluble.
    Hypergraph even = hm::gen_parity(3, 4, 8);
    Certificate shape;
    shape.C = 0;
    shape.far_set = {};
    shape.partition = OrderedPartition{{{1, 2, 3, 4}, {5, 6, 7, 8, 9, 10, 11, 12}}};
    shape.lattice = parity_lattice();
    shape.refuted_matching_bound = 1;
    CHECK_FALSE(hm::verify_certificate(even, shape));
}

TEST_CASE("decide_existence brute path on small instances") {
    hm::Decision dec = hm::decide_existence(hm::gen_complete(3, 6), RunConfig{});
    CHECK(dec.mode == hm::DecisionMode::brute);
    CHECK(dec.pm_exists);
    REQUIRE(dec.matching.has_value());
    CHECK(hm::is_perfect_matching(hm::gen_complete(3, 6), *dec.matching));

    hm::Decision no = hm::decide_existence(hm::gen_parity(3, 3, 6), RunConfig{});
    CHECK(no.mode == hm::DecisionMode::brute);
    CHECK_FALSE(no.pm_exists);
    CHECK_FALSE(no.certificate.has_value());
}

TEST_CASE("space barriers fall back to brute force instead of lying") {
    Hypergraph H = hm::gen_space_barrier(3, 9, 2);
    // No lattice certificate exists; the setup gate rejects the pm conclusion and the
    // decision drops to exact search.
    auto outcome = hm::certificate_search(H, asymptotic_config(0));
    CHECK_FALSE(outcome.certificate.has_value());

    hm::Decision dec = hm::decide_existence(H, asymptotic_config(0));
    CHECK(dec.mode == hm::DecisionMode::brute);
    CHECK_FALSE(dec.pm_exists);
    CHECK_FALSE(dec.certificate.has_value());

    RunConfig strict = asymptotic_config(0);
    strict.fallback_brute = false;
    CHECK_THROWS_AS(hm::decide_existence(H, strict), hm::DegenerateInput);
}

TEST_CASE("planted dense instances decide pm on the asymptotic path") {
    Hypergraph H = hm::gen_random_dense(3, 12, 7, /*seed=*/3, /*plant_pm=*/true);
    RunConfig cfg = asymptotic_config(0);
    hm::Decision dec = hm::decide_existence(H, cfg);
    CHECK(dec.mode == hm::DecisionMode::asymptotic);
    CHECK(dec.pm_exists);
    CHECK_FALSE(dec.certificate.has_value());
    // The asymptotic existence answer matches brute force.
    CHECK(hm::brute_force_pm(H).has_value());
}

TEST_CASE("exhausted brute budget raises a regime violation") {
    RunConfig cfg;
    cfg.brute_threshold = 100;
    cfg.brute_node_budget = 1;
    CHECK_THROWS_AS(hm::decide_existence(hm::gen_complete(3, 12), cfg), hm::RegimeViolation);
}

TEST_CASE("certificate search is deterministic across thread counts") {
    Hypergraph H = hm::gen_mod3(4, 12);
    RunConfig serial = asymptotic_config(1);
    RunConfig parallel = asymptotic_config(1);
    parallel.threads = 4;

    auto a = hm::certificate_search(H, serial);
    auto b = hm::certificate_search(H, parallel);
    REQUIRE(a.certificate.has_value());
    REQUIRE(b.certificate.has_value());
    CHECK(a.certificate->far_set == b.certificate->far_set);
    CHECK(a.certificate->partition == b.certificate->partition);
    CHECK(a.certificate->lattice == b.certificate->lattice);
    CHECK(a.stats.far_sets_examined == b.stats.far_sets_examined);
    CHECK(a.stats.listing_runs == b.stats.listing_runs);
    CHECK(a.stats.partitions_listed == b.stats.partitions_listed);
    CHECK(a.stats.extensions_checked == b.stats.extensions_checked);
    CHECK(a.stats.leaves_total == b.stats.leaves_total);
    CHECK(a.degenerate_skips == b.degenerate_skips);

    // Same determinism on an instance with no certificate at all.
    Hypergraph R = hm::gen_random_dense(3, 12, 7, 3, true);
    auto c = hm::certificate_search(R, serial);
    auto d = hm::certificate_search(R, parallel);
    CHECK_FALSE(c.certificate.has_value());
    CHECK_FALSE(d.certificate.has_value());
    CHECK(c.stats.far_sets_examined == d.stats.far_sets_examined);
    CHECK(c.stats.listing_runs == d.stats.listing_runs);
}

TEST_CASE("find_certificate insists on an exhaustive scan") {
    // Edgeless instance: no (k-1)-set can seed a listing, so every d >= 2 listing is
    // skipped and the absence of a certificate is not trustworthy.
    Hypergraph H(9, 3, {});
    CHECK_THROWS_AS(hm::find_certificate(H, asymptotic_config(0)), hm::DegenerateInput);

    // The space barrier is different: its listings complete (and discard everything),
    // so the scan is exhaustive and reports a clean miss.
    Hypergraph S = hm::gen_space_barrier(3, 9, 2);
    CHECK_FALSE(hm::find_certificate(S, asymptotic_config(0)).has_value());
}

TEST_CASE("part_family helper sanity") {
    OrderedPartition P{{{1, 2}, {3, 4}}};
    OrderedPartition Q{{{3, 4}, {1, 2}}};
    CHECK(part_family(P) == part_family(Q));
}
