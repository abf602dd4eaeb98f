#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "hypermatch/combin.hpp"
#include "hypermatch/construct.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/hypergraph.hpp"

using hm::Edge;
using hm::Hypergraph;
using hm::Vertex;

namespace {

// All k-subsets of 1..n passing a predicate: the definitional edge-set oracle.
template <typename Pred>
std::vector<Edge> filtered_ksets(int k, int n, Pred pred) {
    std::vector<Edge> out;
    std::vector<int> combo = hm::first_combination(k);
    do {
        Edge e(combo.begin(), combo.end());
        for (Vertex& v : e) ++v;
        if (pred(e)) out.push_back(e);
    } while (hm::next_combination(combo, n));
    return out;
}

int count_in(const Edge& e, int lo, int hi) {
    int c = 0;
    for (Vertex v : e) c += (v >= lo && v <= hi) ? 1 : 0;
    return c;
}

}  // namespace

TEST_CASE("gen_complete has every k-set") {
    Hypergraph H = hm::gen_complete(3, 7);
    CHECK(H.edge_count() == hm::binom(7, 3));
    CHECK(H.vertex_count() == 7);
    CHECK_THROWS_AS(hm::gen_complete(3, 2), std::invalid_argument);
}

TEST_CASE("gen_parity edges meet A evenly; odd |A| blocks matchings") {
    Hypergraph H = hm::gen_parity(3, 3, 6);
    auto expected = filtered_ksets(3, 9, [](const Edge& e) { return count_in(e, 1, 3) % 2 == 0; });
    CHECK(H.edges() == expected);
    CHECK(H.edge_count() == 38);  // C(6,3) + C(3,2) * 6
    CHECK(hm::brute_force_pm(H) == std::nullopt);

    // Even |A| restores matchings.
    Hypergraph even = hm::gen_parity(3, 4, 8);
    CHECK(hm::brute_force_pm(even).has_value());
}

TEST_CASE("gen_mod3 matches its definitional edge set") {
    Hypergraph H = hm::gen_mod3(4, 12);
    // Sizes (|A|,|B|,|C|) = (5,3,4) with the pivot x = 1.
    auto family = filtered_ksets(4, 12, [](const Edge& e) {
        int a = count_in(e, 1, 5), b = count_in(e, 6, 8), c = count_in(e, 9, 12);
        bool mod3 = (a - b) % 3 == 0;
        bool pivot = std::find(e.begin(), e.end(), 1) != e.end() && a == 1 && b == 0 && c == 3;
        return mod3 || pivot;
    });
    CHECK(H.edges() == family);
    CHECK(hm::brute_force_pm(H) == std::nullopt);
    // Spending a pivot edge does not help: the eight leftover vertices have residue
    // totals (4,3,1) over (A,B,C) and no two mod-3 edges can sum to that.
    CHECK(hm::brute_force_pm_budgeted(H.remove_vertices(std::vector<Vertex>{1, 9, 10, 11}),
                                      10'000'000)
              .status == hm::BruteStatus::none);
    CHECK_THROWS_AS(hm::gen_mod3(3, 5), hm::GenerationFailure);  // |C| < k-1
}

TEST_CASE("gen_nested edge predicate and minimal profile") {
    Hypergraph H = hm::gen_nested_minimal(5);
    CHECK(H.vertex_count() == 10);
    CHECK(H == hm::gen_nested(5, {3, 3, 2, 2}));
    // W1 = V11 u V12 = {1..6}; inner = V11 u V21 = {1,2,3,7,8}.
    auto expected = filtered_ksets(5, 10, [](const Edge& e) {
        int w1 = count_in(e, 1, 6);
        int inner = count_in(e, 1, 3) + count_in(e, 7, 8);
        return w1 % 2 == 0 && inner % 2 == 0;
    });
    CHECK(H.edges() == expected);
    CHECK(hm::brute_force_pm(H) == std::nullopt);

    CHECK_THROWS_AS(hm::gen_nested(4, {3, 3, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(hm::gen_nested(5, {2, 4, 2, 2}), hm::GenerationFailure);  // inner even
    CHECK_THROWS_AS(hm::gen_nested(5, {3, 2, 2, 2}), hm::GenerationFailure);  // W1 odd
}

TEST_CASE("gen_general_nopm minimal instances") {
    CHECK(hm::gen_general_nopm_min_n(4) == 16);
    Hypergraph H = hm::gen_general_nopm(4, 16);
    CHECK(H.vertex_count() == 16);
    // Parts (7,5,4); B = first k(k-2)-1 = 7 vertices; weights 1,2,3 mod 3.
    auto expected = filtered_ksets(4, 16, [](const Edge& e) {
        int a1 = count_in(e, 1, 7), a2 = count_in(e, 8, 12), a3 = count_in(e, 13, 16);
        bool lattice = (a1 + 2 * a2 + 3 * a3) % 3 == 0;
        bool inside_b = count_in(e, 1, 7) == 4;
        return lattice || inside_b;
    });
    CHECK(H.edges() == expected);
    auto brute = hm::brute_force_pm_budgeted(H, 100'000'000);
    CHECK(brute.status == hm::BruteStatus::none);

    // k = 3 degenerates to a parity-style barrier on six vertices.
    CHECK(hm::gen_general_nopm_min_n(3) == 6);
    Hypergraph G3 = hm::gen_general_nopm(3, 6);
    CHECK(hm::brute_force_pm(G3) == std::nullopt);
}

TEST_CASE("gen_space_barrier blocks matchings by size, not divisibility") {
    Hypergraph H = hm::gen_space_barrier(3, 9, 2);
    CHECK(H.edge_count() == hm::binom(9, 3) - hm::binom(7, 3));
    for (const Edge& e : H.edges()) CHECK(count_in(e, 1, 2) >= 1);
    CHECK(hm::brute_force_pm(H) == std::nullopt);
    CHECK(hm::max_matching_size(H) == 2);

    CHECK_THROWS_AS(hm::gen_space_barrier(3, 9, 3), std::invalid_argument);  // s k = n
    CHECK_THROWS_AS(hm::gen_space_barrier(3, 9, 0), std::invalid_argument);
}

TEST_CASE("gen_random_dense meets its codegree target deterministically") {
    Hypergraph a = hm::gen_random_dense(3, 12, 6, 101);
    CHECK(hm::min_codegree(a) >= 6);
    CHECK(a == hm::gen_random_dense(3, 12, 6, 101));

    // Seeds matter: at least one of a few nearby seeds differs.
    bool any_different = false;
    for (std::uint64_t s : {102, 103, 104})
        any_different = any_different || !(hm::gen_random_dense(3, 12, 6, s) == a);
    CHECK(any_different);

    Hypergraph b = hm::gen_random_dense(4, 12, 4, 55);
    CHECK(hm::min_codegree(b) >= 4);

    // Maximum achievable codegree is n - k + 1.
    CHECK_THROWS_AS(hm::gen_random_dense(3, 12, 11, 1), hm::GenerationFailure);
    Hypergraph full = hm::gen_random_dense(3, 9, 7, 1);
    CHECK(hm::min_codegree(full) == 7);
}

TEST_CASE("planted matchings really are matchings") {
    Hypergraph H = hm::gen_random_dense(3, 12, 5, 7, /*plant_pm=*/true);
    hm::Matching planted;
    for (int i = 0; i < 4; ++i) planted.edges.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
    CHECK(hm::is_perfect_matching(H, planted));
    CHECK_THROWS_AS(hm::gen_random_dense(3, 10, 4, 7, true), std::invalid_argument);  // 3 does not divide 10
}
