#include "doctest.h"

#include <vector>

#include "hypermatch/partition.hpp"

using hm::OrderedPartition;
using hm::Vertex;

TEST_CASE("index_vector counts part hits in order") {
    OrderedPartition P{{{1, 2, 3}, {4, 5, 6, 7, 8, 9}}};
    CHECK(hm::index_vector(P, std::vector<Vertex>{1, 2, 4}) == std::vector<long long>{2, 1});
    CHECK(hm::index_vector(P, std::vector<Vertex>{4, 5, 6}) == std::vector<long long>{0, 3});
    CHECK(hm::index_vector(P, std::vector<Vertex>{}) == std::vector<long long>{0, 0});
    CHECK(hm::index_vector(P, P.universe()) == std::vector<long long>{3, 6});
    CHECK_THROWS_AS(hm::index_vector(P, std::vector<Vertex>{10}), std::invalid_argument);
}

TEST_CASE("part order matters") {
    OrderedPartition P{{{1, 2}, {3, 4}}};
    OrderedPartition Q{{{3, 4}, {1, 2}}};
    CHECK_FALSE(P == Q);
    CHECK(hm::index_vector(P, std::vector<Vertex>{1}) == std::vector<long long>{1, 0});
    CHECK(hm::index_vector(Q, std::vector<Vertex>{1}) == std::vector<long long>{0, 1});
}

TEST_CASE("part_of and universe") {
    OrderedPartition P{{{2, 5}, {1, 7}, {3}}};
    CHECK(P.dimension() == 3);
    CHECK(P.universe() == std::vector<Vertex>{1, 2, 3, 5, 7});
    CHECK(P.part_of(5) == 0);
    CHECK(P.part_of(1) == 1);
    CHECK(P.part_of(3) == 2);
    CHECK(P.part_of(4) == -1);
}

TEST_CASE("validate rejects unsorted and overlapping parts") {
    OrderedPartition ok{{{1, 2}, {3, 4}}};
    CHECK_NOTHROW(ok.validate());
    OrderedPartition unsorted{{{2, 1}, {3, 4}}};
    CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
    OrderedPartition overlapping{{{1, 2}, {2, 3}}};
    CHECK_THROWS_AS(overlapping.validate(), std::invalid_argument);
    OrderedPartition repeated{{{1, 1}}};
    CHECK_THROWS_AS(repeated.validate(), std::invalid_argument);
}

TEST_CASE("project sums fine coordinates into coarse parts") {
    OrderedPartition fine{{{1, 2}, {3}, {4, 5}}};
    OrderedPartition coarse{{{1, 2, 3}, {4, 5}}};
    CHECK(hm::project({2, 1, 2}, fine, coarse) == std::vector<long long>{3, 2});
    CHECK(hm::project({0, 0, 0}, fine, coarse) == std::vector<long long>{0, 0});

    // Identity coarsening.
    CHECK(hm::project({2, 1, 2}, fine, fine) == std::vector<long long>{2, 1, 2});

    // Straddling fine part: {3, 4} crosses both coarse parts.
    OrderedPartition bad_fine{{{1, 2}, {3, 4}, {5}}};
    CHECK_THROWS_AS(hm::project({1, 1, 1}, bad_fine, coarse), std::invalid_argument);

    // Different universes.
    OrderedPartition other{{{1, 2, 3}, {4, 6}}};
    CHECK_THROWS_AS(hm::project({1, 1, 1}, fine, other), std::invalid_argument);

    // Vector length must match the fine dimension.
    CHECK_THROWS_AS(hm::project({1, 1}, fine, coarse), std::invalid_argument);
}
