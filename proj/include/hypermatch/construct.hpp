#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hm {

// Complete k-uniform hypergraph on vertices 1..n.
Hypergraph gen_complete(int k, int n);

// Vertices 1..a+b with A = {1..a}; edges are the k-sets meeting A in an even number of
// vertices. With a odd there is no perfect matching: a matching covers A by even-sized
// chunks, but |A| is odd. Codegree is about n/2, far above n/k for k >= 3.
Hypergraph gen_parity(int k, int a, int b);

// Three parts A, B, C with |A| = |B| + 2 and all sizes within 2 of n/3. Edges: the k-sets e
// with |e cap A| = |e cap B| (mod 3), plus every {x} u D for the pivot x = vertex 1 in A and
// (k-1)-set D inside C. The extra edges through x kill the mod-3 divisibility barrier on any
// index-2 sublattice but one vertex cannot carry a matching; removing x restores the barrier.
// Requires k >= 3 and n >= 3k + 6.
Hypergraph gen_mod3(int k, int n);

// Nested parity barrier for k >= 5: parts V11, V12, V21, V22 with W1 = V11 u V12; edges are
// the k-sets meeting both W1 and V11 u V21 in an even number of vertices. No perfect matching
// when |W1| is even and |V11 u V21| is odd. `sizes` = {|V11|, |V12|, |V21|, |V22|}.
Hypergraph gen_nested(int k, const std::array<int, 4>& sizes);

// Smallest admissible nested instance for a given k (k = 5 gives sizes {3,3,2,2}, n = 10).
Hypergraph gen_nested_minimal(int k);

// Parts A_1..A_(k-1) with sizes within 2 of n/(k-1), |A_1| >= k(k-2) - 1, and
// sum_j j |A_j| = k - 2 (mod k-1). Edges: k-sets with weighted part-count sum divisible by
// k - 1, plus all k-sets inside B = the first k(k-2) - 1 vertices of A_1. No perfect matching,
// and B's vertices are the only ones carrying off-lattice edges, so far sets stay small.
Hypergraph gen_general_nopm(int k, int n);

// Smallest n divisible by k for which gen_general_nopm(k, n) is constructible.
int gen_general_nopm_min_n(int k);

// Space barrier: edges are the k-sets meeting S = {1..s}. Every matching retires at most s
// edges' worth of S, so s < n/k forbids a perfect matching for size reasons; no lattice
// certificate exists. Requires 1 <= s and s k < n.
Hypergraph gen_space_barrier(int k, int n, int s);

// Random k-uniform hypergraph on 1..n whose minimum (k-1)-set codegree is at least
// `min_codegree`. Samples edges at an increasing density, then patches any still-deficient
// (k-1)-set with its least missing extension. With plant_pm, the edges {1..k}, {k+1..2k}, ...
// are forced in, guaranteeing a perfect matching when k | n. Fully determined by the seed.
Hypergraph gen_random_dense(int k, int n, int min_codegree, std::uint64_t seed,
                            bool plant_pm = false);

}  // namespace hm
