#pragma once

#include <cstdint>
#include <vector>

namespace hm {

// Plain int64 binomials for ranking subsets; instance sizes keep these far from overflow
// (n stays in the low hundreds, r <= uniformity <= 8).
long long binom(long long n, long long r);

// Colex rank of an ascending index set: rank(c) = sum_i binom(c[i], i+1).
// Ranks enumerate all r-subsets of {0..n-1} as 0..binom(n,r)-1, which lets the
// parallel kernels write results by rank with no ordering races.
long long colex_rank(const std::vector<int>& combo);
std::vector<int> colex_unrank(long long rank, int r);

// Advances an ascending r-subset of {0..n-1} in lexicographic order; false at the end.
bool next_combination(std::vector<int>& combo, int n);

// First r-subset {0,1,...,r-1}; empty vector if r > n.
std::vector<int> first_combination(int r);

}  // namespace hm
