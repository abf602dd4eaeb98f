#pragma once

#include <cstdint>
#include <optional>

#include "hypermatch/rational.hpp"

namespace hm {

// Shared knobs for the decision pipeline. gamma and eps are exact rationals; eps must be
// a perfect square so that sqrt(eps) stays rational in the deficiency conditions.
struct RunConfig {
    Rat gamma = Rat(BigInt(1), BigInt(20));
    Rat eps = Rat(BigInt(1), BigInt(10000));
    std::optional<long long> cfar;        // far-set budget; default 2k(k-3)
    long long brute_threshold = -1;       // instances with n < threshold decide by brute force; -1 = auto
    int threads = 1;
    bool fallback_brute = true;           // drop to budgeted brute force when the regime breaks
    long long brute_node_budget = 200'000'000;
    uint64_t seed = 0;                    // generators only
};

// 2k(k-3), clamped at zero (k=3 allows only the empty far set).
long long default_cfar(int k);

long long resolved_cfar(const RunConfig& cfg, int k);

// Smallest multiple of k whose worst-case brute search tree exceeds the node budget;
// instances below it decide exactly. Deterministic in (k, budget) only.
long long auto_brute_threshold(int k, long long node_budget);

long long resolved_brute_threshold(const RunConfig& cfg, int k);

// sqrt(eps) or invalid-argument when eps is not a perfect square of a rational.
Rat sqrt_eps_or_throw(const Rat& eps);

}  // namespace hm
