#include "hypermatch/config.hpp"

#include <stdexcept>

#include "hypermatch/combin.hpp"

namespace hm {

long long default_cfar(int k) {
    long long c = 2LL * k * (k - 3);
    return c < 0 ? 0 : c;
}

long long resolved_cfar(const RunConfig& cfg, int k) {
    if (cfg.cfar) {
        if (*cfg.cfar < 0) throw std::invalid_argument("far-set budget must be non-negative");
        return *cfg.cfar;
    }
    return default_cfar(k);
}

long long auto_brute_threshold(int k, long long node_budget) {
    if (node_budget <= 0) return k;  // forces the asymptotic path everywhere
    // Worst case for the lowest-vertex-first search on n vertices: the root branches over
    // all C(n-1, k-1) edges through vertex 1, the next level over C(n-k-1, k-1), and so on.
    for (long long n = k;; n += k) {
        BigInt nodes = 1;
        for (long long used = 0; used < n; used += k) {
            nodes *= binom(n - used - 1, k - 1);
            if (nodes > node_budget) break;
        }
        if (nodes > node_budget) return n;
        if (n > 1000) return n;  // unreachable for real budgets; keeps the loop total
    }
}

long long resolved_brute_threshold(const RunConfig& cfg, int k) {
    if (cfg.brute_threshold >= 0) return cfg.brute_threshold;
    return auto_brute_threshold(k, cfg.brute_node_budget);
}

Rat sqrt_eps_or_throw(const Rat& eps) {
    if (eps <= Rat(0)) throw std::invalid_argument("eps must be positive");
    auto root = exact_sqrt(eps);
    if (!root) throw std::invalid_argument("eps must be a perfect square of a rational");
    return *root;
}

}  // namespace hm
