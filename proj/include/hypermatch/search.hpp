#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermatch/config.hpp"
#include "hypermatch/decide.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hm {

// One edge removal performed by the extraction loop.
struct RemovalEvent {
    int n_before = 0;
    int rule = 0;                 // 1: low-degree vertex repair, 2: deficiency-weighted pick
    Edge edge;
    std::string chi1;             // deficiency potentials before the removal
    std::string chi2;
    bool conditions_after_ok = false;
};

struct SearchReport {
    std::vector<RemovalEvent> removals;
    long long fallbacks = 0;      // times the loop dropped to exact search
    long long safety_checks = 0;  // decide_existence calls made while vetting edges
    std::vector<std::string> notes;
};

// Both invariants the removal loop maintains:
//   (i)  chi1 < eps gamma^2 n^(k+1) / 4 + 3 k n^k
//   (ii) chi2 + chi1 / (sqrt(eps) gamma^2 n^2) < sqrt(eps) n^(k-1)
// `why` (optional) receives a human-readable account of the first violated condition.
bool deficiency_conditions_hold(const Hypergraph& H, const Rat& gamma, const Rat& eps,
                                int threads, std::string* why = nullptr);

// An edge is safe when the hypergraph minus its vertices still has a perfect matching.
// Returns the safe edges in edge order; each check runs the full decision procedure on the
// reduced instance.
std::vector<Edge> safe_edges(const Hypergraph& H, const RunConfig& cfg);

struct RemovalChoice {
    Edge edge;
    int rule = 0;
};

// Picks the next edge to remove, keeping conditions (i) and (ii) intact:
//   chi2 > 0  -> first safe edge through a vertex of degree at most n^(k-1) / (3 k!);
//   otherwise -> first safe edge e with
//       sum_A ( 2 t_A (|H(A) cap e| - 1 - k gamma) - |A cap e| t_A^2 ) <= -k(k+1) chi1 / n,
// where t_A are the codegree deficiencies and the sum runs over deficient (k-1)-sets A.
// Throws RegimeViolation when no qualifying safe edge exists.
RemovalChoice find_removal_edge(const Hypergraph& H, const RunConfig& cfg,
                                SearchReport* report = nullptr);

// Full pipeline: decide existence, then extract a perfect matching by repeated safe-edge
// removal, finishing each instance below the brute threshold exactly. Falls back to budgeted
// exact search when the deficiency regime breaks (counted in the report). The returned
// matching, when present, is verified against H before returning.
Decision find_pm(const Hypergraph& H, const RunConfig& cfg, SearchReport* report = nullptr);

}  // namespace hm
