#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermatch/config.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/lattice.hpp"
#include "hypermatch/partition.hpp"

namespace hm {

struct FullPair {
    OrderedPartition partition;
    EdgeLattice lattice;
};

// Witness that no perfect matching exists: removing far_set leaves a hypergraph whose edges
// all index into `lattice` under `partition`, and no matching of at most refuted_matching_bound
// edges can shift the leftover index vector into the lattice.
struct Certificate {
    long long C = 0;                      // far-set budget the search ran under
    std::vector<Vertex> far_set;          // sorted; the removed vertices
    OrderedPartition partition;           // of the full vertex set
    EdgeLattice lattice;
    long long refuted_matching_bound = 0; // = lattice.dim() - 1
};

// Searches for a matching M with |M| <= partition-dimension - 1 edges such that the index
// vector of the uncovered vertices lies in the lattice. Returns the first such matching in
// (size, edge-index-tuple) order, or nullopt when the pair is insoluble.
std::optional<Matching> is_soluble(const Hypergraph& H, const FullPair& pair);

// Smallest vertex set S with |S| <= C meeting every edge whose index vector falls outside the
// lattice, or nullopt when no such set exists within the budget. H must have vertex set equal
// to the partition's universe.
std::optional<std::vector<Vertex>> far_witness(const Hypergraph& H, const FullPair& pair,
                                               long long C);

struct CertificateSearchStats {
    long long far_sets_examined = 0;
    long long listing_runs = 0;
    long long partitions_listed = 0;
    long long extensions_checked = 0;
    long long leaves_total = 0;
};

struct CertificateSearchOutcome {
    std::optional<Certificate> certificate;
    long long degenerate_skips = 0;        // listings abandoned for want of density
    std::vector<std::string> skip_notes;
    CertificateSearchStats stats;
};

// Scans candidate far sets S (by size, then lexicographically), full lattices L of each
// dimension d in 1..k-1, and every partition of V(H) - S listed under L, extended over S in
// all d^|S| ways; reports the first insoluble full pair found. Deterministic for any thread
// count: parallel chunks resolve in canonical order.
CertificateSearchOutcome certificate_search(const Hypergraph& H, const RunConfig& cfg);

// certificate_search, but a degenerate skip with no certificate found is an error: the scan
// was not exhaustive, so "no certificate" cannot be trusted.
std::optional<Certificate> find_certificate(const Hypergraph& H, const RunConfig& cfg);

// Checks a certificate against H from scratch: structural sanity, fullness of the lattice,
// coverage (every edge avoiding far_set indexes into the lattice), and insolubility up to
// refuted_matching_bound. Throws invalid_argument on malformed input (wrong universe,
// mismatched dimensions, bound not dim-1); returns false when well-formed but not a valid
// witness against H.
bool verify_certificate(const Hypergraph& H, const Certificate& cert);

enum class DecisionMode { brute, asymptotic };

struct Decision {
    DecisionMode mode = DecisionMode::brute;
    bool pm_exists = false;
    std::optional<Matching> matching;      // populated on the brute path or after extraction
    std::optional<Certificate> certificate;
};

// Perfect-matching existence. Small instances (n below the resolved brute threshold) decide
// exactly; otherwise a certificate search settles the question, with a budgeted brute-force
// fallback when the instance is too sparse for the listing machinery (cfg.fallback_brute).
// Requires k | n; throws RegimeViolation when every applicable method is exhausted.
Decision decide_existence(const Hypergraph& H, const RunConfig& cfg);

const char* to_string(DecisionMode mode);

}  // namespace hm
