#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hypermatch/rational.hpp"

namespace hm {

// Vertices are 1-based labels and stay stable for the lifetime of an instance: deleting
// vertices produces a new Hypergraph over a subset of the labels, never a renumbering,
// so certificates and matchings always refer to the original input labels.
using Vertex = int;
using Edge = std::vector<Vertex>;  // sorted ascending, exactly k labels

struct Matching {
    std::vector<Edge> edges;  // pairwise disjoint, kept sorted lexicographically
};

class Hypergraph {
public:
    // Fresh instance on vertex set {1..n}.
    Hypergraph(int n, int k, std::vector<Edge> edges);
    // Instance over an explicit (already masked) label set.
    Hypergraph(std::vector<Vertex> vertices, int k, std::vector<Edge> edges);

    int uniformity() const { return k_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    bool has_vertex(Vertex v) const;
    int max_label() const { return max_label_; }

    const std::vector<Edge>& edges() const { return edges_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const Edge& edge(int idx) const { return edges_[idx]; }
    bool has_edge(std::span<const Vertex> e) const;  // e sorted, size k

    // Indices into edges() of all edges through v.
    const std::vector<int>& incident_edges(Vertex v) const;

    // Number of edges containing the set A (|A| <= k). d_H(A) in the usual notation.
    long long degree(std::span<const Vertex> A) const;

    // Position of a label within vertices(), -1 if absent.
    int position(Vertex v) const;

    Hypergraph remove_vertices(std::span<const Vertex> gone) const;
    Hypergraph remove_edge_vertices(const Edge& e) const { return remove_vertices(e); }

    bool operator==(const Hypergraph& o) const {
        return k_ == o.k_ && verts_ == o.verts_ && edges_ == o.edges_;
    }

private:
    int k_ = 0;
    int max_label_ = 0;
    std::vector<Vertex> verts_;           // sorted
    std::vector<int> pos_;                // label -> position in verts_, -1 when dead
    std::vector<Edge> edges_;             // sorted lexicographically, unique
    std::vector<uint64_t> edge_keys_;     // packed edges, same order (sorted)
    std::vector<std::vector<int>> inc_;   // label -> indices into edges_

    struct DefCache;
    mutable std::shared_ptr<DefCache> cache_;  // deficiency tables by gamma; copies share it

    friend const struct DeficiencyTable& deficiency_table(const Hypergraph&, const Rat&, int);
};

// Deficiency statistics of one instance at a fixed gamma. t is indexed by the colex rank
// of the (k-1)-subset of *positions* into vertices(); "positive" repeats the nonzero
// entries with their label sets in rank order for the removal-edge scan.
struct DeficiencyTable {
    Rat gamma;
    BigInt threshold;  // ceil((1/k+gamma) * n), the ceiling convention used everywhere
    std::vector<long long> t;
    BigInt chi1;        // sum of t^2
    Rat chi2;           // max(0, n^{k-1}/(3*k!) - delta1)
    long long delta1 = 0;        // minimum vertex degree
    long long min_codegree = 0;  // minimum (k-1)-set degree
    long long bad_codegree_count = 0;

    std::vector<Vertex> universe;  // vertices() of the instance the table was built from
    std::vector<std::pair<std::vector<Vertex>, long long>> positive;

    long long t_of(std::span<const Vertex> A) const;  // A sorted, |A| = k-1
};

// Computed lazily and cached per gamma on the instance (tables are immutable, copies of
// the graph share the cache). threads > 1 uses the OpenMP codegree kernel.
const DeficiencyTable& deficiency_table(const Hypergraph& H, const Rat& gamma, int threads = 1);

long long min_codegree(const Hypergraph& H, int threads = 1);

struct SetupReport {
    bool deg_ok = false;    // delta1 >= gamma * n^{k-1}
    bool codeg_ok = false;  // bad_count <= eps * n^{k-1}
    long long bad_count = 0;
    bool ok() const { return deg_ok && codeg_ok; }
};
SetupReport check_setup(const Hypergraph& H, const Rat& gamma, const Rat& eps, int threads = 1);

// M must consist of edges of H; throws std::invalid_argument otherwise (precondition).
bool is_perfect_matching(const Hypergraph& H, const Matching& M);

// Exact decision by depth-first search that always extends the lowest uncovered vertex,
// trying edges in lexicographic order; returns the lexicographically first perfect
// matching, or nullopt. Requires k | n.
std::optional<Matching> brute_force_pm(const Hypergraph& H);

enum class BruteStatus { found, none, budget_exhausted };
struct BruteResult {
    BruteStatus status = BruteStatus::none;
    std::optional<Matching> matching;
    long long nodes = 0;
};
BruteResult brute_force_pm_budgeted(const Hypergraph& H, long long node_budget);

// Size of a maximum matching, by branch-and-bound. Small instances only (test oracle).
int max_matching_size(const Hypergraph& H);

}  // namespace hm
