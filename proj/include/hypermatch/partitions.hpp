#pragma once

#include <span>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/lattice.hpp"
#include "hypermatch/partition.hpp"
#include "hypermatch/rational.hpp"

namespace hm {

struct ListingOptions {
    // Propagate forced labels through a work queue of freshly assigned vertices instead of
    // rescanning every edge after each assignment. Both modes list the same partitions.
    bool use_queue = true;
    // Abandon a branch as soon as some fully assigned edge falls outside the lattice. Every
    // partition the branch could emit would fail the final on-lattice filter anyway.
    bool prune_off_lattice = true;
};

struct PartitionListing {
    std::vector<OrderedPartition> partitions;  // deduplicated, canonically sorted
    long long leaves = 0;                      // terminal branch states, emitted or not
};

// Unassigned vertices that are safe to branch on: x is reliable when some (k-2)-set B of
// already-assigned vertices has codegree d({x} u B) >= (1/k + gamma) n. `assigned` holds the
// vertices labelled so far.
std::vector<Vertex> reliable_vertices(const Hypergraph& H, std::span<const Vertex> assigned,
                                      const Rat& gamma);

// Lists every d-part ordered partition of V(H) into nonempty parts under which all edges of H
// have index vector in L, where d = L.dim(). L must be a full lattice. Branches d^(k-1) ways
// over the labels of a seed (k-1)-set of codegree >= (1/k + gamma) n, propagates forced labels
// (full lattices force a unique label through any edge with one unassigned vertex), and branches
// further only on reliable vertices. Throws DegenerateInput when no seed exists or when a branch
// stalls with no forced move and no reliable vertex.
PartitionListing list_partitions(const Hypergraph& H, const EdgeLattice& L, const Rat& gamma,
                                 const ListingOptions& opts = {});

}  // namespace hm
