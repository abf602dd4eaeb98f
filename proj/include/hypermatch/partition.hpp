#pragma once

#include <span>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hm {

// Ordered vertex partition: coordinates of index vectors refer to part positions, so the
// order matters and two partitions with swapped parts are distinct objects.
struct OrderedPartition {
    std::vector<std::vector<Vertex>> parts;  // each sorted ascending

    int dimension() const { return static_cast<int>(parts.size()); }
    std::vector<Vertex> universe() const;       // sorted union of the parts
    int part_of(Vertex v) const;                // 0-based part position, -1 if absent
    void validate() const;                      // sortedness + disjointness, throws invalid_argument

    bool operator==(const OrderedPartition& o) const { return parts == o.parts; }
    bool operator<(const OrderedPartition& o) const { return parts < o.parts; }
};

// i_P(S): how many vertices of S fall in each part. Throws invalid_argument when S is not
// contained in the union of the parts.
std::vector<long long> index_vector(const OrderedPartition& P, std::span<const Vertex> S);

// Projection of an index vector onto a coarsening: coordinate W of the result sums the
// coordinates of the fine parts contained in W. fine must refine coarse over the same
// universe; throws invalid_argument otherwise.
std::vector<long long> project(const std::vector<long long>& v, const OrderedPartition& fine,
                               const OrderedPartition& coarse);

}  // namespace hm
