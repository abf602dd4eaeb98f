#include "hypermatch/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hm {

std::vector<Vertex> OrderedPartition::universe() const {
    std::vector<Vertex> all;
    for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    return all;
}

int OrderedPartition::part_of(Vertex v) const {
    for (int i = 0; i < dimension(); ++i)
        if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return i;
    return -1;
}

void OrderedPartition::validate() const {
    std::vector<Vertex> all;
    for (const auto& part : parts) {
        if (!std::is_sorted(part.begin(), part.end()))
            throw std::invalid_argument("partition part not sorted");
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("partition parts overlap");
}

std::vector<long long> index_vector(const OrderedPartition& P, std::span<const Vertex> S) {
    std::vector<long long> idx(P.dimension(), 0);
    for (Vertex v : S) {
        int p = P.part_of(v);
        if (p < 0) throw std::invalid_argument("index_vector: vertex outside the partition");
        ++idx[p];
    }
    return idx;
}

std::vector<long long> project(const std::vector<long long>& v, const OrderedPartition& fine,
                               const OrderedPartition& coarse) {
    if (static_cast<int>(v.size()) != fine.dimension())
        throw std::invalid_argument("project: vector length != fine dimension");
    if (fine.universe() != coarse.universe())
        throw std::invalid_argument("project: partitions cover different vertex sets");
    std::vector<long long> out(coarse.dimension(), 0);
    for (int x = 0; x < fine.dimension(); ++x) {
        if (fine.parts[x].empty()) continue;  // empty fine part contributes nowhere
        int w = coarse.part_of(fine.parts[x].front());
        for (Vertex u : fine.parts[x])
            if (coarse.part_of(u) != w)
                throw std::invalid_argument("project: fine part straddles coarse parts");
        out[w] += v[x];
    }
    return out;
}

}  // namespace hm
