#pragma once

#include <vector>

#include "hypermatch/hypergraph.hpp"

// Data-parallel statistics kernels. Every kernel has a serial reference implementation
// and an OpenMP variant; the pair must agree bit-for-bit (results are written by subset
// rank, so thread scheduling cannot reorder anything). Differential tests pin the
// equality and bench_kernels compares throughput.
namespace hm::kernels {

// Degrees of all (k-1)-subsets of vertices(), indexed by colex rank of position sets.
std::vector<long long> codegree_table_serial(const Hypergraph& H);
std::vector<long long> codegree_table_openmp(const Hypergraph& H, int threads);
std::vector<long long> codegree_table(const Hypergraph& H, int threads);

// Degrees of single vertices in vertices() order.
std::vector<long long> vertex_degree_table(const Hypergraph& H);

}  // namespace hm::kernels
