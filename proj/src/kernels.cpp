#include "hypermatch/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypermatch/combin.hpp"

namespace hm::kernels {

namespace {

// Colex successor of an ascending position set within {0..n-1}.
bool colex_next(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    for (int i = 0; i < r; ++i) {
        int ceiling = (i + 1 < r) ? c[i + 1] : n;
        if (c[i] + 1 < ceiling) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

long long degree_of_positions(const Hypergraph& H, const std::vector<int>& combo,
                              std::vector<Vertex>& scratch) {
    scratch.clear();
    for (int p : combo) scratch.push_back(H.vertices()[p]);
    return H.degree(scratch);
}

void fill_block(const Hypergraph& H, std::vector<long long>& out, long long lo, long long hi) {
    if (lo >= hi) return;
    const int r = H.uniformity() - 1;
    std::vector<int> combo = colex_unrank(lo, r);
    std::vector<Vertex> scratch;
    scratch.reserve(r);
    for (long long rank = lo; rank < hi; ++rank) {
        out[rank] = degree_of_positions(H, combo, scratch);
        if (rank + 1 < hi) colex_next(combo, H.vertex_count());
    }
}

}  // namespace

std::vector<long long> codegree_table_serial(const Hypergraph& H) {
    const int n = H.vertex_count();
    const int r = H.uniformity() - 1;
    const long long total = binom(n, r);
    std::vector<long long> out(total, 0);
    fill_block(H, out, 0, total);
    return out;
}

std::vector<long long> codegree_table_openmp(const Hypergraph& H, int threads) {
    const int n = H.vertex_count();
    const int r = H.uniformity() - 1;
    const long long total = binom(n, r);
    std::vector<long long> out(total, 0);
#ifdef _OPENMP
    const int nt = std::max(1, threads);
    const long long block = (total + nt - 1) / nt;
#pragma omp parallel num_threads(nt)
    {
        const int tid = omp_get_thread_num();
        const long long lo = tid * block;
        const long long hi = std::min(total, lo + block);
        fill_block(H, out, lo, hi);
    }
#else
    (void)threads;
    fill_block(H, out, 0, total);
#endif
    return out;
}

std::vector<long long> codegree_table(const Hypergraph& H, int threads) {
    if (threads > 1) return codegree_table_openmp(H, threads);
    return codegree_table_serial(H);
}

std::vector<long long> vertex_degree_table(const Hypergraph& H) {
    std::vector<long long> out;
    out.reserve(H.vertex_count());
    for (Vertex v : H.vertices()) out.push_back(static_cast<long long>(H.incident_edges(v).size()));
    return out;
}

}  // namespace hm::kernels
