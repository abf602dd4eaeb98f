// Throughput comparison of the codegree-table kernels: serial reference vs OpenMP.
// The two must agree bit-for-bit (checked here on every run); the point of the OpenMP
// variant is wall-clock only.
//
//   bench_kernels [threads ...]     default thread counts: 1 2 4

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hypermatch/construct.hpp"
#include "hypermatch/kernels.hpp"

namespace {

template <typename Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> thread_counts;
    for (int i = 1; i < argc; ++i) {
        int t = std::atoi(argv[i]);
        if (t >= 1) thread_counts.push_back(t);
    }
    if (thread_counts.empty()) thread_counts = {1, 2, 4};

    struct Shape {
        int k, n, codeg;
        std::uint64_t seed;
    };
    const Shape shapes[] = {{3, 60, 25, 1}, {3, 90, 35, 2}, {4, 40, 12, 3}, {5, 28, 8, 4}};

    std::printf("%-14s %8s %10s %10s %8s %9s\n", "instance", "edges", "serial_ms", "omp_ms",
                "threads", "speedup");
    for (const Shape& s : shapes) {
        hm::Hypergraph H = hm::gen_random_dense(s.k, s.n, s.codeg, s.seed);
        std::vector<long long> ref;
        double serial = best_of(3, [&] { ref = hm::kernels::codegree_table_serial(H); });
        for (int t : thread_counts) {
            std::vector<long long> par;
            double omp = best_of(3, [&] { par = hm::kernels::codegree_table_openmp(H, t); });
            if (par != ref) {
                std::fprintf(stderr, "kernel mismatch at k=%d n=%d threads=%d\n", s.k, s.n, t);
                return 1;
            }
            std::printf("k=%d n=%-3d      %8lld %10.3f %10.3f %8d %8.2fx\n", s.k, s.n,
                        static_cast<long long>(H.edge_count()), serial, omp, t, serial / omp);
        }
    }
    return 0;
}
