#include "hypermatch/construct.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "hypermatch/combin.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/kernels.hpp"

namespace hm {

namespace {

// Calls fn with each k-subset of {1..n} in lexicographic order.
template <typename Fn>
void for_each_kset(int n, int k, Fn&& fn) {
    if (k > n) return;
    std::vector<int> idx = first_combination(k);
    Edge e(static_cast<std::size_t>(k));
    do {
        for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = idx[i] + 1;
        fn(e);
    } while (next_combination(idx, n));
}

void check_kn(int k, int n) {
    if (k < 2 || k > 6) throw std::invalid_argument("uniformity must be between 2 and 6");
    if (n < k) throw std::invalid_argument("need at least k vertices");
}

int count_in_range(const Edge& e, int lo, int hi) {
    int c = 0;
    for (Vertex v : e) {
        if (v >= lo && v <= hi) ++c;
    }
    return c;
}

}  // namespace

Hypergraph gen_complete(int k, int n) {
    check_kn(k, n);
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) { edges.push_back(e); });
    return Hypergraph(n, k, edges);
}

Hypergraph gen_parity(int k, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
    int n = a + b;
    check_kn(k, n);
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        if (count_in_range(e, 1, a) % 2 == 0) edges.push_back(e);
    });
    return Hypergraph(n, k, edges);
}

Hypergraph gen_mod3(int k, int n) {
    check_kn(k, n);
    int b = (n - 2) / 3;
    int a = b + 2;
    int c = n - a - b;
    auto in_window = [&](int s) { return std::abs(3 * s - n) <= 6; };
    if (!in_window(a) || !in_window(b) || !in_window(c) || b < 1 || c < k - 1) {
        throw GenerationFailure("mod-3 barrier needs parts of size n/3 +- 2 with |C| >= k-1; "
                                "n = " + std::to_string(n) + " is too small");
    }
    // A = 1..a, B = a+1..a+b, C = a+b+1..n; the pivot is vertex 1.
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        int ca = count_in_range(e, 1, a);
        int cb = count_in_range(e, a + 1, a + b);
        if ((ca - cb) % 3 == 0) edges.push_back(e);
    });
    std::vector<int> idx = first_combination(k - 1);
    if (c >= k - 1) {
        do {
            Edge e(static_cast<std::size_t>(k));
            e[0] = 1;
            for (int i = 0; i < k - 1; ++i) {
                e[static_cast<std::size_t>(i) + 1] = a + b + 1 + idx[i];
            }
            edges.push_back(e);
        } while (next_combination(idx, c));
    }
    return Hypergraph(n, k, edges);
}

Hypergraph gen_nested(int k, const std::array<int, 4>& sizes) {
    if (k < 5) throw std::invalid_argument("nested parity barrier needs k >= 5");
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("all four parts must be nonempty");
    }
    int n = sizes[0] + sizes[1] + sizes[2] + sizes[3];
    check_kn(k, n);
    if ((sizes[0] + sizes[1]) % 2 != 0 || (sizes[0] + sizes[2]) % 2 != 1) {
        throw GenerationFailure("nested barrier needs |V11 u V12| even and |V11 u V21| odd");
    }
    // V11 = 1..s0, V12 next, then V21, V22.
    int w1_end = sizes[0] + sizes[1];
    int v21_end = w1_end + sizes[2];
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        int in_w1 = count_in_range(e, 1, w1_end);
        int in_inner = count_in_range(e, 1, sizes[0]) + count_in_range(e, w1_end + 1, v21_end);
        if (in_w1 % 2 == 0 && in_inner % 2 == 0) edges.push_back(e);
    });
    return Hypergraph(n, k, edges);
}

Hypergraph gen_nested_minimal(int k) {
    if (k < 5) throw std::invalid_argument("nested parity barrier needs k >= 5");
    int n = 2 * k;
    // Most balanced size profile first (lexicographically largest within a spread tier),
    // widening the allowed spread until the parity constraints admit a profile.
    for (int spread = 1; spread <= n; ++spread) {
        int hi = n / 4 + spread;
        std::array<int, 4> best{};
        bool found = false;
        for (int s0 = hi; s0 >= 1 && !found; --s0) {
            for (int s1 = hi; s1 >= 1 && !found; --s1) {
                for (int s2 = hi; s2 >= 1 && !found; --s2) {
                    int s3 = n - s0 - s1 - s2;
                    if (s3 < 1 || s3 > hi) continue;
                    int lo = std::min(std::min(s0, s1), std::min(s2, s3));
                    int top = std::max(std::max(s0, s1), std::max(s2, s3));
                    if (top - lo >= spread) continue;
                    if ((s0 + s1) % 2 != 0 || (s0 + s2) % 2 != 1) continue;
                    best = {s0, s1, s2, s3};
                    found = true;
                }
            }
        }
        if (found) return gen_nested(k, best);
    }
    throw GenerationFailure("no admissible nested size profile at n = " + std::to_string(n));
}

namespace {

// Part sizes for the general barrier: each within 2 of n/(k-1), the first at least
// k(k-2) - 1, weighted sum congruent to k-2 mod k-1. Sizes descend lexicographically so the
// first part is as large as possible.
std::optional<std::vector<int>> general_sizes(int k, int n) {
    int q = k - 1;
    int b = k * (k - 2) - 1;
    int lo = (n - 2 * q + q - 1) / q;  // ceil((n - 2q)/q)
    if (lo < 1) lo = 1;
    int hi = (n + 2 * q) / q;
    std::vector<int> sizes(static_cast<std::size_t>(q));
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (found) return;
        if (j == q) {
            if (left != 0) return;
            long long w = 0;
            for (int t = 0; t < q; ++t) w += static_cast<long long>(t + 1) * sizes[t];
            if ((w - (k - 2)) % q == 0) found = sizes;
            return;
        }
        int top = std::min(hi, left - (q - 1 - j) * lo);
        int bottom = j == 0 ? std::max(lo, b) : lo;
        for (int s = top; s >= bottom && !found; --s) {
            sizes[static_cast<std::size_t>(j)] = s;
            self(self, j + 1, left - s);
        }
    };
    rec(rec, 0, n);
    return found;
}

}  // namespace

Hypergraph gen_general_nopm(int k, int n) {
    if (k < 3) throw std::invalid_argument("general barrier needs k >= 3");
    check_kn(k, n);
    auto sizes = general_sizes(k, n);
    if (!sizes) {
        throw GenerationFailure("no admissible part sizes for the general barrier at n = " +
                                std::to_string(n));
    }
    int q = k - 1;
    std::vector<int> ends(static_cast<std::size_t>(q));
    int acc = 0;
    for (int j = 0; j < q; ++j) {
        acc += (*sizes)[static_cast<std::size_t>(j)];
        ends[static_cast<std::size_t>(j)] = acc;
    }
    int b = k * (k - 2) - 1;  // B = first b vertices of A_1
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        long long w = 0;
        int start = 1;
        for (int j = 0; j < q; ++j) {
            w += static_cast<long long>(j + 1) *
                 count_in_range(e, start, ends[static_cast<std::size_t>(j)]);
            start = ends[static_cast<std::size_t>(j)] + 1;
        }
        if (w % q == 0) {
            edges.push_back(e);
        } else if (e.back() <= b) {
            edges.push_back(e);  // every k-set inside B is an edge regardless of weight
        }
    });
    return Hypergraph(n, k, edges);
}

int gen_general_nopm_min_n(int k) {
    if (k < 3) throw std::invalid_argument("general barrier needs k >= 3");
    for (int n = k; n <= 1000; n += k) {
        if (general_sizes(k, n)) return n;
    }
    throw GenerationFailure("no admissible general-barrier size below n = 1000");
}

Hypergraph gen_space_barrier(int k, int n, int s) {
    check_kn(k, n);
    if (s < 1 || s * k >= n) {
        throw std::invalid_argument("space barrier needs 1 <= s and s k < n");
    }
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        if (e.front() <= s) edges.push_back(e);
    });
    return Hypergraph(n, k, edges);
}

Hypergraph gen_random_dense(int k, int n, int min_codegree, std::uint64_t seed,
                            bool plant_pm) {
    check_kn(k, n);
    if (min_codegree < 0) throw std::invalid_argument("codegree target must be non-negative");
    if (min_codegree > n - k + 1) {
        throw GenerationFailure("codegree target " + std::to_string(min_codegree) +
                                " exceeds the maximum n - k + 1 = " + std::to_string(n - k + 1));
    }
    if (plant_pm && n % k != 0) {
        throw std::invalid_argument("cannot plant a perfect matching unless k divides n");
    }

    // Base density: expected codegree a little above the target, so the patch-up loop below
    // has little to do. Threshold comparison against raw 64-bit draws keeps this exact.
    long long margin = 2 + n / 10;
    long long num = std::min<long long>(min_codegree + margin, n - k + 1);
    std::uint64_t threshold;
    if (num >= n - k + 1) {
        threshold = ~std::uint64_t{0};
    } else {
        threshold = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(num) << 64) / static_cast<unsigned>(n - k + 1));
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        if (rng() <= threshold) edges.push_back(e);
    });
    if (plant_pm) {
        for (int i = 0; i < n; i += k) {
            Edge e(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = i + j + 1;
            edges.push_back(e);
        }
    }

    // Patch pass: raise every deficient (k-1)-set to the target by adding its least missing
    // extension, first deficient set (colex order) first. Each pass adds at most one edge per
    // deficient set, so termination is immediate to see.
    Hypergraph H(n, k, edges);
    while (true) {
        std::vector<long long> table = kernels::codegree_table_serial(H);
        bool patched = false;
        for (long long r = 0; r < static_cast<long long>(table.size()); ++r) {
            if (table[static_cast<std::size_t>(r)] >= min_codegree) continue;
            std::vector<int> pos = colex_unrank(r, k - 1);
            Edge base(static_cast<std::size_t>(k) - 1);
            for (int i = 0; i < k - 1; ++i) {
                base[static_cast<std::size_t>(i)] = H.vertices()[pos[i]];
            }
            Edge probe(static_cast<std::size_t>(k));
            for (Vertex z : H.vertices()) {
                if (std::binary_search(base.begin(), base.end(), z)) continue;
                probe.assign(base.begin(), base.end());
                probe.insert(std::upper_bound(probe.begin(), probe.end(), z), z);
                if (!H.has_edge(probe)) {
                    edges.push_back(probe);
                    patched = true;
                    break;
                }
            }
            if (patched) break;
        }
        if (!patched) break;
        H = Hypergraph(n, k, edges);
    }
    return H;
}

}  // namespace hm
