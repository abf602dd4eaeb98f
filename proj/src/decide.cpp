#include "hypermatch/decide.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <utility>

#include "hypermatch/combin.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/partitions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hm {

namespace {

void check_pair_shape(const Hypergraph& H, const FullPair& pair) {
    pair.partition.validate();
    if (pair.partition.universe() != H.vertices()) {
        throw std::invalid_argument("partition does not cover the vertex set");
    }
    if (pair.lattice.dim() != pair.partition.dimension()) {
        throw std::invalid_argument("lattice dimension does not match partition dimension");
    }
    if (pair.lattice.uniformity() != H.uniformity()) {
        throw std::invalid_argument("lattice uniformity does not match hypergraph");
    }
}

struct SolubilitySearch {
    const Hypergraph& H;
    const EdgeLattice& L;
    std::vector<ZVec> edge_vecs;
    ZVec target;                       // index vector of the full vertex set
    std::vector<char> used;            // by vertex label
    std::vector<int> chosen;
    ZVec acc;

    bool residual_in_lattice() const {
        ZVec residual(target.size());
        for (std::size_t t = 0; t < target.size(); ++t) residual[t] = target[t] - acc[t];
        return L.contains(residual);
    }

    bool dfs(std::size_t want, int from) {
        if (chosen.size() == want) return residual_in_lattice();
        for (int e = from; e < H.edge_count(); ++e) {
            const Edge& edge = H.edge(e);
            bool free = true;
            for (Vertex v : edge) {
                if (used[static_cast<std::size_t>(v)]) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            for (Vertex v : edge) used[static_cast<std::size_t>(v)] = 1;
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += edge_vecs[e][t];
            chosen.push_back(e);
            if (dfs(want, e + 1)) return true;
            chosen.pop_back();
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] -= edge_vecs[e][t];
            for (Vertex v : edge) used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

struct EvalResult {
    std::optional<Certificate> certificate;
    CertificateSearchStats stats;
    long long skips = 0;
    std::vector<std::string> notes;
};

std::string join_labels(std::span<const Vertex> vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    out += "}";
    return out;
}

// Every (partition, lattice) pair reachable from one candidate far set, in canonical order:
// dimension ascending, lattice order within the dimension, listed partitions in sorted order,
// far-set placements in mixed-radix order (first far vertex most significant).
EvalResult eval_far_set(const Hypergraph& H, const std::vector<Vertex>& S, long long C,
                        const std::vector<std::vector<EdgeLattice>>& lattices_by_dim,
                        const Rat& gamma) {
    EvalResult res;
    ++res.stats.far_sets_examined;
    Hypergraph rest = H.remove_vertices(S);
    int k = H.uniformity();
    for (int d = 1; d <= k - 1; ++d) {
        for (std::size_t li = 0; li < lattices_by_dim[static_cast<std::size_t>(d) - 1].size();
             ++li) {
            const EdgeLattice& L = lattices_by_dim[static_cast<std::size_t>(d) - 1][li];
            ++res.stats.listing_runs;
            PartitionListing listing;
            try {
                listing = list_partitions(rest, L, gamma);
            } catch (const DegenerateInput& ex) {
                ++res.skips;
                res.notes.push_back("S=" + join_labels(S) + " d=" + std::to_string(d) +
                                    " lattice#" + std::to_string(li) + ": " + ex.what());
                continue;
            }
            res.stats.leaves_total += listing.leaves;
            for (const OrderedPartition& base : listing.partitions) {
                ++res.stats.partitions_listed;
                long long placements = 1;
                for (std::size_t i = 0; i < S.size(); ++i) placements *= d;
                for (long long code = 0; code < placements; ++code) {
                    ++res.stats.extensions_checked;
                    auto parts = base.parts;
                    long long digits = code;
                    for (std::size_t i = S.size(); i-- > 0;) {
                        auto& part = parts[static_cast<std::size_t>(digits % d)];
                        part.insert(std::lower_bound(part.begin(), part.end(), S[i]), S[i]);
                        digits /= d;
                    }
                    FullPair pair{OrderedPartition(std::move(parts)), L};
                    if (!is_soluble(H, pair)) {
                        res.certificate = Certificate{C, S, std::move(pair.partition), L, d - 1};
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

void accumulate(CertificateSearchOutcome& out, const EvalResult& item) {
    out.stats.far_sets_examined += item.stats.far_sets_examined;
    out.stats.listing_runs += item.stats.listing_runs;
    out.stats.partitions_listed += item.stats.partitions_listed;
    out.stats.extensions_checked += item.stats.extensions_checked;
    out.stats.leaves_total += item.stats.leaves_total;
    out.degenerate_skips += item.skips;
    constexpr std::size_t kNoteCap = 32;
    for (const auto& note : item.notes) {
        if (out.skip_notes.size() < kNoteCap) out.skip_notes.push_back(note);
    }
}

Decision brute_decision(const Hypergraph& H, const RunConfig& cfg) {
    BruteResult r = brute_force_pm_budgeted(H, cfg.brute_node_budget);
    if (r.status == BruteStatus::budget_exhausted) {
        throw RegimeViolation("brute-force node budget exhausted at n=" +
                              std::to_string(H.vertex_count()));
    }
    Decision dec;
    dec.mode = DecisionMode::brute;
    dec.pm_exists = (r.status == BruteStatus::found);
    dec.matching = r.matching;
    return dec;
}

}  // namespace

std::optional<Matching> is_soluble(const Hypergraph& H, const FullPair& pair) {
    check_pair_shape(H, pair);
    int d = pair.lattice.dim();
    SolubilitySearch search{H, pair.lattice, {}, {}, {}, {}, {}};
    search.edge_vecs.reserve(static_cast<std::size_t>(H.edge_count()));
    for (int e = 0; e < H.edge_count(); ++e) {
        search.edge_vecs.push_back(index_vector(pair.partition, H.edge(e)));
    }
    search.target = index_vector(pair.partition, H.vertices());
    search.used.assign(static_cast<std::size_t>(H.max_label()) + 1, 0);
    search.acc.assign(static_cast<std::size_t>(d), 0);
    for (int want = 0; want <= d - 1; ++want) {
        if (search.dfs(static_cast<std::size_t>(want), 0)) {
            Matching m;
            for (int e : search.chosen) m.edges.push_back(H.edge(e));
            return m;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> far_witness(const Hypergraph& H, const FullPair& pair,
                                               long long C) {
    check_pair_shape(H, pair);
    if (C < 0) throw std::invalid_argument("far-set budget must be non-negative");
    std::vector<const Edge*> off;
    for (int e = 0; e < H.edge_count(); ++e) {
        if (!pair.lattice.contains(index_vector(pair.partition, H.edge(e)))) {
            off.push_back(&H.edge(e));
        }
    }
    std::vector<Vertex> hit;
    auto uncovered = [&]() -> const Edge* {
        for (const Edge* e : off) {
            bool met = false;
            for (Vertex v : *e) {
                if (std::find(hit.begin(), hit.end(), v) != hit.end()) {
                    met = true;
                    break;
                }
            }
            if (!met) return e;
        }
        return nullptr;
    };
    // Iterative deepening keeps the returned witness minimum-size.
    std::function<bool(long long)> dfs = [&](long long left) -> bool {
        const Edge* e = uncovered();
        if (!e) return true;
        if (left == 0) return false;
        for (Vertex v : *e) {
            hit.push_back(v);
            if (dfs(left - 1)) return true;
            hit.pop_back();
        }
        return false;
    };
    for (long long t = 0; t <= C; ++t) {
        hit.clear();
        if (dfs(t)) {
            std::sort(hit.begin(), hit.end());
            hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
            return hit;
        }
    }
    return std::nullopt;
}

CertificateSearchOutcome certificate_search(const Hypergraph& H, const RunConfig& cfg) {
    int k = H.uniformity();
    int n = H.vertex_count();
    long long C = resolved_cfar(cfg, k);
    Rat gamma = cfg.gamma;
    if (gamma <= Rat(0)) throw std::invalid_argument("gamma must be positive");

    std::vector<std::vector<EdgeLattice>> lattices_by_dim;
    for (int d = 1; d <= k - 1; ++d) lattices_by_dim.push_back(enumerate_full_lattices(d, k));

    CertificateSearchOutcome out;
    const std::vector<Vertex>& verts = H.vertices();
    long long max_size = std::min<long long>(C, n);
    std::size_t chunk_target = cfg.threads > 1 ? static_cast<std::size_t>(cfg.threads) * 8 : 1;

    for (long long s = 0; s <= max_size; ++s) {
        std::vector<int> idx = first_combination(static_cast<int>(s));
        bool more = true;
        while (more) {
            std::vector<std::vector<Vertex>> chunk;
            while (more && chunk.size() < chunk_target) {
                std::vector<Vertex> S(static_cast<std::size_t>(s));
                for (long long i = 0; i < s; ++i) S[static_cast<std::size_t>(i)] = verts[idx[i]];
                chunk.push_back(std::move(S));
                more = s > 0 && next_combination(idx, n);
                if (s == 0) more = false;
            }
            std::vector<EvalResult> results(chunk.size());
            std::vector<std::exception_ptr> errors(chunk.size());
#ifdef _OPENMP
            if (cfg.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads)
                for (std::size_t i = 0; i < chunk.size(); ++i) {
                    try {
                        results[i] = eval_far_set(H, chunk[i], C, lattices_by_dim, gamma);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            } else
#endif
            {
                for (std::size_t i = 0; i < chunk.size(); ++i) {
                    try {
                        results[i] = eval_far_set(H, chunk[i], C, lattices_by_dim, gamma);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            }
            for (std::size_t i = 0; i < chunk.size(); ++i) {
                if (errors[i]) std::rethrow_exception(errors[i]);
                accumulate(out, results[i]);
                if (results[i].certificate) {
                    out.certificate = std::move(results[i].certificate);
                    return out;
                }
            }
        }
    }
    return out;
}

std::optional<Certificate> find_certificate(const Hypergraph& H, const RunConfig& cfg) {
    CertificateSearchOutcome out = certificate_search(H, cfg);
    if (out.certificate) return out.certificate;
    if (out.degenerate_skips > 0) {
        std::string detail = out.skip_notes.empty() ? std::string("(no notes)")
                                                    : out.skip_notes.front();
        throw DegenerateInput("certificate search skipped " +
                              std::to_string(out.degenerate_skips) +
                              " listings and found nothing; first skip: " + detail);
    }
    return std::nullopt;
}

bool verify_certificate(const Hypergraph& H, const Certificate& cert) {
    if (cert.C < 0) throw std::invalid_argument("certificate has negative far-set budget");
    if (!std::is_sorted(cert.far_set.begin(), cert.far_set.end()) ||
        std::adjacent_find(cert.far_set.begin(), cert.far_set.end()) != cert.far_set.end()) {
        throw std::invalid_argument("certificate far set must be sorted and duplicate-free");
    }
    for (Vertex v : cert.far_set) {
        if (!H.has_vertex(v)) throw std::invalid_argument("certificate far set leaves the vertex set");
    }
    if (static_cast<long long>(cert.far_set.size()) > cert.C) {
        throw std::invalid_argument("certificate far set exceeds its own budget");
    }
    FullPair pair{cert.partition, cert.lattice};
    check_pair_shape(H, pair);
    if (cert.refuted_matching_bound != cert.lattice.dim() - 1) {
        throw std::invalid_argument("certificate bound must be lattice dimension minus one");
    }
    if (cert.lattice.dim() > H.uniformity() - 1) return false;
    if (!is_full(cert.lattice)) return false;
    // Coverage: edges that dodge the far set must index into the lattice.
    std::vector<char> far(static_cast<std::size_t>(H.max_label()) + 1, 0);
    for (Vertex v : cert.far_set) far[static_cast<std::size_t>(v)] = 1;
    for (int e = 0; e < H.edge_count(); ++e) {
        const Edge& edge = H.edge(e);
        bool met = false;
        for (Vertex v : edge) {
            if (far[static_cast<std::size_t>(v)]) {
                met = true;
                break;
            }
        }
        if (met) continue;
        if (!cert.lattice.contains(index_vector(cert.partition, edge))) return false;
    }
    return !is_soluble(H, pair).has_value();
}

Decision decide_existence(const Hypergraph& H, const RunConfig& cfg) {
    int k = H.uniformity();
    int n = H.vertex_count();
    if (n % k != 0) {
        // Divisibility already refutes: the 1-dimensional pair ({V}, <(k)>) is insoluble.
        Decision dec;
        dec.mode = DecisionMode::asymptotic;
        dec.pm_exists = false;
        EdgeLattice unit = EdgeLattice::from_generators({ZVec{static_cast<long long>(k)}}, 1, k);
        dec.certificate = Certificate{resolved_cfar(cfg, k), {},
                                      OrderedPartition({H.vertices()}), unit, 0};
        return dec;
    }
    long long threshold = resolved_brute_threshold(cfg, k);
    if (n < threshold) return brute_decision(H, cfg);
    try {
        auto cert = find_certificate(H, cfg);
        if (cert) {
            // A certificate refutes unconditionally; it does not need the density regime.
            Decision dec;
            dec.mode = DecisionMode::asymptotic;
            dec.pm_exists = false;
            dec.certificate = std::move(cert);
            return dec;
        }
        // Concluding existence from the absence of a certificate does need the regime:
        // outside it (space barriers, say) no lattice obstruction exists yet matchings
        // may still be blocked for size reasons.
        if (!check_setup(H, cfg.gamma, cfg.eps, cfg.threads).ok()) {
            throw DegenerateInput("minimum degree/codegree preconditions fail; "
                                  "a clean far-set scan is not conclusive");
        }
        Decision dec;
        dec.mode = DecisionMode::asymptotic;
        dec.pm_exists = true;
        return dec;
    } catch (const DegenerateInput&) {
        if (!cfg.fallback_brute) throw;
        return brute_decision(H, cfg);
    }
}

const char* to_string(DecisionMode mode) {
    return mode == DecisionMode::brute ? "brute" : "asymptotic";
}

}  // namespace hm
