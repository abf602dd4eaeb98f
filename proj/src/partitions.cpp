#include "hypermatch/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "hypermatch/combin.hpp"
#include "hypermatch/errors.hpp"

namespace hm {

namespace {

// Count vectors over d parts with entries bounded by k pack into base (k+1) digits.
long long pack_counts(std::span<const long long> v, const std::vector<long long>& place) {
    long long key = 0;
    for (std::size_t i = 0; i < v.size(); ++i) key += v[i] * place[i];
    return key;
}

struct ListingContext {
    const Hypergraph& H;
    std::vector<Vertex> verts;
    int d = 0;
    int k = 0;
    Rat threshold;                    // (1/k + gamma) * n
    std::vector<long long> place;     // place[j] = (k+1)^j
    std::vector<int> forced_of;       // packed (k-1)-count-vector -> forced part
    std::vector<char> on_lattice;     // packed k-count-vector -> membership in L
    bool use_queue = true;
    bool prune = true;
    std::set<OrderedPartition> emitted;
    long long leaves = 0;
};

struct ListingState {
    std::vector<std::int8_t> part;    // by vertex position; -1 = unassigned
    int assigned = 0;
    std::vector<int> queue;           // positions whose incident edges still need a look
    std::size_t head = 0;
};

void assign(ListingState& st, int pos, int j) {
    st.part[pos] = static_cast<std::int8_t>(j);
    ++st.assigned;
    st.queue.push_back(pos);
}

// Key of an edge under the current labels; only meaningful when every vertex is assigned.
long long edge_key(const ListingContext& ctx, const ListingState& st, const Edge& e) {
    long long key = 0;
    for (Vertex v : e) key += ctx.place[st.part[ctx.H.position(v)]];
    return key;
}

// Examines one edge: completes a forced label when exactly one vertex is unassigned, and
// reports an off-lattice complete edge. Returns false iff the branch should be pruned.
bool process_edge(const ListingContext& ctx, ListingState& st, const Edge& e) {
    int open_pos = -1;
    int open_count = 0;
    long long key = 0;
    for (Vertex v : e) {
        int pos = ctx.H.position(v);
        int j = st.part[pos];
        if (j < 0) {
            if (++open_count > 1) return true;  // nothing to do yet
            open_pos = pos;
        } else {
            key += ctx.place[j];
        }
    }
    if (open_count == 0) {
        return !ctx.prune || ctx.on_lattice[key];
    }
    int j = ctx.forced_of[key];
    assign(st, open_pos, j);
    return true;
}

bool propagate_queue(const ListingContext& ctx, ListingState& st) {
    while (st.head < st.queue.size()) {
        int pos = st.queue[st.head++];
        Vertex v = ctx.verts[pos];
        for (int eidx : ctx.H.incident_edges(v)) {
            if (!process_edge(ctx, st, ctx.H.edge(eidx))) return false;
        }
    }
    return true;
}

bool propagate_scan(const ListingContext& ctx, ListingState& st) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int eidx = 0; eidx < ctx.H.edge_count(); ++eidx) {
            int before = st.assigned;
            if (!process_edge(ctx, st, ctx.H.edge(eidx))) return false;
            if (st.assigned != before) changed = true;
        }
    }
    return true;
}

bool reliable_at(const Hypergraph& H, const std::vector<std::int8_t>& part, Vertex x,
                 const Rat& threshold) {
    // Any witness set B with positive codegree alongside x lies inside an edge through x,
    // so scanning incident edges sees every candidate.
    std::set<std::vector<Vertex>> tried;
    for (int eidx : H.incident_edges(x)) {
        const Edge& e = H.edge(eidx);
        for (std::size_t drop = 0; drop < e.size(); ++drop) {
            if (e[drop] == x) continue;
            bool all_assigned = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i == drop) continue;
                Vertex v = e[i];
                if (v != x && part[H.position(v)] < 0) {
                    all_assigned = false;
                    break;
                }
            }
            if (!all_assigned) continue;
            std::vector<Vertex> with_x;
            with_x.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i != drop) with_x.push_back(e[i]);
            }
            if (!tried.insert(with_x).second) continue;
            if (Rat(BigInt(H.degree(with_x))) >= threshold) return true;
        }
    }
    return false;
}

void branch(ListingContext& ctx, ListingState st);  // forward

void settle(ListingContext& ctx, ListingState st) {
    bool alive = ctx.use_queue ? propagate_queue(ctx, st) : propagate_scan(ctx, st);
    if (!alive) {
        ++ctx.leaves;
        return;
    }
    int n = static_cast<int>(ctx.verts.size());
    if (st.assigned < n) {
        branch(ctx, std::move(st));
        return;
    }
    ++ctx.leaves;
    // Final filter: every edge on-lattice and every part inhabited.
    for (int eidx = 0; eidx < ctx.H.edge_count(); ++eidx) {
        if (!ctx.on_lattice[edge_key(ctx, st, ctx.H.edge(eidx))]) return;
    }
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(ctx.d));
    for (int pos = 0; pos < n; ++pos) parts[st.part[pos]].push_back(ctx.verts[pos]);
    for (const auto& p : parts) {
        if (p.empty()) return;
    }
    ctx.emitted.insert(OrderedPartition(std::move(parts)));
}

void branch(ListingContext& ctx, ListingState st) {
    int n = static_cast<int>(ctx.verts.size());
    int pick = -1;
    for (int pos = 0; pos < n; ++pos) {
        if (st.part[pos] >= 0) continue;
        if (reliable_at(ctx.H, st.part, ctx.verts[pos], ctx.threshold)) {
            pick = pos;
            break;
        }
    }
    if (pick < 0) {
        throw DegenerateInput("partition listing stalled: " +
                              std::to_string(n - st.assigned) + " of " + std::to_string(n) +
                              " vertices unassigned with no forced move and no reliable vertex");
    }
    for (int j = 0; j < ctx.d; ++j) {
        ListingState child = st;
        assign(child, pick, j);
        settle(ctx, std::move(child));
    }
}

}  // namespace

std::vector<Vertex> reliable_vertices(const Hypergraph& H, std::span<const Vertex> assigned,
                                      const Rat& gamma) {
    std::vector<std::int8_t> part(H.vertices().size(), -1);
    for (Vertex v : assigned) {
        if (!H.has_vertex(v)) throw std::invalid_argument("assigned vertex not in hypergraph");
        part[H.position(v)] = 0;
    }
    Rat threshold = (Rat(BigInt(1), BigInt(H.uniformity())) + gamma) *
                    Rat(BigInt(H.vertex_count()));
    std::vector<Vertex> out;
    for (Vertex v : H.vertices()) {
        if (part[H.position(v)] >= 0) continue;
        if (reliable_at(H, part, v, threshold)) out.push_back(v);
    }
    return out;
}

PartitionListing list_partitions(const Hypergraph& H, const EdgeLattice& L, const Rat& gamma,
                                 const ListingOptions& opts) {
    int k = H.uniformity();
    int n = H.vertex_count();
    if (L.uniformity() != k) throw std::invalid_argument("lattice uniformity mismatch");
    if (gamma <= Rat(0)) throw std::invalid_argument("gamma must be positive");
    if (n == 0) throw DegenerateInput("cannot list partitions of an empty vertex set");
    int d = L.dim();

    PartitionListing out;
    if (d == 1) {
        // The only 1-part partition; the sole 1-dimensional index vector (k) lies in any
        // full lattice, so every edge passes the filter.
        out.partitions.push_back(OrderedPartition({H.vertices()}));
        out.leaves = 1;
        return out;
    }
    if (!is_full(L)) throw std::invalid_argument("partition listing requires a full lattice");

    ListingContext ctx{H, H.vertices(), d, k,
                       (Rat(BigInt(1), BigInt(k)) + gamma) * Rat(BigInt(n)),
                       {}, {}, {}, opts.use_queue, opts.prune_off_lattice, {}, 0};
    ctx.place.resize(static_cast<std::size_t>(d));
    long long span = 1;
    for (int j = 0; j < d; ++j) {
        ctx.place[j] = span;
        span *= k + 1;
    }
    ctx.forced_of.assign(static_cast<std::size_t>(span), -1);
    for (const auto& v : sum_vectors(d, k - 1)) {
        auto j = forced_coordinate(L, v);
        if (!j) throw std::logic_error("full lattice failed to force a coordinate");
        ctx.forced_of[pack_counts(v, ctx.place)] = *j;
    }
    ctx.on_lattice.assign(static_cast<std::size_t>(span), 0);
    for (const auto& v : lattice_k_vectors(L)) ctx.on_lattice[pack_counts(v, ctx.place)] = 1;

    // Seed: lexicographically least (k-1)-set of codegree >= (1/k + gamma) n.
    std::vector<Vertex> seed;
    if (n >= k - 1) {
        std::vector<int> idx = first_combination(k - 1);
        do {
            std::vector<Vertex> cand(static_cast<std::size_t>(k) - 1);
            for (int i = 0; i < k - 1; ++i) cand[i] = ctx.verts[idx[i]];
            if (Rat(BigInt(H.degree(cand))) >= ctx.threshold) {
                seed = cand;
                break;
            }
        } while (next_combination(idx, n));
    }
    if (seed.empty()) {
        throw DegenerateInput("no (k-1)-set reaches codegree (1/k + gamma) n = " +
                              format_rational(ctx.threshold));
    }

    long long codes = 1;
    for (int i = 0; i < k - 1; ++i) codes *= d;
    for (long long code = 0; code < codes; ++code) {
        ListingState st;
        st.part.assign(static_cast<std::size_t>(n), -1);
        long long rest = code;
        for (int i = k - 2; i >= 0; --i) {
            assign(st, H.position(seed[i]), static_cast<int>(rest % d));
            rest /= d;
        }
        settle(ctx, std::move(st));
    }

    out.partitions.assign(ctx.emitted.begin(), ctx.emitted.end());
    out.leaves = ctx.leaves;
    return out;
}

}  // namespace hm
