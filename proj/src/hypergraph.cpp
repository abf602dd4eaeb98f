#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hypermatch/combin.hpp"
#include "hypermatch/kernels.hpp"

namespace hm {

namespace {

// Edges pack into one word (10 bits per label, big-endian over the sorted labels), so the
// packed order coincides with lexicographic edge order and membership is a binary search.
constexpr int kPackBits = 10;
constexpr Vertex kMaxPackableLabel = (1 << kPackBits) - 1;

uint64_t pack_edge(std::span<const Vertex> e) {
    uint64_t key = 0;
    for (Vertex v : e) key = (key << kPackBits) | static_cast<uint64_t>(v);
    return key;
}

}  // namespace

struct Hypergraph::DefCache {
    std::mutex mu;
    std::map<Rat, std::unique_ptr<DeficiencyTable>> by_gamma;
};

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges)
    : Hypergraph(
          [n] {
              if (n < 0) throw std::invalid_argument("negative vertex count");
              std::vector<Vertex> verts(n);
              for (int i = 0; i < n; ++i) verts[i] = i + 1;
              return verts;
          }(),
          k, std::move(edges)) {}

Hypergraph::Hypergraph(std::vector<Vertex> vertices, int k, std::vector<Edge> edges)
    : k_(k), verts_(std::move(vertices)), edges_(std::move(edges)), cache_(std::make_shared<DefCache>()) {
    if (k_ < 2 || k_ > 6) throw std::invalid_argument("uniformity k must be in [2, 6]");
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("duplicate vertex label");
    if (!verts_.empty() && verts_.front() < 1) throw std::invalid_argument("vertex labels are 1-based");
    max_label_ = verts_.empty() ? 0 : verts_.back();
    if (max_label_ > kMaxPackableLabel) throw std::invalid_argument("vertex label too large");

    pos_.assign(max_label_ + 1, -1);
    for (size_t i = 0; i < verts_.size(); ++i) pos_[verts_[i]] = static_cast<int>(i);

    for (Edge& e : edges_) {
        if (static_cast<int>(e.size()) != k_) throw std::invalid_argument("edge of wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("repeated vertex inside an edge");
        for (Vertex v : e)
            if (v < 1 || v > max_label_ || pos_[v] < 0)
                throw std::invalid_argument("edge uses unknown vertex " + std::to_string(v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    edge_keys_.reserve(edges_.size());
    for (const Edge& e : edges_) edge_keys_.push_back(pack_edge(e));

    inc_.assign(max_label_ + 1, {});
    for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx)
        for (Vertex v : edges_[idx]) inc_[v].push_back(idx);
}

bool Hypergraph::has_vertex(Vertex v) const { return v >= 1 && v <= max_label_ && pos_[v] >= 0; }

int Hypergraph::position(Vertex v) const {
    return (v >= 1 && v <= max_label_) ? pos_[v] : -1;
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
    if (static_cast<int>(e.size()) != k_) return false;
    uint64_t key = pack_edge(e);
    return std::binary_search(edge_keys_.begin(), edge_keys_.end(), key);
}

const std::vector<int>& Hypergraph::incident_edges(Vertex v) const {
    static const std::vector<int> kEmpty;
    if (!has_vertex(v)) return kEmpty;
    return inc_[v];
}

long long Hypergraph::degree(std::span<const Vertex> A) const {
    if (static_cast<int>(A.size()) > k_) throw std::invalid_argument("degree query larger than k");
    if (A.empty()) return edge_count();
    for (Vertex v : A)
        if (!has_vertex(v)) throw std::invalid_argument("degree query uses unknown vertex");
    if (static_cast<int>(A.size()) == k_) {
        std::vector<Vertex> sorted(A.begin(), A.end());
        std::sort(sorted.begin(), sorted.end());
        return has_edge(sorted) ? 1 : 0;
    }
    // Scan the shortest incidence list among the queried vertices.
    Vertex pivot = A[0];
    for (Vertex v : A)
        if (inc_[v].size() < inc_[pivot].size()) pivot = v;
    long long count = 0;
    for (int idx : inc_[pivot]) {
        const Edge& e = edges_[idx];
        bool all = true;
        for (Vertex v : A) {
            if (!std::binary_search(e.begin(), e.end(), v)) {
                all = false;
                break;
            }
        }
        count += all;
    }
    return count;
}

Hypergraph Hypergraph::remove_vertices(std::span<const Vertex> gone) const {
    std::vector<char> dead(max_label_ + 1, 0);
    for (Vertex v : gone) {
        if (!has_vertex(v)) throw std::invalid_argument("removing unknown vertex");
        dead[v] = 1;
    }
    std::vector<Vertex> keep;
    keep.reserve(verts_.size());
    for (Vertex v : verts_)
        if (!dead[v]) keep.push_back(v);
    std::vector<Edge> kept_edges;
    for (const Edge& e : edges_) {
        bool alive = true;
        for (Vertex v : e)
            if (dead[v]) {
                alive = false;
                break;
            }
        if (alive) kept_edges.push_back(e);
    }
    return Hypergraph(std::move(keep), k_, std::move(kept_edges));
}

long long DeficiencyTable::t_of(std::span<const Vertex> A) const {
    std::vector<int> combo;
    combo.reserve(A.size());
    for (Vertex v : A) {
        auto it = std::lower_bound(universe.begin(), universe.end(), v);
        if (it == universe.end() || *it != v) throw std::invalid_argument("t_of: vertex not in table universe");
        combo.push_back(static_cast<int>(it - universe.begin()));
    }
    std::sort(combo.begin(), combo.end());
    return t[colex_rank(combo)];
}

const DeficiencyTable& deficiency_table(const Hypergraph& H, const Rat& gamma, int threads) {
    std::lock_guard<std::mutex> lock(H.cache_->mu);
    auto it = H.cache_->by_gamma.find(gamma);
    if (it != H.cache_->by_gamma.end()) return *it->second;

    auto table = std::make_unique<DeficiencyTable>();
    const int n = H.vertex_count();
    const int k = H.uniformity();
    table->gamma = gamma;
    table->universe = H.vertices();
    table->threshold = ceil_rat((Rat(1, k) + gamma) * Rat(n));

    std::vector<long long> codeg = kernels::codegree_table(H, threads);
    const long long thr = table->threshold.convert_to<long long>();
    table->t.resize(codeg.size());
    table->chi1 = 0;
    table->min_codegree = codeg.empty() ? 0 : codeg[0];
    table->bad_codegree_count = 0;
    for (size_t r = 0; r < codeg.size(); ++r) {
        long long tv = std::max(0LL, thr - codeg[r]);
        table->t[r] = tv;
        table->chi1 += BigInt(tv) * tv;
        table->min_codegree = std::min(table->min_codegree, codeg[r]);
        if (codeg[r] < thr) ++table->bad_codegree_count;
    }
    std::vector<int> combo = first_combination(k - 1);
    if (static_cast<int>(combo.size()) == k - 1 && n >= k - 1) {
        // Rebuild label sets for the positive entries in colex rank order.
        for (long long rank = 0; rank < static_cast<long long>(codeg.size()); ++rank) {
            std::vector<int> c = colex_unrank(rank, k - 1);
            long long tv = table->t[rank];
            if (tv > 0) {
                std::vector<Vertex> labels(c.size());
                for (size_t i = 0; i < c.size(); ++i) labels[i] = H.vertices()[c[i]];
                table->positive.emplace_back(std::move(labels), tv);
            }
        }
    }

    std::vector<long long> vdeg = kernels::vertex_degree_table(H);
    table->delta1 = vdeg.empty() ? 0 : *std::min_element(vdeg.begin(), vdeg.end());
    Rat raw = Rat(pow_int(BigInt(n), static_cast<unsigned>(k - 1)), BigInt(3) * factorial_big(k)) -
              Rat(table->delta1);
    table->chi2 = raw > Rat(0) ? raw : Rat(0);

    auto [pos, inserted] = H.cache_->by_gamma.emplace(gamma, std::move(table));
    (void)inserted;
    return *pos->second;
}

long long min_codegree(const Hypergraph& H, int threads) {
    std::vector<long long> codeg = kernels::codegree_table(H, threads);
    if (codeg.empty()) return 0;  // fewer than k-1 vertices: no (k-1)-sets to bound
    return *std::min_element(codeg.begin(), codeg.end());
}

SetupReport check_setup(const Hypergraph& H, const Rat& gamma, const Rat& eps, int threads) {
    SetupReport rep;
    const int n = H.vertex_count();
    const int k = H.uniformity();
    const Rat n_pow(pow_int(BigInt(n), static_cast<unsigned>(k - 1)));

    std::vector<long long> vdeg = kernels::vertex_degree_table(H);
    long long delta1 = vdeg.empty() ? 0 : *std::min_element(vdeg.begin(), vdeg.end());
    rep.deg_ok = Rat(delta1) >= gamma * n_pow;

    const DeficiencyTable& table = deficiency_table(H, gamma, threads);
    rep.bad_count = table.bad_codegree_count;
    rep.codeg_ok = Rat(rep.bad_count) <= eps * n_pow;
    return rep;
}

bool is_perfect_matching(const Hypergraph& H, const Matching& M) {
    std::vector<char> covered(H.max_label() + 1, 0);
    for (const Edge& e : M.edges) {
        if (!H.has_edge(e)) throw std::invalid_argument("matching uses a non-edge");
        for (Vertex v : e) {
            if (covered[v]) throw std::invalid_argument("matching edges overlap");
            covered[v] = 1;
        }
    }
    for (Vertex v : H.vertices())
        if (!covered[v]) return false;
    return true;
}

namespace {

struct BruteSearch {
    const Hypergraph& H;
    long long budget;  // <0 means unlimited
    long long nodes = 0;
    bool exhausted = false;
    std::vector<char> covered;
    std::vector<Edge> chosen;

    explicit BruteSearch(const Hypergraph& h, long long b) : H(h), budget(b), covered(h.max_label() + 1, 0) {}

    bool run(int covered_count) {
        ++nodes;
        if (budget >= 0 && nodes > budget) {
            exhausted = true;
            return false;
        }
        if (covered_count == H.vertex_count()) return true;
        Vertex v = 0;
        for (Vertex u : H.vertices())
            if (!covered[u]) {
                v = u;
                break;
            }
        // Incidence lists are ascending edge indices and edges are sorted, so this visits
        // candidate edges in lexicographic order: the first matching found is the lex-least.
        for (int idx : H.incident_edges(v)) {
            const Edge& e = H.edge(idx);
            bool free = true;
            for (Vertex u : e)
                if (covered[u]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (Vertex u : e) covered[u] = 1;
            chosen.push_back(e);
            if (run(covered_count + H.uniformity())) return true;
            if (exhausted) return false;
            chosen.pop_back();
            for (Vertex u : e) covered[u] = 0;
        }
        return false;
    }
};

}  // namespace

BruteResult brute_force_pm_budgeted(const Hypergraph& H, long long node_budget) {
    if (H.vertex_count() % H.uniformity() != 0)
        throw std::invalid_argument("perfect matching requires k | n");
    BruteSearch search(H, node_budget);
    BruteResult res;
    bool found = search.run(0);
    res.nodes = search.nodes;
    if (found) {
        res.status = BruteStatus::found;
        res.matching = Matching{search.chosen};
    } else if (search.exhausted) {
        res.status = BruteStatus::budget_exhausted;
    } else {
        res.status = BruteStatus::none;
    }
    return res;
}

std::optional<Matching> brute_force_pm(const Hypergraph& H) {
    BruteResult res = brute_force_pm_budgeted(H, -1);
    return res.matching;
}

namespace {

void max_matching_rec(const Hypergraph& H, std::vector<char>& covered, int next_pos, int size, int& best) {
    const auto& verts = H.vertices();
    while (next_pos < static_cast<int>(verts.size()) && covered[verts[next_pos]]) ++next_pos;
    int remaining = 0;
    for (int i = next_pos; i < static_cast<int>(verts.size()); ++i)
        if (!covered[verts[i]]) ++remaining;
    if (size + remaining / H.uniformity() <= best) return;  // bound: can't beat best
    if (next_pos == static_cast<int>(verts.size())) {
        best = std::max(best, size);
        return;
    }
    Vertex v = verts[next_pos];
    for (int idx : H.incident_edges(v)) {
        const Edge& e = H.edge(idx);
        bool free = true;
        for (Vertex u : e)
            if (covered[u]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (Vertex u : e) covered[u] = 1;
        max_matching_rec(H, covered, next_pos + 1, size + 1, best);
        for (Vertex u : e) covered[u] = 0;
    }
    // Or leave v uncovered.
    covered[v] = 1;
    max_matching_rec(H, covered, next_pos + 1, size, best);
    covered[v] = 0;
    best = std::max(best, size);
}

}  // namespace

int max_matching_size(const Hypergraph& H) {
    std::vector<char> covered(H.max_label() + 1, 0);
    int best = 0;
    max_matching_rec(H, covered, 0, 0, best);
    return best;
}

}  // namespace hm
