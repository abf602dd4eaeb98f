#include "hypermatch/search.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "hypermatch/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hm {

namespace {

RunConfig inner_config(const RunConfig& cfg) {
    RunConfig inner = cfg;
    inner.threads = 1;  // safety checks already run under the caller's parallelism
    return inner;
}

bool edge_is_safe(const Hypergraph& H, const Edge& e, const RunConfig& cfg,
                  SearchReport* report) {
    if (report) ++report->safety_checks;
    return decide_existence(H.remove_edge_vertices(e), inner_config(cfg)).pm_exists;
}

Decision budgeted_brute(const Hypergraph& H, const RunConfig& cfg) {
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

bool deficiency_conditions_hold(const Hypergraph& H, const Rat& gamma, const Rat& eps,
                                int threads, std::string* why) {
    int n = H.vertex_count();
    int k = H.uniformity();
    if (n == 0) return true;
    const DeficiencyTable& table = deficiency_table(H, gamma, threads);
    Rat chi1(table.chi1);
    Rat rhs1 = eps * gamma * gamma * Rat(pow_int(BigInt(n), k + 1)) / Rat(BigInt(4)) +
               Rat(BigInt(3 * k) * pow_int(BigInt(n), k));
    if (!(chi1 < rhs1)) {
        if (why) {
            *why = "condition (i) fails: chi1 = " + format_rational(chi1) +
                   " >= " + format_rational(rhs1);
        }
        return false;
    }
    Rat se = sqrt_eps_or_throw(eps);
    Rat lhs2 = table.chi2 + chi1 / (se * gamma * gamma * Rat(BigInt(n) * n));
    Rat rhs2 = se * Rat(pow_int(BigInt(n), k - 1));
    if (!(lhs2 < rhs2)) {
        if (why) {
            *why = "condition (ii) fails: chi2 + chi1/(sqrt(eps) gamma^2 n^2) = " +
                   format_rational(lhs2) + " >= " + format_rational(rhs2);
        }
        return false;
    }
    return true;
}

std::vector<Edge> safe_edges(const Hypergraph& H, const RunConfig& cfg) {
    int m = H.edge_count();
    std::vector<char> safe(static_cast<std::size_t>(m), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(m));
    RunConfig inner = inner_config(cfg);
#ifdef _OPENMP
    if (cfg.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads)
        for (int e = 0; e < m; ++e) {
            try {
                safe[static_cast<std::size_t>(e)] =
                    decide_existence(H.remove_edge_vertices(H.edge(e)), inner).pm_exists;
            } catch (...) {
                errors[static_cast<std::size_t>(e)] = std::current_exception();
            }
        }
    } else
#endif
    {
        for (int e = 0; e < m; ++e) {
            try {
                safe[static_cast<std::size_t>(e)] =
                    decide_existence(H.remove_edge_vertices(H.edge(e)), inner).pm_exists;
            } catch (...) {
                errors[static_cast<std::size_t>(e)] = std::current_exception();
            }
        }
    }
    std::vector<Edge> out;
    for (int e = 0; e < m; ++e) {
        if (errors[static_cast<std::size_t>(e)]) {
            std::rethrow_exception(errors[static_cast<std::size_t>(e)]);
        }
        if (safe[static_cast<std::size_t>(e)]) out.push_back(H.edge(e));
    }
    return out;
}

RemovalChoice find_removal_edge(const Hypergraph& H, const RunConfig& cfg,
                                SearchReport* report) {
    int n = H.vertex_count();
    int k = H.uniformity();
    if (n == 0 || H.edge_count() == 0) throw RegimeViolation("no edges available for removal");
    const DeficiencyTable& table = deficiency_table(H, cfg.gamma, cfg.threads);

    if (table.chi2 > Rat(0)) {
        // chi2 > 0 means some vertex degree sits at or below n^(k-1) / (3 k!); removing an
        // edge through the least such vertex can only shrink chi2 proportionally faster
        // than the n^(k-1) budget.
        Vertex x = 0;
        std::size_t best = 0;
        bool first = true;
        for (Vertex v : H.vertices()) {
            std::size_t deg = H.incident_edges(v).size();
            if (first || deg < best) {
                best = deg;
                x = v;
                first = false;
            }
        }
        for (int eidx : H.incident_edges(x)) {
            if (edge_is_safe(H, H.edge(eidx), cfg, report)) {
                return RemovalChoice{H.edge(eidx), 1};
            }
        }
        throw RegimeViolation("no safe edge through the minimum-degree vertex " +
                              std::to_string(x));
    }

    Rat target = -Rat(BigInt(k) * (k + 1)) * Rat(table.chi1) / Rat(BigInt(n));
    std::vector<Vertex> probe(static_cast<std::size_t>(k));
    for (int eidx = 0; eidx < H.edge_count(); ++eidx) {
        const Edge& e = H.edge(eidx);
        Rat lhs(0);
        for (const auto& [A, t_val] : table.positive) {
            long long a_cap = 0;
            {
                auto it = A.begin();
                for (Vertex v : e) {
                    it = std::lower_bound(it, A.end(), v);
                    if (it != A.end() && *it == v) ++a_cap;
                }
            }
            long long link_cap = 0;
            for (Vertex z : e) {
                if (std::binary_search(A.begin(), A.end(), z)) continue;
                probe.assign(A.begin(), A.end());
                probe.insert(std::upper_bound(probe.begin(), probe.end(), z), z);
                if (H.has_edge(probe)) ++link_cap;
            }
            Rat t{BigInt(t_val)};
            lhs += Rat(BigInt(2)) * t * (Rat(BigInt(link_cap - 1)) - Rat(BigInt(k)) * cfg.gamma) -
                   Rat(BigInt(a_cap)) * t * t;
        }
        if (lhs <= target && edge_is_safe(H, e, cfg, report)) {
            return RemovalChoice{e, 2};
        }
    }
    throw RegimeViolation("no safe edge meets the deficiency-weighted removal bound");
}

Decision find_pm(const Hypergraph& H, const RunConfig& cfg, SearchReport* report) {
    SearchReport scratch;
    SearchReport& rep = report ? *report : scratch;
    int k = H.uniformity();

    Decision existence = decide_existence(H, cfg);
    if (!existence.pm_exists) return existence;
    if (existence.matching) return existence;  // the brute path already extracted one

    auto full_fallback = [&]() -> Decision {
        ++rep.fallbacks;
        Decision dec = budgeted_brute(H, cfg);
        if (!dec.pm_exists) {
            rep.notes.push_back("existence claim contradicted by exact search; "
                                "reporting the exact outcome");
        }
        return dec;
    };

    long long threshold = resolved_brute_threshold(cfg, k);
    Hypergraph cur = H;
    std::vector<Edge> removed;
    std::vector<Edge> tail;
    while (true) {
        int ncur = cur.vertex_count();
        if (ncur == 0) break;
        if (ncur < threshold) {
            Decision dec = budgeted_brute(cur, cfg);
            if (!dec.pm_exists) {
                rep.notes.push_back("residual instance at n=" + std::to_string(ncur) +
                                    " lost all perfect matchings; restarting exactly");
                return full_fallback();
            }
            tail = dec.matching->edges;
            break;
        }
        std::string why;
        if (!deficiency_conditions_hold(cur, cfg.gamma, cfg.eps, cfg.threads, &why)) {
            ++rep.fallbacks;
            rep.notes.push_back("at n=" + std::to_string(ncur) + ": " + why);
            Decision dec = budgeted_brute(cur, cfg);
            if (!dec.pm_exists) return full_fallback();
            tail = dec.matching->edges;
            break;
        }
        RemovalChoice choice;
        try {
            choice = find_removal_edge(cur, cfg, &rep);
        } catch (const RegimeViolation& ex) {
            ++rep.fallbacks;
            rep.notes.push_back("at n=" + std::to_string(ncur) + ": " + ex.what());
            Decision dec = budgeted_brute(cur, cfg);
            if (!dec.pm_exists) return full_fallback();
            tail = dec.matching->edges;
            break;
        }
        const DeficiencyTable& table = deficiency_table(cur, cfg.gamma, cfg.threads);
        RemovalEvent ev;
        ev.n_before = ncur;
        ev.rule = choice.rule;
        ev.edge = choice.edge;
        ev.chi1 = table.chi1.str();
        ev.chi2 = format_rational(table.chi2);
        removed.push_back(choice.edge);
        cur = cur.remove_edge_vertices(choice.edge);
        ev.conditions_after_ok =
            deficiency_conditions_hold(cur, cfg.gamma, cfg.eps, cfg.threads, nullptr);
        rep.removals.push_back(std::move(ev));
    }

    Matching m;
    m.edges = removed;
    m.edges.insert(m.edges.end(), tail.begin(), tail.end());
    std::sort(m.edges.begin(), m.edges.end());
    if (!is_perfect_matching(H, m)) {
        rep.notes.push_back("assembled matching failed verification; restarting exactly");
        return full_fallback();
    }
    Decision dec;
    dec.mode = DecisionMode::asymptotic;
    dec.pm_exists = true;
    dec.matching = std::move(m);
    return dec;
}

}  // namespace hm
