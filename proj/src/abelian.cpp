#include "hypermatch/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypermatch/zmatrix.hpp"

namespace hm {

long long AbelianGroup::order() const {
    long long n = 1;
    for (long long m : factors) n *= m;
    return n;
}

bool AbelianGroup::valid(const Elem& a) const {
    if (a.size() != factors.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= factors[i]) return false;
    return true;
}

AbelianGroup::Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem c(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) c[i] = (a[i] + b[i]) % factors[i];
    return c;
}

AbelianGroup::Elem AbelianGroup::neg(const Elem& a) const {
    Elem c(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) c[i] = (factors[i] - a[i]) % factors[i];
    return c;
}

AbelianGroup::Elem AbelianGroup::scale(long long r, const Elem& a) const {
    Elem c(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        long long rr = r % factors[i];
        if (rr < 0) rr += factors[i];
        c[i] = (rr * a[i]) % factors[i];
    }
    return c;
}

std::vector<AbelianGroup::Elem> AbelianGroup::elements() const {
    std::vector<Elem> out;
    Elem cur = zero();
    out.push_back(cur);
    const int t = rank();
    for (;;) {
        int i = t - 1;
        while (i >= 0 && cur[i] + 1 == factors[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
        out.push_back(cur);
    }
    if (t == 0) return {zero()};  // trivial group: just the empty tuple
    return out;
}

namespace {

void chains_rec(long long remaining, long long at_least, std::vector<long long>& cur,
                std::vector<AbelianGroup>& out) {
    if (remaining == 1) {
        out.push_back(AbelianGroup{cur});
        return;
    }
    for (long long m = at_least; m <= remaining; ++m) {
        if (remaining % m != 0) continue;
        // Invariant factors must divide leftwards: each later factor is a multiple.
        if (!cur.empty() && m % cur.back() != 0) continue;
        cur.push_back(m);
        chains_rec(remaining / m, m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(long long order) {
    if (order < 1) throw std::invalid_argument("group order must be positive");
    if (order == 1) return {AbelianGroup{}};
    std::vector<AbelianGroup> out;
    std::vector<long long> cur;
    chains_rec(order, 2, cur, out);
    std::sort(out.begin(), out.end(),
              [](const AbelianGroup& a, const AbelianGroup& b) { return a.factors < b.factors; });
    return out;
}

bool Subgroup::contains(const AbelianGroup::Elem& a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

Subgroup generated_subgroup(const AbelianGroup& G, const std::vector<AbelianGroup::Elem>& gens) {
    std::set<AbelianGroup::Elem> closed;
    closed.insert(G.zero());
    // Close under addition of generators; finite group, so this terminates.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : gens) {
            std::vector<AbelianGroup::Elem> fresh;
            for (const auto& e : closed) {
                auto s = G.add(e, g);
                if (!closed.count(s)) fresh.push_back(s);
            }
            for (auto& s : fresh) {
                closed.insert(std::move(s));
                grew = true;
            }
        }
    }
    Subgroup K;
    K.elements.assign(closed.begin(), closed.end());
    return K;
}

std::vector<Subgroup> subgroups(const AbelianGroup& G) {
    std::set<std::vector<AbelianGroup::Elem>> seen;
    std::vector<Subgroup> todo;
    Subgroup trivial;
    trivial.elements.push_back(G.zero());
    seen.insert(trivial.elements);
    todo.push_back(trivial);
    const auto all = G.elements();
    for (size_t i = 0; i < todo.size(); ++i) {
        Subgroup base = todo[i];  // copy: todo grows below
        for (const auto& g : all) {
            if (base.contains(g)) continue;
            std::vector<AbelianGroup::Elem> gens = base.elements;
            gens.push_back(g);
            Subgroup bigger = generated_subgroup(G, gens);
            if (seen.insert(bigger.elements).second) todo.push_back(bigger);
        }
    }
    std::sort(todo.begin(), todo.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return todo;
}

std::vector<AbelianGroup::Elem> subsequence_sums(const AbelianGroup& G, const GroupSequence& a) {
    std::set<AbelianGroup::Elem> sums;
    sums.insert(G.zero());
    for (const auto& x : a) {
        if (!G.valid(x)) throw std::invalid_argument("sequence element outside the group");
        std::vector<AbelianGroup::Elem> shifted;
        shifted.reserve(sums.size());
        for (const auto& s : sums) shifted.push_back(G.add(s, x));
        sums.insert(shifted.begin(), shifted.end());
    }
    return {sums.begin(), sums.end()};
}

bool is_minimal_sequence(const AbelianGroup& G, const GroupSequence& a) {
    const auto full = subsequence_sums(G, a);
    const size_t r = a.size();
    if (r >= 63) throw std::invalid_argument("sequence too long for subset enumeration");
    for (uint64_t mask = 0; mask + 1 < (uint64_t{1} << r); ++mask) {
        GroupSequence sub;
        for (size_t i = 0; i < r; ++i)
            if (mask & (uint64_t{1} << i)) sub.push_back(a[i]);
        if (sub.size() == r) continue;
        if (subsequence_sums(G, sub) == full) return false;
    }
    return true;
}

Subgroup key_subgroup(const AbelianGroup& G, const GroupSequence& a) {
    const auto sums = subsequence_sums(G, a);
    auto in_sums = [&](const AbelianGroup::Elem& e) {
        return std::binary_search(sums.begin(), sums.end(), e);
    };
    Subgroup best;
    best.elements.push_back(G.zero());
    for (const Subgroup& K : subgroups(G)) {
        bool union_of_cosets = true;
        for (const auto& s : sums) {
            for (const auto& k : K.elements)
                if (!in_sums(G.add(s, k))) {
                    union_of_cosets = false;
                    break;
                }
            if (!union_of_cosets) break;
        }
        if (union_of_cosets && K.order() > best.order()) best = K;
    }
    return best;
}

AbelianGroup::Elem QuotientMap::map(const AbelianGroup::Elem& g) const {
    const int t = static_cast<int>(V.size());
    if (static_cast<int>(g.size()) != t) throw std::invalid_argument("quotient map: wrong tuple size");
    AbelianGroup::Elem out;
    out.reserve(kept.size());
    for (int j : kept) {
        long long s = 0;
        for (int i = 0; i < t; ++i) s += g[i] * V[i][j];
        long long m = diag[j];
        s %= m;
        if (s < 0) s += m;
        out.push_back(s);
    }
    return out;
}

QuotientMap quotient_by(const AbelianGroup& G, const Subgroup& K) {
    const int t = G.rank();
    QuotientMap qm;
    if (t == 0) {
        qm.quotient = AbelianGroup{};
        return qm;
    }
    // Z^t modulo the lattice spanned by the group relations diag(m_i) and lifts of K.
    ZMat relations;
    for (int i = 0; i < t; ++i) {
        ZVec row(t, 0);
        row[i] = G.factors[i];
        relations.push_back(std::move(row));
    }
    for (const auto& e : K.elements) relations.emplace_back(e.begin(), e.end());
    SnfResult snf = smith_normal_form(std::move(relations));
    qm.V = std::move(snf.V);
    qm.diag = std::move(snf.diag);
    for (int j = 0; j < t; ++j) {
        if (qm.diag[j] == 0) throw std::invalid_argument("quotient is infinite (relations not full rank)");
        if (qm.diag[j] > 1) qm.kept.push_back(j);
    }
    AbelianGroup Q;
    for (int j : qm.kept) Q.factors.push_back(qm.diag[j]);
    qm.quotient = std::move(Q);
    return qm;
}

}  // namespace hm
