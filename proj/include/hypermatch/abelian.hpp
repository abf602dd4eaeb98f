#pragma once

#include <vector>

namespace hm {

// Finite abelian group in invariant-factor form: Z_{m1} x ... x Z_{mt} with m1 | m2 | ...
// and every m_i >= 2; the trivial group has no factors. Elements are explicit residue
// tuples (not opaque indices) so quotients and coset translates stay constructible.
struct AbelianGroup {
    std::vector<long long> factors;

    using Elem = std::vector<long long>;

    long long order() const;
    int rank() const { return static_cast<int>(factors.size()); }
    Elem zero() const { return Elem(factors.size(), 0); }
    bool valid(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(long long r, const Elem& a) const;
    // All elements in lexicographic tuple order; this is the canonical enumeration used
    // to label lattice coordinates by group elements.
    std::vector<Elem> elements() const;

    bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};

// All abelian groups of the given order, one per invariant-factor chain, sorted by chain.
std::vector<AbelianGroup> abelian_groups_of_order(long long order);

struct Subgroup {
    std::vector<AbelianGroup::Elem> elements;  // sorted; always contains zero
    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const AbelianGroup::Elem& a) const;
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup generated_subgroup(const AbelianGroup& G, const std::vector<AbelianGroup::Elem>& gens);

// Every subgroup of G, found by closing known subgroups under one extra generator.
// Sorted by (order, elements) so enumeration order is canonical.
std::vector<Subgroup> subgroups(const AbelianGroup& G);

// A sequence of group elements (repetition allowed, order irrelevant for the sums).
using GroupSequence = std::vector<AbelianGroup::Elem>;

// The set of subsequence sums including the empty sum 0. Sorted distinct elements.
std::vector<AbelianGroup::Elem> subsequence_sums(const AbelianGroup& G, const GroupSequence& a);

// Minimal sequences: no proper subsequence has the same sum-set.
bool is_minimal_sequence(const AbelianGroup& G, const GroupSequence& a);

// The maximal subgroup K such that the sum-set of a is a union of K-cosets. The zero
// subgroup always qualifies; maximality is unique because qualifying subgroups are closed
// under join.
Subgroup key_subgroup(const AbelianGroup& G, const GroupSequence& a);

// G/K with an explicit projection: the quotient in invariant-factor form plus the residue
// map carrying elements of G to quotient tuples.
struct QuotientMap {
    AbelianGroup quotient;
    AbelianGroup::Elem map(const AbelianGroup::Elem& g) const;

    // Internals of the Smith-form construction (right transform and full diagonal).
    std::vector<std::vector<long long>> V;
    std::vector<long long> diag;
    std::vector<int> kept;  // coordinates with diag > 1, in order
};
QuotientMap quotient_by(const AbelianGroup& G, const Subgroup& K);

}  // namespace hm
