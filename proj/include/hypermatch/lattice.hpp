#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypermatch/abelian.hpp"
#include "hypermatch/partition.hpp"
#include "hypermatch/zmatrix.hpp"

namespace hm {

// Integer lattice in Z^d generated by k-vectors (non-negative vectors with coordinate sum
// k). The canonical Hermite basis makes equality a plain comparison of matrices.
class EdgeLattice {
public:
    // gens may be any integer vectors of length d; edge lattices pass index vectors.
    static EdgeLattice from_generators(std::vector<ZVec> gens, int d, int k);

    int dim() const { return d_; }
    int uniformity() const { return k_; }
    const ZMat& basis() const { return basis_; }           // canonical HNF rows
    const std::vector<ZVec>& generators() const { return gens_; }  // distinct, sorted
    int rank() const { return static_cast<int>(basis_.size()); }

    bool contains(std::span<const long long> v) const;
    bool contains_lattice(const EdgeLattice& other) const;  // every basis row of other in *this

    bool operator==(const EdgeLattice& o) const {
        return d_ == o.d_ && k_ == o.k_ && basis_ == o.basis_;
    }
    bool operator<(const EdgeLattice& o) const { return basis_ < o.basis_; }

private:
    int d_ = 0, k_ = 0;
    std::vector<ZVec> gens_;
    ZMat basis_;
};

// All non-negative vectors in Z^d with coordinate sum r, lexicographically ascending.
std::vector<ZVec> sum_vectors(int d, int r);

// The k-vectors lying in L (the maximal full set candidate I = L ∩ {k-vectors}).
std::vector<ZVec> lattice_k_vectors(const EdgeLattice& L);

// L_P(H): lattice generated by the index vectors of the edges. Empty H gives the zero
// lattice of dimension |P|.
EdgeLattice edge_lattice(const Hypergraph& H, const OrderedPartition& P);

// No difference of unit vectors u_i - u_j (i != j) lies in L.
bool is_transferral_free(const EdgeLattice& L);

// L is full: transferral-free and L ∩ {k-vectors} is a full set (every (k-1)-vector v has
// some coordinate i with v + u_i in L). Requires k >= 3.
bool is_full(const EdgeLattice& L);

// For a full L of dimension d, the (k-1)-vector v determines exactly one part index j with
// v + u_j in L. Returns that j; nullopt when no such j exists (L not full enough).
std::optional<int> forced_coordinate(const EdgeLattice& L, std::span<const long long> v);

// Quotient G = L_max^d / L for full L, with the residue map and the distinguished data of
// the structure theorem: unit_residue[j] = R(u_j - u_0) and g0 = R(-k * u_0).
class CosetGroup {
public:
    const AbelianGroup& group() const { return group_; }
    const std::vector<AbelianGroup::Elem>& unit_residue() const { return unit_residue_; }
    const AbelianGroup::Elem& g0() const { return g0_; }

    // Residue of any vector with coordinate sum divisible by k.
    AbelianGroup::Elem residue(std::span<const long long> v) const;

private:
    friend CosetGroup coset_group(const EdgeLattice& L);
    AbelianGroup group_;
    std::vector<AbelianGroup::Elem> unit_residue_;
    AbelianGroup::Elem g0_;
    int d_ = 0, k_ = 0;
    ZMat lmax_hnf_;                 // basis of L_max^d
    ZMat V_;                        // SNF right transform of L in L_max coordinates
    std::vector<long long> diag_;   // SNF diagonal
    std::vector<int> kept_;         // coordinates with diag > 1
};
CosetGroup coset_group(const EdgeLattice& L);

// L(G, g0): lattice generated by the k-vectors, indexed by the canonical element order of
// G, whose weighted element sum equals g0. By the structure theorem every full lattice is
// such a lattice after identifying coordinates with group elements.
EdgeLattice lattice_of_group(const AbelianGroup& G, const AbelianGroup::Elem& g0, int k);

// All full lattices of dimension d for k-graphs, canonically sorted. Requires 1 <= d <= k-1.
std::vector<EdgeLattice> enumerate_full_lattices(int d, int k);

}  // namespace hm
