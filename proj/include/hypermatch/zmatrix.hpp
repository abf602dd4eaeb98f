#pragma once

#include <optional>
#include <vector>

namespace hm {

// Small exact integer linear algebra for the lattice layer. Dimensions here are the
// number of partition parts (<= 6) and entries start as index-vector coordinates (<= k),
// so int64 arithmetic has enormous headroom.
using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;

// Canonical basis of the integer row lattice: row-style Hermite normal form. Echelon with
// strictly increasing pivot columns, positive pivots, and entries above each pivot reduced
// into [0, pivot). Zero rows are dropped, so equal lattices produce identical matrices.
ZMat hermite_normal_form(ZMat rows);

// Same reduction but keeping the unimodular row transform: H = U * A (U square, |det U| = 1,
// including the rows of A that reduced to zero).
struct HnfTransform {
    ZMat H;  // with zero rows dropped
    ZMat U;  // rows(A) x rows(A); first rank(H) rows of U*A give H
};
HnfTransform hermite_with_transform(ZMat rows);

// Coefficients x with x * H = target, where H is an HNF basis (echelon). nullopt when
// target is outside the row lattice.
std::optional<ZVec> solve_in_rowspace(const ZMat& hnf, const ZVec& target);

// Smith normal form with the right (column) transform: U * A * V = diag(d_1..d_r) with
// d_1 | d_2 | ... and all d_i >= 0. Only V is returned because quotient maps need exactly
// w -> (w * V) mod diag. A must have as many columns as V's dimension.
struct SnfResult {
    std::vector<long long> diag;  // length = columns of A
    ZMat V;                       // cols x cols, unimodular
};
SnfResult smith_normal_form(ZMat A);

}  // namespace hm
