#include "hypermatch/zmatrix.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace hm {

namespace {

// Reduce column `col` below `row` to zero by gcd row operations, applying the same ops to
// the optional transform. Entries stay tiny in our uses; no overflow care needed.
void clear_below(ZMat& M, ZMat* U, int row, int col) {
    const int m = static_cast<int>(M.size());
    for (;;) {
        int best = -1;
        for (int r = row; r < m; ++r)
            if (M[r][col] != 0 && (best < 0 || std::llabs(M[r][col]) < std::llabs(M[best][col]))) best = r;
        if (best < 0) return;
        if (best != row) {
            std::swap(M[best], M[row]);
            if (U) std::swap((*U)[best], (*U)[row]);
        }
        bool again = false;
        for (int r = row + 1; r < m; ++r) {
            if (M[r][col] == 0) continue;
            long long q = M[r][col] / M[row][col];
            for (size_t c = 0; c < M[r].size(); ++c) M[r][c] -= q * M[row][c];
            if (U)
                for (size_t c = 0; c < (*U)[r].size(); ++c) (*U)[r][c] -= q * (*U)[row][c];
            if (M[r][col] != 0) again = true;  // remainder survives, another gcd round
        }
        if (!again) return;
    }
}

ZMat hnf_impl(ZMat M, ZMat* U) {
    const int m = static_cast<int>(M.size());
    const int d = m == 0 ? 0 : static_cast<int>(M[0].size());
    int row = 0;
    for (int col = 0; col < d && row < m; ++col) {
        clear_below(M, U, row, col);
        if (M[row][col] == 0) continue;
        if (M[row][col] < 0) {
            for (auto& x : M[row]) x = -x;
            if (U)
                for (auto& x : (*U)[row]) x = -x;
        }
        const long long pivot = M[row][col];
        for (int r = 0; r < row; ++r) {
            long long q = M[r][col] / pivot;
            if (M[r][col] % pivot < 0) q -= 1;  // floor division so residues land in [0, pivot)
            if (q == 0) continue;
            for (size_t c = 0; c < M[r].size(); ++c) M[r][c] -= q * M[row][c];
            if (U)
                for (size_t c = 0; c < (*U)[r].size(); ++c) (*U)[r][c] -= q * (*U)[row][c];
        }
        ++row;
    }
    M.resize(row);  // rows past `row` are all zero by construction
    return M;
}

}  // namespace

ZMat hermite_normal_form(ZMat rows) { return hnf_impl(std::move(rows), nullptr); }

HnfTransform hermite_with_transform(ZMat rows) {
    const int m = static_cast<int>(rows.size());
    ZMat U(m, ZVec(m, 0));
    for (int i = 0; i < m; ++i) U[i][i] = 1;
    HnfTransform out;
    out.H = hnf_impl(std::move(rows), &U);
    out.U = std::move(U);
    return out;
}

std::optional<ZVec> solve_in_rowspace(const ZMat& hnf, const ZVec& target) {
    ZVec rest = target;
    ZVec coeff(hnf.size(), 0);
    for (size_t i = 0; i < hnf.size(); ++i) {
        size_t pcol = 0;
        while (pcol < hnf[i].size() && hnf[i][pcol] == 0) ++pcol;
        assert(pcol < hnf[i].size());
        // Rows below have zeros in this column (echelon), so the coefficient is forced.
        if (rest[pcol] % hnf[i][pcol] != 0) return std::nullopt;
        long long q = rest[pcol] / hnf[i][pcol];
        coeff[i] = q;
        if (q != 0)
            for (size_t c = 0; c < rest.size(); ++c) rest[c] -= q * hnf[i][c];
    }
    for (long long x : rest)
        if (x != 0) return std::nullopt;
    return coeff;
}

SnfResult smith_normal_form(ZMat A) {
    if (A.empty()) throw std::invalid_argument("SNF of empty matrix");
    const int m = static_cast<int>(A.size());
    const int d = static_cast<int>(A[0].size());
    ZMat V(d, ZVec(d, 0));
    for (int i = 0; i < d; ++i) V[i][i] = 1;

    auto col_sub = [&](int dst, int src, long long q) {
        if (q == 0) return;
        for (int r = 0; r < m; ++r) A[r][dst] -= q * A[r][src];
        for (int r = 0; r < d; ++r) V[r][dst] -= q * V[r][src];
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m; ++r) std::swap(A[r][a], A[r][b]);
        for (int r = 0; r < d; ++r) std::swap(V[r][a], V[r][b]);
    };
    auto col_neg = [&](int c) {
        for (int r = 0; r < m; ++r) A[r][c] = -A[r][c];
        for (int r = 0; r < d; ++r) V[r][c] = -V[r][c];
    };

    const int steps = std::min(m, d);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Move a minimal nonzero entry of the trailing block to (t, t).
            int pr = -1, pc = -1;
            for (int r = t; r < m; ++r)
                for (int c = t; c < d; ++c)
                    if (A[r][c] != 0 && (pr < 0 || std::llabs(A[r][c]) < std::llabs(A[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) break;  // block is zero
            if (pr != t) std::swap(A[pr], A[t]);
            col_swap(pc, t);
            if (A[t][t] < 0) col_neg(t);

            bool dirty = false;
            for (int r = t + 1; r < m; ++r) {
                if (A[r][t] == 0) continue;
                long long q = A[r][t] / A[t][t];
                for (int c = 0; c < d; ++c) A[r][c] -= q * A[t][c];
                if (A[r][t] != 0) dirty = true;
            }
            for (int c = t + 1; c < d; ++c) {
                if (A[t][c] == 0) continue;
                long long q = A[t][c] / A[t][t];
                col_sub(c, t, q);
                if (A[t][c] != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility fix-up: pivot must divide every remaining entry.
            bool fixed = true;
            for (int r = t + 1; r < m && fixed; ++r)
                for (int c = t + 1; c < d && fixed; ++c)
                    if (A[r][c] % A[t][t] != 0) {
                        for (int cc = 0; cc < d; ++cc) A[t][cc] += A[r][cc];
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    SnfResult out;
    out.diag.assign(d, 0);
    for (int i = 0; i < steps; ++i) out.diag[i] = A[i][i] < 0 ? -A[i][i] : A[i][i];
    out.V = std::move(V);
    return out;
}

}  // namespace hm
