#pragma once

#include <vector>

#include "homspec/invariant.hpp"
#include "homspec/omega.hpp"

namespace homspec {

// Nonnegative integer matrix with prescribed row sums a and column sums b;
// labels a diagonal S_n-orbit on Omega_a x Omega_b.
struct TransportMatrix {
    std::vector<std::vector<int>> entries;  // h x k

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }

    std::vector<int> row_sums() const {
        std::vector<int> out;
        for (const auto& r : entries) {
            int s = 0;
            for (int x : r) s += x;
            out.push_back(s);
        }
        return out;
    }

    std::vector<int> col_sums() const {
        std::vector<int> out(cols(), 0);
        for (const auto& r : entries)
            for (int j = 0; j < cols(); ++j) out[j] += r[j];
        return out;
    }

    friend bool operator==(const TransportMatrix& a, const TransportMatrix& b) { return a.entries == b.entries; }
    friend bool operator<(const TransportMatrix& a, const TransportMatrix& b) { return a.entries < b.entries; }
};

inline TransportMatrix matrix_of_pair(const OrderedSetPartition& A, const OrderedSetPartition& B) {
    require_input(A.n() == B.n(), "pair must partition the same set");
    TransportMatrix m;
    m.entries.assign(A.blocks.size(), std::vector<int>(B.blocks.size(), 0));
    std::vector<int> block_of_b(A.n() + 1, 0);
    for (size_t j = 0; j < B.blocks.size(); ++j)
        for (int x : B.blocks[j]) block_of_b[x] = static_cast<int>(j);
    for (size_t i = 0; i < A.blocks.size(); ++i)
        for (int x : A.blocks[i]) ++m.entries[i][block_of_b[x]];
    return m;
}

// All of M_{a,b}, by row-wise lexicographic backtracking.
inline std::vector<TransportMatrix> transport_matrices(const Composition& a, const Composition& b) {
    require_input(a.n() == b.n(), "row and column sums must agree");
    int h = a.length(), k = b.length();
    std::vector<TransportMatrix> out;
    TransportMatrix m;
    m.entries.assign(h, std::vector<int>(k, 0));
    std::vector<int> col_rest = b.parts;
    auto rec = [&](auto&& self, int i, int j, int row_rest) -> void {
        if (i == h) {
            out.push_back(m);
            return;
        }
        if (j == k - 1) {
            if (row_rest <= col_rest[j]) {
                m.entries[i][j] = row_rest;
                col_rest[j] -= row_rest;
                self(self, i + 1, 0, i + 1 < h ? a.parts[i + 1] : 0);
                col_rest[j] += row_rest;
                m.entries[i][j] = 0;
            }
            return;
        }
        for (int v = 0; v <= std::min(row_rest, col_rest[j]); ++v) {
            m.entries[i][j] = v;
            col_rest[j] -= v;
            self(self, i, j + 1, row_rest - v);
            col_rest[j] += v;
            m.entries[i][j] = 0;
        }
    };
    rec(rec, 0, 0, a.parts[0]);
    return out;
}

inline std::vector<std::pair<int, int>> pairs_in_orbit(const TransportMatrix& M, const OmegaIndex& space_a,
                                                       const OmegaIndex& space_b) {
    std::vector<std::pair<int, int>> out;
    for (int ai = 0; ai < space_a.size(); ++ai)
        for (int bi = 0; bi < space_b.size(); ++bi)
            if (matrix_of_pair(space_a.point(ai), space_b.point(bi)) == M) out.emplace_back(ai, bi);
    return out;
}

// (T_M f)(B) = sum of f(A) over A with m(A,B) = M, as a matrix from
// L(Omega_a) to L(Omega_b). Matrices with a negative entry give zero.
inline RatMatrix t_op(const TransportMatrix& M, const OmegaIndex& space_a, const OmegaIndex& space_b) {
    check_dense_cap(space_a);
    check_dense_cap(space_b);
    RatMatrix op(space_b.size(), space_a.size());
    for (const auto& r : M.entries)
        for (int x : r)
            if (x < 0) return op;
    for (int ai = 0; ai < space_a.size(); ++ai)
        for (int bi = 0; bi < space_b.size(); ++bi)
            if (matrix_of_pair(space_a.point(ai), space_b.point(bi)) == M) op(bi, ai) = 1;
    return op;
}

// Semistandard criterion on the matrix: reading row i of the associated
// tableau as m_{i,j} copies of j, columns must increase strictly, that is
// sum_{j<=t} m_{i+1,j} <= sum_{j<=t-1} m_{i,j} for every i and t.
inline bool is_semistandard(const TransportMatrix& M, const Partition& lambda, const Composition& mu) {
    if (M.rows() != lambda.length() || M.cols() != mu.length()) return false;
    if (M.row_sums() != lambda.parts || M.col_sums() != mu.parts) return false;
    int k = M.cols();
    for (int i = 0; i + 1 < M.rows(); ++i) {
        int below = 0, above = 0;
        for (int t = 1; t <= k; ++t) {
            below += M.entries[i + 1][t - 1];
            if (below > above) return false;
            above += M.entries[i][t - 1];
        }
    }
    return true;
}

inline std::vector<TransportMatrix> semistandard_matrices(const Partition& lambda, const Composition& mu) {
    require_input(lambda.n() == mu.n(), "shape and content must partition the same n");
    std::vector<TransportMatrix> out;
    for (const auto& M : transport_matrices(Composition(lambda.parts), mu))
        if (is_semistandard(M, lambda, mu)) out.push_back(M);
    return out;
}

inline long kostka(const Partition& lambda, const Composition& mu) {
    return static_cast<long>(semistandard_matrices(lambda, mu).size());
}

// Basis of Hom(S^lambda, M^mu): each semistandard T_M precomposed with the
// lambda-isotypic projector of M^lambda.
struct HomBasisElement {
    TransportMatrix matrix;
    RatMatrix op;  // |Omega_mu| x |Omega_lambda|
};

inline std::vector<HomBasisElement> hom_basis(const Partition& lambda, const Composition& mu,
                                              const OmegaIndex& space_lambda, const OmegaIndex& space_mu) {
    RatMatrix projector = isotypic_projector(lambda, space_lambda);
    std::vector<HomBasisElement> out;
    for (const auto& M : semistandard_matrices(lambda, mu))
        out.push_back(HomBasisElement{M, t_op(M, space_lambda, space_mu) * projector});
    return out;
}

}  // namespace homspec
