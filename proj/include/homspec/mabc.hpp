#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "homspec/invariant.hpp"
#include "homspec/transport.hpp"

namespace homspec {

using Triple = std::array<int, 3>;  // parts, trailing zeros allowed

inline Composition triple_composition(const Triple& t) {
    std::vector<int> parts;
    for (int p : t) parts.push_back(p);
    while (parts.size() > 1 && parts.back() == 0) parts.pop_back();
    return Composition(std::move(parts));
}

inline int triple_n(const Triple& t) { return t[0] + t[1] + t[2]; }

inline Partition triple_partition(const Triple& t) {
    std::vector<int> parts;
    for (int p : t)
        if (p > 0) parts.push_back(p);
    return Partition(std::move(parts));
}

// A level of the Gelfand-Tsetlin decomposition of M^{a,b,c}: the copy of
// S^{alpha,beta,gamma} inside the eigenspace indexed by k.
struct GTBlockSpec {
    Triple target;  // (alpha, beta, gamma), weakly decreasing
    Triple source;  // (a, b, c)
    int k;

    GTBlockSpec(Triple t, Triple s, int level) : target(t), source(s), k(level) {
        require_input(t[0] >= t[1] && t[1] >= t[2] && t[2] >= 0, "target must be weakly decreasing");
        require_input(triple_n(t) == triple_n(s), "target and source must partition the same n");
        int lo = std::max({0, s[1] - s[0], t[1] - s[0], s[1] - t[1]});
        int hi = std::min(s[1] - t[2], t[0] - s[0]);
        require_input(lo <= k && k <= hi, "level outside the admissible range");
    }
};

// Semistandard range for the shape/content pair:
// max{0, b-a, beta-a, b-beta} <= l <= min{b-gamma, alpha-a}.
inline std::pair<int, int> semistandard_l_range(const Triple& target, const Triple& source) {
    int lo = std::max({0, source[1] - source[0], target[1] - source[0], source[1] - target[1]});
    int hi = std::min(source[1] - target[2], target[0] - source[0]);
    return {lo, hi};
}

// Containment range: S^{alpha,beta,gamma} meets the k-th eigenspace iff
// max{beta-a, b-beta} <= k <= min{b-gamma, alpha-a}.
inline std::pair<int, int> containment_k_range(const Triple& target, const Triple& source) {
    int lo = std::max(target[1] - source[0], source[1] - target[1]);
    int hi = std::min(source[1] - target[2], target[0] - source[0]);
    return {lo, hi};
}

namespace detail {

// Drop the rows of zero row-triple parts and the columns of zero source
// parts. Entries may be negative, in which case the operator is zero.
inline TransportMatrix shrink_to_triples(const std::vector<std::vector<int>>& full, const Triple& row_triple,
                                         const Triple& source) {
    TransportMatrix m;
    for (int i = 0; i < 3; ++i) {
        if (row_triple[i] == 0) continue;
        std::vector<int> row;
        for (int j = 0; j < 3; ++j)
            if (source[j] != 0) row.push_back(full[i][j]);
        m.entries.push_back(std::move(row));
    }
    return m;
}

}  // namespace detail

// M_l: rows sum to (alpha, beta, gamma), columns to (a, b, c).
inline TransportMatrix make_ml(int l, const Triple& target, const Triple& source) {
    return detail::shrink_to_triples({{source[0], l, target[0] - source[0] - l},
                                      {0, source[1] - l, target[1] - source[1] + l},
                                      {0, 0, target[2]}},
                                     target, source);
}

// M_l': same row sums as M_l with one point shifted between the blocks.
inline TransportMatrix make_ml_prime(int l, const Triple& target, const Triple& source) {
    return detail::shrink_to_triples({{source[0] - 1, l, target[0] - source[0] - l + 1},
                                      {1, source[1] - l, target[1] - source[1] + l - 1},
                                      {0, 0, target[2]}},
                                     target, source);
}

// M_l'': rows sum to (alpha+1, beta-1, gamma).
inline TransportMatrix make_ml_double_prime(int l, const Triple& target, const Triple& source) {
    Triple rows{target[0] + 1, target[1] - 1, target[2]};
    return detail::shrink_to_triples({{source[0], l, target[0] - source[0] - l + 1},
                                      {0, source[1] - l, target[1] - source[1] + l - 1},
                                      {0, 0, target[2]}},
                                     rows, source);
}

// T_{M_l} composed with the target-isotypic projector of its own module;
// no range policing (matrices with negative entries act as zero).
inline RatMatrix restricted_t_op(int l, const Triple& target, const Triple& source,
                                 const OmegaIndex& space_target, const OmegaIndex& space_source) {
    RatMatrix raw = t_op(make_ml(l, target, source), space_target, space_source);
    return raw * isotypic_projector(triple_partition(target), space_target);
}

// J_l for l in the semistandard range.
inline RatMatrix j_op(int l, const Triple& target, const Triple& source, const OmegaIndex& space_target,
                      const OmegaIndex& space_source) {
    auto [lo, hi] = semistandard_l_range(target, source);
    require_input(lo <= l && l <= hi, "l outside the semistandard range");
    return restricted_t_op(l, target, source, space_target, space_source);
}

// Coefficients of R_k = sum_l binom(l,k) (beta-b+k+1)_{l-k} / (a-b+2k+2)_{l-k} J_l.
inline std::vector<std::pair<int, Rat>> r_coefficients(int k, const Triple& target, const Triple& source) {
    auto [lo, hi] = semistandard_l_range(target, source);
    require_input(lo <= k && k <= hi, "k outside the admissible range");
    int a = source[0], b = source[1], beta = target[1];
    std::vector<std::pair<int, Rat>> out;
    for (int l = k; l <= hi; ++l) {
        for (int t = 0; t < l - k; ++t)
            if (a - b + 2 * k + 2 + t == 0)
                throw contract_violation_error("vanishing Pochhammer denominator at level " + std::to_string(l));
        Rat coeff = make_rat(binomial(l, k) * pochhammer(beta - b + k + 1, l - k), pochhammer(a - b + 2 * k + 2, l - k));
        out.emplace_back(l, coeff);
    }
    return out;
}

inline RatMatrix r_op(int k, const Triple& target, const Triple& source, const OmegaIndex& space_target,
                      const OmegaIndex& space_source) {
    RatMatrix sum(space_source.size(), space_target.size());
    for (const auto& [l, coeff] : r_coefficients(k, target, source))
        sum = sum + coeff * restricted_t_op(l, target, source, space_target, space_source);
    return sum;
}

// Eigenvalue of Delta_{1,2} on the k-th block: ab - (b-k)(a+k+1).
inline long delta12_eigenvalue(int a, int b, int k) {
    require_input(std::max(0, b - a) <= k && k <= b, "k outside [max(0, b-a), b]");
    return static_cast<long>(a) * b - static_cast<long>(b - k) * (a + k + 1);
}

// Eigenvalue of Delta_{1,3} + Delta_{2,3} on the copy of S^{alpha,beta,gamma}
// inside the k-th block.
inline Rat delta13_23_eigenvalue(const Triple& target, const Triple& source, int k) {
    auto [lo, hi] = containment_k_range(target, source);
    require_input(lo <= k && k <= hi, "k outside the containment range");
    long alpha = target[0], beta = target[1], gamma = target[2];
    long a = source[0], b = source[1], c = source[2];
    Rat first = make_rat(alpha * alpha + beta * beta + gamma * gamma - 2 * beta - 4 * gamma - a * a - b * b - c * c, 2);
    return first - Rat(a) * k + Rat(k + 1) * (b - k);
}

// Eigenvalue of the full pair sum on the S^lambda-isotypic component:
// content sum of lambda minus the binomial terms of the composition.
inline Int central_sum_eigenvalue(const Partition& lambda, const Composition& comp) {
    Int s = content_sum(lambda);
    for (int p : comp.parts) s -= binomial(p, 2);
    return s;
}

struct MabcBlock {
    int k;
    long eigenvalue;
    long dimension;                    // exact kernel dimension
    std::vector<Partition> contributors;  // each with multiplicity one
};

struct MabcDecomposition {
    Triple source;
    std::vector<MabcBlock> blocks;
};

// Spectral decomposition of Delta_{1,2} on M^{a,b,c} with the contributing
// irreducibles per eigenvalue. Works for any composition triple.
inline MabcDecomposition mabc_decomposition(const Triple& source, const OmegaIndex& space) {
    int a = source[0], b = source[1];
    require_input(space.composition() == triple_composition(source), "space mismatch");
    RatMatrix delta = laplace_op(1, 2, space.composition(), space);
    MabcDecomposition out{source, {}};
    long total = 0;
    for (int k = std::max(0, b - a); k <= b; ++k) {
        MabcBlock block;
        block.k = k;
        block.eigenvalue = delta12_eigenvalue(a, b, k);
        RatMatrix shifted = delta - (Rat(block.eigenvalue) * RatMatrix::identity(space.size()));
        block.dimension = kernel_dimension(shifted);
        Int contributed = 0;
        for (const auto& lambda : partitions_of(space.n())) {
            if (lambda.length() > 3 || !dominates(lambda, space.composition())) continue;
            Triple target{lambda.part(0), lambda.part(1), lambda.part(2)};
            auto [lo, hi] = containment_k_range(target, source);
            if (lo <= k && k <= hi) {
                block.contributors.push_back(lambda);
                contributed += hook_dimension(lambda);
            }
        }
        require_contract(contributed == block.dimension,
                         "containment rows do not fill the eigenspace at k = " + std::to_string(k));
        total += block.dimension;
        out.blocks.push_back(std::move(block));
    }
    require_contract(total == space.size(), "eigenvalue set incomplete: residual dimension remains");
    return out;
}

using PairSet = std::set<std::pair<int, int>>;  // subsets of {(1,2),(1,3),(2,3)}

inline std::vector<std::pair<long, int>> urn_spectrum(const Triple& source, const PairSet& allowed,
                                                      const OmegaIndex& space) {
    require_input(!allowed.empty(), "at least one urn pair is needed");
    Composition comp = triple_composition(source);
    require_input(space.composition() == comp, "space mismatch");
    int h = comp.length();
    for (auto [i, j] : allowed)
        require_input(1 <= i && i < j && j <= h, "urn pair out of range");

    RatMatrix op(space.size(), space.size());
    long top = 0;
    for (auto [i, j] : allowed) {
        op = op + laplace_op(i, j, comp, space);
        top += static_cast<long>(comp.parts[i - 1]) * comp.parts[j - 1];
    }

    // Candidate eigenvalues from the closed formulas: single pairs relabel to
    // Delta_{1,2}; the full sum is central; two-pair sums are central minus
    // the missing single.
    auto single_candidates = [&](int i, int j) {
        std::set<long> vals;
        int p = comp.parts[i - 1], q = comp.parts[j - 1];
        for (int k = std::max(0, q - p); k <= q; ++k) vals.insert(delta12_eigenvalue(p, q, k));
        return vals;
    };
    std::set<long> centrals;
    for (const auto& lambda : partitions_of(space.n()))
        if (dominates(lambda, comp)) centrals.insert(central_sum_eigenvalue(lambda, comp).get_si());

    std::set<long> candidates = {top};
    if (allowed.size() == 1) {
        auto [i, j] = *allowed.begin();
        candidates.merge(single_candidates(i, j));
    } else if (static_cast<int>(allowed.size()) == h * (h - 1) / 2) {
        candidates.insert(centrals.begin(), centrals.end());
    } else {
        PairSet all;
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j) all.emplace(i, j);
        for (auto [i, j] : all) {
            if (allowed.count({i, j})) continue;
            for (long c : centrals)
                for (long s : single_candidates(i, j)) candidates.insert(c - s);
        }
    }

    std::map<long, int> found;
    long covered = 0;
    auto try_candidate = [&](long lambda) {
        if (found.count(lambda)) return;
        RatMatrix shifted = op - (Rat(lambda) * RatMatrix::identity(space.size()));
        int dim = kernel_dimension(shifted);
        if (dim > 0) {
            found[lambda] = dim;
            covered += dim;
        }
    };
    for (long c : candidates) {
        if (covered == space.size()) break;
        if (c < -top || c > top) continue;
        try_candidate(c);
    }
    // Fallback integer sweep over the row-sum bound.
    for (long c = -top; c <= top && covered < space.size(); ++c) try_candidate(c);
    require_contract(covered == space.size(), "spectrum sweep left residual dimension");

    return {found.begin(), found.end()};
}

}  // namespace homspec
