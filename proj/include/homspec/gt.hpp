#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "homspec/characters.hpp"
#include "homspec/invariant.hpp"
#include "homspec/omega.hpp"

namespace homspec {

// The subgroup chain attached to a composition: parts merge left to right,
// so level j of the chain splits off block j.
struct ChainSpec {
    Composition composition;

    int length() const { return composition.length(); }
    // h(j) = a_1 + ... + a_{j-1}; 1-based j, h(1) = 0.
    int h(int j) const {
        int s = 0;
        for (int t = 0; t < j - 1; ++t) s += composition.parts[t];
        return s;
    }
    int part(int j) const { return composition.parts[j - 1]; }
};

// Exact vector together with its exact squared norm; the represented unit
// vector is raw / sqrt(norm_sq).
struct ScaledVector {
    std::vector<Rat> raw;
    Rat norm_sq;
};

struct StratumKey {
    int s, u, v, z;
    friend bool operator==(const StratumKey& a, const StratumKey& b) {
        return a.s == b.s && a.u == b.u && a.v == b.v && a.z == b.z;
    }
    friend bool operator<(const StratumKey& a, const StratumKey& b) {
        return std::tie(a.s, a.u, a.v, a.z) < std::tie(b.s, b.u, b.v, b.z);
    }
};

// Gelfand-Tsetlin basis vectors of the standard component, one per level
// j = 2..m, as functions on {1..n}. The sign is fixed so the coefficient on
// A_1 u ... u A_{j-1} is positive: raw = a_j 1_{A^j} - h(j) 1_{A_j}.
inline std::vector<ScaledVector> gt_vectors(const ChainSpec& chain) {
    int m = chain.length();
    require_input(m >= 2, "a one-block chain carries no standard component");
    int n = chain.composition.n();
    std::vector<ScaledVector> out;
    for (int j = 2; j <= m; ++j) {
        int hj = chain.h(j), aj = chain.part(j);
        ScaledVector v;
        v.raw.assign(n, Rat(0));
        for (int t = 1; t <= hj; ++t) v.raw[t - 1] = aj;
        for (int t = hj + 1; t <= hj + aj; ++t) v.raw[t - 1] = -hj;
        v.norm_sq = Rat(aj) * hj * (hj + aj);
        out.push_back(std::move(v));
    }
    return out;
}

inline ScaledVector gt_vector(const ChainSpec& chain, int j) {
    require_input(2 <= j && j <= chain.length(), "level out of range");
    return gt_vectors(chain)[j - 2];
}

// Intersection profile of B against the fixed base point, at level j:
// s = |A^j n B^j|, u = |A^j n B_j|, v = |B^j n A_j|, z = |A_j n B_j|.
inline StratumKey stratum_of(const ChainSpec& chain, int j, const OrderedSetPartition& B) {
    require_input(B.type() == chain.composition, "type mismatch");
    require_input(2 <= j && j <= chain.length(), "level out of range");
    int hj = chain.h(j), aj = chain.part(j);
    auto in_Aj = [&](int t) { return t > hj && t <= hj + aj; };
    auto in_Abefore = [&](int t) { return t <= hj; };
    StratumKey k{0, 0, 0, 0};
    for (size_t b = 0; b + 1 < static_cast<size_t>(j); ++b)
        for (int t : B.blocks[b]) {
            if (in_Abefore(t)) ++k.s;
            if (in_Aj(t)) ++k.v;
        }
    for (int t : B.blocks[j - 1]) {
        if (in_Abefore(t)) ++k.u;
        if (in_Aj(t)) ++k.z;
    }
    return k;
}

// Spherical value on a stratum:
// (s a_j^2 - a_j h(j)(u+v) + z h(j)^2) / (a_j h(j) h(j+1)).
inline Rat stratum_coefficient(const ChainSpec& chain, int j, const StratumKey& k) {
    Int hj = chain.h(j), aj = chain.part(j);
    Int num = k.s * aj * aj - aj * hj * (k.u + k.v) + k.z * hj * hj;
    Int den = aj * hj * (hj + aj);
    return make_rat(num, den);
}

// The spherical function phi_j as a function on the space; piecewise constant
// on strata and equal to <v_j, sigma v_j> for any sigma with sigma A* = B.
inline ModuleVector spherical_phi(const ChainSpec& chain, int j, const OmegaIndex& space) {
    require_input(space.composition() == chain.composition, "space does not match the chain");
    std::map<StratumKey, Rat> cache;
    ModuleVector phi = ModuleVector::zero(space);
    for (int idx = 0; idx < space.size(); ++idx) {
        StratumKey key = stratum_of(chain, j, space.point(idx));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, stratum_coefficient(chain, j, key)).first;
        phi.coeffs[idx] = it->second;
    }
    return phi;
}

// Projector onto the level-j standard block: row B is the sigma_B-translate
// of phi_j scaled by (n-1)/|Omega|.
inline RatMatrix gt_projector(const ChainSpec& chain, int j, const OmegaIndex& space) {
    ModuleVector phi = spherical_phi(chain, j, space);
    check_dense_cap(space);
    Rat scale = make_rat(space.n() - 1, space.size());
    RatMatrix e(space.size(), space.size());
    for (int b = 0; b < space.size(); ++b) {
        Permutation inv = space.coset_representative(space.point(b)).inverse();
        for (int c = 0; c < space.size(); ++c) e(b, c) = scale * phi.coeffs[space.act_index(inv, c)];
    }
    return e;
}

// Closed form of the level-2 projector on ordered pairs.
inline ModuleVector e12_fast(const ModuleVector& f) {
    const OmegaIndex& space = *f.space;
    int n = space.n();
    require_input(n >= 4, "closed form requires n >= 4");
    PairView pv(space);
    require_input(space.composition().parts[pv.first_block] == 1 &&
                      pv.first_block == space.composition().length() - 2,
                  "expected the pair module with trailing singleton blocks");

    std::vector<Rat> out_by_first(n + 1, Rat(0)), in_by_second(n + 1, Rat(0));
    Rat total = 0;
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        out_by_first[i] += f.coeffs[idx];
        in_by_second[j] += f.coeffs[idx];
        total += f.coeffs[idx];
    }
    std::vector<Rat> fbar(n + 1, Rat(0));
    for (int t = 1; t <= n; ++t)
        fbar[t] = make_rat(1, n) * out_by_first[t] + make_rat(1, long(n) * (n - 1)) * in_by_second[t] -
                  make_rat(1, long(n) * (n - 1)) * total;
    ModuleVector out = ModuleVector::zero(space);
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        out.coeffs[idx] = make_rat(n - 1, n - 2) * fbar[i] + make_rat(1, n - 2) * fbar[j];
    }
    return out;
}

// Tuple view of Omega_{(n-k,1^k)}: the trailing k singleton blocks carry the
// coordinates (i_1, ..., i_k); k = n is the word module Omega_{(1^n)}.
struct TupleView {
    const OmegaIndex* space;
    std::vector<int> tuple_blocks;  // 0-based block indices of the coordinates

    TupleView(const OmegaIndex& sp, int k) : space(&sp) {
        const auto& parts = sp.composition().parts;
        int n = sp.n();
        require_input(1 <= k && k <= n, "tuple length out of range");
        int lead = (k == n) ? 0 : 1;
        require_input(static_cast<int>(parts.size()) == k + lead, "space is not of shape (n-k, 1^k)");
        require_input(lead == 0 || parts[0] == n - k, "space is not of shape (n-k, 1^k)");
        for (int b = lead; b < static_cast<int>(parts.size()); ++b) {
            require_input(parts[b] == 1, "space is not of shape (n-k, 1^k)");
            tuple_blocks.push_back(b);
        }
    }

    int k() const { return static_cast<int>(tuple_blocks.size()); }

    std::vector<int> tuple_of(int idx) const {
        std::vector<int> t;
        t.reserve(tuple_blocks.size());
        for (int b : tuple_blocks) t.push_back(space->point(idx).blocks[b][0]);
        return t;
    }

    int index_of_tuple(const std::vector<int>& t) const {
        OrderedSetPartition p;
        p.blocks.assign(space->composition().length(), {});
        std::vector<char> used(space->n() + 1, 0);
        for (size_t q = 0; q < t.size(); ++q) {
            p.blocks[tuple_blocks[q]] = {t[q]};
            used[t[q]] = 1;
        }
        if (static_cast<int>(t.size()) < space->composition().length()) {
            for (int x = 1; x <= space->n(); ++x)
                if (!used[x]) p.blocks[0].push_back(x);
        }
        return space->index_of(p);
    }
};

// Projection of M^{n-k,1^k} onto the block induced from S^(n-k) x d_lambda
// S^lambda: averages chi_lambda over the coordinate permutations.
inline ModuleVector symmetrize(const Partition& lambda, const ModuleVector& f) {
    const OmegaIndex& space = *f.space;
    int k = lambda.n();
    TupleView tv(space, k);
    ModuleVector out = ModuleVector::zero(space);
    std::vector<int> img(k);
    for (int q = 0; q < k; ++q) img[q] = q + 1;
    Rat scale = make_rat(hook_dimension(lambda), factorial(k));
    do {
        Permutation sigma = Permutation(img);
        long chi = sn_character(lambda, Partition(sigma.cycle_type()));
        if (chi == 0) continue;
        Permutation inv = sigma.inverse();
        for (int idx = 0; idx < space.size(); ++idx) {
            std::vector<int> t = tv.tuple_of(idx);
            std::vector<int> permuted(k);
            for (int q = 1; q <= k; ++q) permuted[q - 1] = t[inv(q) - 1];
            out.coeffs[idx] += Rat(chi) * f.coeffs[tv.index_of_tuple(permuted)];
        }
    } while (std::next_permutation(img.begin(), img.end()));
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

inline RatMatrix symmetrize_operator(const Partition& lambda, const OmegaIndex& space) {
    check_dense_cap(space);
    RatMatrix e(space.size(), space.size());
    for (int c = 0; c < space.size(); ++c) {
        ModuleVector col = symmetrize(lambda, ModuleVector::delta(space, c));
        for (int r = 0; r < space.size(); ++r) e(r, c) = col.coeffs[r];
    }
    return e;
}

}  // namespace homspec
