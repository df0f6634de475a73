#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "homspec/characters.hpp"
#include "homspec/matrix.hpp"
#include "homspec/omega.hpp"

namespace homspec {

// Exact function on a homogeneous space, indexed like space.points().
struct ModuleVector {
    const OmegaIndex* space;
    std::vector<Rat> coeffs;

    ModuleVector(const OmegaIndex& sp, std::vector<Rat> c) : space(&sp), coeffs(std::move(c)) {
        require_input(static_cast<int>(coeffs.size()) == sp.size(), "coefficient length mismatch");
    }
    static ModuleVector zero(const OmegaIndex& sp) { return ModuleVector(sp, std::vector<Rat>(sp.size(), Rat(0))); }
    static ModuleVector delta(const OmegaIndex& sp, int idx) {
        ModuleVector v = zero(sp);
        v.coeffs[idx] = 1;
        return v;
    }
};

inline void check_dense_cap(const OmegaIndex& space) {
    if (space.size() > kDenseOperatorCap)
        throw resource_cap_error("dense operators are capped at " + std::to_string(kDenseOperatorCap) + " points");
}

inline RatMatrix permutation_matrix(const Permutation& sigma, const OmegaIndex& space) {
    check_dense_cap(space);
    RatMatrix p(space.size(), space.size());
    for (int y = 0; y < space.size(); ++y) p(space.act_index(sigma, y), y) = 1;
    return p;
}

// d_{i,j}: moves one point from block j into block i; maps M^a into the
// module of the composition with a_i+1, a_j-1. Blocks are 1-based.
inline RatMatrix d_op(int i, int j, const Composition& a, const OmegaIndex& source, const OmegaIndex& target) {
    int h = a.length();
    require_input(1 <= i && i <= h && 1 <= j && j <= h && i != j, "block index out of range");
    require_input(a.parts[j - 1] >= 2, "moving the last point would empty block j");
    require_input(source.composition() == a, "source space mismatch");
    check_dense_cap(source);
    check_dense_cap(target);
    RatMatrix op(target.size(), source.size());
    for (int ai = 0; ai < source.size(); ++ai) {
        const auto& A = source.point(ai);
        for (int x : A.blocks[j - 1]) {
            OrderedSetPartition B = A;
            B.blocks[j - 1].erase(std::find(B.blocks[j - 1].begin(), B.blocks[j - 1].end(), x));
            B.blocks[i - 1].insert(std::upper_bound(B.blocks[i - 1].begin(), B.blocks[i - 1].end(), x), x);
            op(target.index_of(B), ai) += 1;
        }
    }
    return op;
}

inline Composition d_op_target_composition(int i, int j, const Composition& a) {
    std::vector<int> parts = a.parts;
    parts[i - 1] += 1;
    parts[j - 1] -= 1;
    require_input(parts[j - 1] >= 1, "zero-size resulting block");
    return Composition(std::move(parts));
}

// Delta_{i,j}: sums the swaps of one point of block i with one point of
// block j; endomorphism of M^a with row sums a_i * a_j.
inline RatMatrix laplace_op(int i, int j, const Composition& a, const OmegaIndex& space) {
    int h = a.length();
    require_input(1 <= i && i <= h && 1 <= j && j <= h && i != j, "block index out of range");
    require_input(space.composition() == a, "space mismatch");
    check_dense_cap(space);
    RatMatrix op(space.size(), space.size());
    for (int ai = 0; ai < space.size(); ++ai) {
        const auto& A = space.point(ai);
        for (int x : A.blocks[j - 1]) {
            for (int y : A.blocks[i - 1]) {
                Permutation swap = Permutation::transposition(space.n(), x, y);
                op(space.act_index(swap, ai), ai) += 1;
            }
        }
    }
    return op;
}

inline bool equivariance_check(const RatMatrix& T, const std::vector<Permutation>& generators,
                               const OmegaIndex& space) {
    require_input(T.rows() == space.size() && T.cols() == space.size(), "operator does not act on the space");
    for (const auto& g : generators) {
        require_input(g.degree() == space.n(), "generator degree mismatch");
        std::vector<int> im(space.size());
        for (int y = 0; y < space.size(); ++y) im[y] = space.act_index(g, y);
        for (int x = 0; x < space.size(); ++x)
            for (int y = 0; y < space.size(); ++y)
                if (T(im[x], im[y]) != T(x, y)) return false;
    }
    return true;
}

inline std::vector<Permutation> symmetric_group_generators(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(Permutation::transposition(n, 1, 2));
    if (n >= 3) {
        std::vector<int> cyc(n);
        for (int i = 1; i <= n; ++i) cyc[i - 1] = i % n + 1;
        gens.push_back(Permutation(std::move(cyc)));
    }
    return gens;
}

// Representing kernel of a G-equivariant operator: psi(x) = r(x, x_0),
// stored on the orbits of the base-point stabilizer.
struct InvariantKernel {
    const OmegaIndex* space;
    std::vector<int> orbit_of;        // K-orbit id per point index
    std::vector<int> orbit_rep;       // representative index per orbit
    std::vector<Rat> value_per_orbit;

    Rat at(int idx) const { return value_per_orbit[orbit_of[idx]]; }
    int orbit_count() const { return static_cast<int>(value_per_orbit.size()); }
};

inline InvariantKernel make_kernel_frame(const OmegaIndex& space) {
    InvariantKernel k;
    k.space = &space;
    auto orbits = subgroup_orbits(space.stabilizer_generators(), space);
    k.orbit_of.assign(space.size(), -1);
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        k.orbit_rep.push_back(orbits[oi][0]);
        for (int idx : orbits[oi]) k.orbit_of[idx] = static_cast<int>(oi);
    }
    k.value_per_orbit.assign(orbits.size(), Rat(0));
    return k;
}

inline InvariantKernel kernel_of(const RatMatrix& T, const OmegaIndex& space) {
    require_contract(equivariance_check(T, symmetric_group_generators(space.n()), space),
                     "kernel_of requires a G-equivariant operator");
    InvariantKernel k = make_kernel_frame(space);
    for (int x = 0; x < space.size(); ++x) {
        const Rat val = T(x, 0);
        int o = k.orbit_of[x];
        if (x == k.orbit_rep[o])
            k.value_per_orbit[o] = val;
        else
            require_contract(k.value_per_orbit[o] == val, "kernel not constant on stabilizer orbits");
    }
    return k;
}

inline RatMatrix kernel_to_operator(const InvariantKernel& psi) {
    const OmegaIndex& space = *psi.space;
    RatMatrix T(space.size(), space.size());
    for (int y = 0; y < space.size(); ++y) {
        Permutation inv = space.coset_representative(space.point(y)).inverse();
        for (int x = 0; x < space.size(); ++x) T(x, y) = psi.at(space.act_index(inv, x));
    }
    return T;
}

inline ModuleVector apply_kernel(const InvariantKernel& psi, const ModuleVector& f) {
    require_input(psi.space == f.space, "kernel and vector live on different spaces");
    const OmegaIndex& space = *psi.space;
    ModuleVector out = ModuleVector::zero(space);
    for (int y = 0; y < space.size(); ++y) {
        if (f.coeffs[y] == 0) continue;
        Permutation inv = space.coset_representative(space.point(y)).inverse();
        for (int x = 0; x < space.size(); ++x) out.coeffs[x] += psi.at(space.act_index(inv, x)) * f.coeffs[y];
    }
    return out;
}

// Kernel of the composed operator: convolve(kernel_of(T), kernel_of(S)) =
// kernel_of(T*S). The 1/|K| convolution normalization is folded in here.
inline InvariantKernel convolve(const InvariantKernel& psi1, const InvariantKernel& psi2) {
    require_input(psi1.space == psi2.space, "kernels live on different spaces");
    const OmegaIndex& space = *psi1.space;
    InvariantKernel out = make_kernel_frame(space);
    std::vector<Rat> full(space.size(), Rat(0));
    for (int y = 0; y < space.size(); ++y) {
        if (psi2.at(y) == 0) continue;
        Permutation inv = space.coset_representative(space.point(y)).inverse();
        for (int x = 0; x < space.size(); ++x) full[x] += psi1.at(space.act_index(inv, x)) * psi2.at(y);
    }
    for (int x = 0; x < space.size(); ++x) {
        int o = out.orbit_of[x];
        if (x == out.orbit_rep[o])
            out.value_per_orbit[o] = full[x];
        else
            require_contract(out.value_per_orbit[o] == full[x], "convolution escaped the bi-invariant algebra");
    }
    return out;
}

// psi-diamond: the kernel of the adjoint operator, psi^d(x) = r(x_0, x).
inline InvariantKernel kernel_adjoint(const InvariantKernel& psi) {
    const OmegaIndex& space = *psi.space;
    InvariantKernel out = make_kernel_frame(space);
    for (size_t o = 0; o < out.value_per_orbit.size(); ++o) {
        int x = out.orbit_rep[o];
        Permutation inv = space.coset_representative(space.point(x)).inverse();
        out.value_per_orbit[o] = psi.at(space.act_index(inv, 0));
    }
    return out;
}

// Number of orbits of the base-point stabilizer on the space.
inline long wielandt_count(const std::vector<Permutation>& stabilizer_generators, const OmegaIndex& space) {
    for (const auto& g : stabilizer_generators)
        require_input(act(g, space.base_point()) == space.base_point(),
                      "generators must stabilize the base point blockwise");
    return static_cast<long>(subgroup_orbits(stabilizer_generators, space).size());
}

// Multiplicity of S^lambda in M^a: the dimension of the S_a-invariant
// vectors, (1/|S_a|) sum over k in S_a of chi_lambda(k). The sum is taken
// over combined cycle types of the Young subgroup.
inline Int multiplicity(const Partition& lambda, const Composition& a) {
    require_input(lambda.n() == a.n(), "lambda must partition sum(a)");
    Int total = 0;
    std::vector<std::vector<Partition>> block_types;
    for (int p : a.parts) block_types.push_back(partitions_of(p));
    std::vector<int> merged;
    auto rec = [&](auto&& self, size_t bi, const Int& weight) -> void {
        if (bi == block_types.size()) {
            std::vector<int> type = merged;
            std::sort(type.rbegin(), type.rend());
            total += weight * sn_character(lambda, Partition(std::move(type)));
            return;
        }
        for (const auto& t : block_types[bi]) {
            merged.insert(merged.end(), t.parts.begin(), t.parts.end());
            self(self, bi + 1, weight * class_size(t));
            merged.resize(merged.size() - t.parts.size());
        }
    };
    rec(rec, 0, Int(1));
    Int order = 1;
    for (int p : a.parts) order *= factorial(p);
    require_contract(total % order == 0, "invariant dimension must be integral");
    return total / order;
}

// Central-idempotent projectors onto the S^lambda-isotypic components of
// M^a, one shared sweep over S_n for all requested lambdas.
inline std::vector<RatMatrix> isotypic_projectors(const std::vector<Partition>& lambdas, const OmegaIndex& space) {
    check_dense_cap(space);
    int n = space.n();
    for (const auto& l : lambdas) require_input(l.n() == n, "lambda must partition n");
    std::vector<std::vector<long>> acc(lambdas.size());
    for (auto& a : acc) a.assign(static_cast<size_t>(space.size()) * space.size(), 0);
    std::map<std::vector<int>, std::vector<long>> chi_by_type;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<int> dest(space.size());
    do {
        Permutation sigma = Permutation(img);
        auto type = sigma.cycle_type();
        auto it = chi_by_type.find(type);
        if (it == chi_by_type.end()) {
            std::vector<long> chis;
            for (const auto& l : lambdas) chis.push_back(sn_character(l, Partition(type)));
            it = chi_by_type.emplace(type, std::move(chis)).first;
        }
        for (int y = 0; y < space.size(); ++y) dest[y] = space.act_index(sigma, y);
        for (size_t li = 0; li < lambdas.size(); ++li) {
            long chi = it->second[li];
            if (chi == 0) continue;
            auto& a = acc[li];
            for (int y = 0; y < space.size(); ++y) a[static_cast<size_t>(dest[y]) * space.size() + y] += chi;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    std::vector<RatMatrix> out;
    Int nfact = factorial(n);
    for (size_t li = 0; li < lambdas.size(); ++li) {
        RatMatrix e(space.size(), space.size());
        Rat scale = make_rat(hook_dimension(lambdas[li]), nfact);
        for (int x = 0; x < space.size(); ++x)
            for (int y = 0; y < space.size(); ++y) {
                long v = acc[li][static_cast<size_t>(x) * space.size() + y];
                if (v != 0) e(x, y) = scale * Rat(v);
            }
        out.push_back(std::move(e));
    }
    return out;
}

inline RatMatrix isotypic_projector(const Partition& lambda, const OmegaIndex& space) {
    return isotypic_projectors({lambda}, space)[0];
}

}  // namespace homspec
