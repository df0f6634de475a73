#pragma once

#include <string>
#include <vector>

#include "homspec/gt.hpp"
#include "homspec/invariant.hpp"

namespace homspec {

// Pair-module statistics: per-coordinate sums used by every displayed
// projector formula on Omega_{(n-2,1,1)}.
struct PairSums {
    std::vector<Rat> row;  // row[i] = sum over k != i of f(i,k)
    std::vector<Rat> col;  // col[j] = sum over h != j of f(h,j)
    Rat total;
};

inline PairSums pair_sums(const ModuleVector& f, const PairView& pv) {
    int n = f.space->n();
    PairSums s{std::vector<Rat>(n + 1, Rat(0)), std::vector<Rat>(n + 1, Rat(0)), Rat(0)};
    for (int idx = 0; idx < f.space->size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        s.row[i] += f.coeffs[idx];
        s.col[j] += f.coeffs[idx];
        s.total += f.coeffs[idx];
    }
    return s;
}

namespace m211 {

inline void check_pair_module(const OmegaIndex& space) {
    require_input(space.n() >= 4, "decompositions need n >= 4");
    const auto& parts = space.composition().parts;
    require_input(parts.size() == 3 && parts[1] == 1 && parts[2] == 1, "expected the module M^{n-2,1,1}");
}

inline ModuleVector mean_component(const ModuleVector& f) {
    const OmegaIndex& space = *f.space;
    Rat total = 0;
    for (const auto& c : f.coeffs) total += c;
    Rat avg = total / space.size();
    return ModuleVector(space, std::vector<Rat>(space.size(), avg));
}

inline ModuleVector p_sym(const ModuleVector& f, const PairView& pv) {
    ModuleVector out = ModuleVector::zero(*f.space);
    for (int idx = 0; idx < f.space->size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        out.coeffs[idx] = (f.coeffs[idx] + f.coeffs[pv.index_of_pair(j, i)]) / 2;
    }
    return out;
}

inline ModuleVector p_antisym(const ModuleVector& f, const PairView& pv) {
    ModuleVector out = ModuleVector::zero(*f.space);
    for (int idx = 0; idx < f.space->size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        out.coeffs[idx] = (f.coeffs[idx] - f.coeffs[pv.index_of_pair(j, i)]) / 2;
    }
    return out;
}

// Displayed standard-component projector inside the symmetric part.
inline ModuleVector e1_sym(const ModuleVector& f, const PairView& pv) {
    const OmegaIndex& space = *f.space;
    int n = space.n();
    PairSums s = pair_sums(f, pv);
    ModuleVector out = ModuleVector::zero(space);
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        Rat fij = f.coeffs[idx];
        Rat fji = f.coeffs[pv.index_of_pair(j, i)];
        Rat star = s.row[i] - fij + s.row[j] - fji + s.col[i] - fji + s.col[j] - fij;
        Rat rest = s.total - s.row[i] - s.row[j] - s.col[i] - s.col[j] + fij + fji;
        out.coeffs[idx] =
            make_rat(1, n) * (fij + fji + make_rat(n - 4, 2L * (n - 2)) * star - make_rat(2, n - 2) * rest);
    }
    return out;
}

// Displayed standard-component projector inside the antisymmetric part.
inline ModuleVector e1_antisym(const ModuleVector& f, const PairView& pv) {
    const OmegaIndex& space = *f.space;
    int n = space.n();
    PairSums s = pair_sums(f, pv);
    ModuleVector out = ModuleVector::zero(space);
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        Rat fij = f.coeffs[idx];
        Rat fji = f.coeffs[pv.index_of_pair(j, i)];
        Rat half = make_rat(1, 2);
        out.coeffs[idx] = make_rat(1, n) * (fij + half * (s.row[i] - fij) + half * (s.col[j] - fij) -
                                            half * (s.col[i] - fji) - half * (s.row[j] - fji) - fji);
    }
    return out;
}

// Projection onto functions of the second coordinate.
inline ModuleVector p_last(const ModuleVector& f, const PairView& pv) {
    const OmegaIndex& space = *f.space;
    int n = space.n();
    PairSums s = pair_sums(f, pv);
    ModuleVector out = ModuleVector::zero(space);
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        (void)i;
        out.coeffs[idx] = make_rat(1, n - 1) * s.col[j];
    }
    return out;
}

inline ModuleVector subtract(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

// The five component vectors of the sym-antisym chain, in report order
// {mean, S^{n-1,1}_S, S^{n-2,2}, S^{n-1,1}_A, S^{n-2,1,1}}.
inline std::vector<ModuleVector> components_chain_A(const ModuleVector& f, const PairView& pv) {
    ModuleVector mean = mean_component(f);
    ModuleVector fs = p_sym(f, pv);
    ModuleVector fa = p_antisym(f, pv);
    ModuleVector fs1 = e1_sym(f, pv);
    ModuleVector fa1 = e1_antisym(f, pv);
    ModuleVector fs2 = subtract(subtract(fs, fs1), mean);
    ModuleVector f11 = subtract(fa, fa1);
    return {std::move(mean), std::move(fs1), std::move(fs2), std::move(fa1), std::move(f11)};
}

// The five component vectors of the last-coordinate chain, in report order
// {mean, S^{n-1,1}_1, S^{n-1,1}_2, S^{n-2,2}, S^{n-2,1,1}}. The last two
// blocks coincide with those of the sym-antisym chain.
inline std::vector<ModuleVector> components_chain_B(const ModuleVector& f, const PairView& pv) {
    const OmegaIndex& space = *f.space;
    int n = space.n();
    ModuleVector mean = mean_component(f);
    ModuleVector f1 = subtract(p_last(f, pv), mean);
    ModuleVector f2 = e12_fast(f);
    ModuleVector fs2 = subtract(subtract(p_sym(f, pv), e1_sym(f, pv)), mean);
    ModuleVector f11 = subtract(p_antisym(f, pv), e1_antisym(f, pv));

    // Shape checks: the level-1 block is a zero-mean function of j alone and
    // the level-2 block has the (n-1)g(i) + g(j) form with zero-mean g.
    PairSums s1 = pair_sums(f1, pv);
    require_contract(s1.total == 0, "level-1 block must have zero mean");
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        (void)i;
        require_contract(f1.coeffs[idx] == s1.col[j] / (n - 1), "level-1 block must depend on j only");
    }
    PairSums s2 = pair_sums(f2, pv);
    for (int idx = 0; idx < space.size(); ++idx) {
        auto [i, j] = pv.pair_of(idx);
        Rat gi = s2.row[i] / (long(n) * (n - 2));
        Rat gj = s2.row[j] / (long(n) * (n - 2));
        require_contract(f2.coeffs[idx] == Rat(n - 1) * gi + gj,
                         "level-2 block must have the (n-1)g(i) + g(j) shape");
    }

    return {std::move(mean), std::move(f1), std::move(f2), std::move(fs2), std::move(f11)};
}

inline const std::vector<std::pair<std::string, std::string>>& chain_A_labels() {
    static const std::vector<std::pair<std::string, std::string>> labels = {
        {"mean", "average vote"},
        {"S^{n-1,1}_S", "effect of the popularity of the single inside an unordered pair"},
        {"S^{n-2,2}", "vote of the unordered pair without the effect of the singles"},
        {"S^{n-1,1}_A", "effect of the single in the ordered pair without the effect of the unordered pairs"},
        {"S^{n-2,1,1}", "vote to the ordered pair without all the other effects"}};
    return labels;
}

inline const std::vector<std::pair<std::string, std::string>>& chain_B_labels() {
    static const std::vector<std::pair<std::string, std::string>> labels = {
        {"mean", "average vote"},
        {"S^{n-1,1}_1", "average vote for the director candidate, centered"},
        {"S^{n-1,1}_2", "president/director effect beyond the director average"},
        {"S^{n-2,2}", "vote of the unordered pair without the effect of the singles"},
        {"S^{n-2,1,1}", "vote to the ordered pair without all the other effects"}};
    return labels;
}

}  // namespace m211

struct DecompositionComponent {
    std::string name;
    std::string interpretation;
    RatMatrix projector;
    long dimension;  // rank of the projector
    ModuleVector component;
    Rat energy;  // exact squared norm of the component
};

struct DecompositionReport {
    std::string chain_label;  // "sym-antisym" or "last-coordinate"
    std::vector<DecompositionComponent> components;
    Rat input_norm_sq;
};

// The five projectors of a chain as explicit matrices (columns are the
// component vectors of the delta basis).
inline std::vector<RatMatrix> chain_projectors(const OmegaIndex& space, const std::string& chain_label) {
    m211::check_pair_module(space);
    check_dense_cap(space);
    PairView pv(space);
    std::vector<RatMatrix> ps(5, RatMatrix(space.size(), space.size()));
    for (int c = 0; c < space.size(); ++c) {
        ModuleVector delta = ModuleVector::delta(space, c);
        auto comps = chain_label == "sym-antisym" ? m211::components_chain_A(delta, pv)
                                                  : m211::components_chain_B(delta, pv);
        for (int p = 0; p < 5; ++p)
            for (int r = 0; r < space.size(); ++r) ps[p](r, c) = comps[p].coeffs[r];
    }
    return ps;
}

namespace m211 {

inline DecompositionReport assemble_report(const ModuleVector& f, const std::string& chain_label) {
    const OmegaIndex& space = *f.space;
    check_pair_module(space);
    PairView pv(space);
    auto comps = chain_label == "sym-antisym" ? components_chain_A(f, pv) : components_chain_B(f, pv);
    const auto& labels = chain_label == "sym-antisym" ? chain_A_labels() : chain_B_labels();
    auto projectors = chain_projectors(space, chain_label);

    DecompositionReport rep{chain_label, {}, norm_sq(f.coeffs)};
    Rat energy_total = 0;
    std::vector<Rat> resum(space.size(), Rat(0));
    for (int p = 0; p < 5; ++p) {
        Rat e = norm_sq(comps[p].coeffs);
        energy_total += e;
        for (int r = 0; r < space.size(); ++r) resum[r] += comps[p].coeffs[r];
        rep.components.push_back(DecompositionComponent{labels[p].first, labels[p].second, projectors[p],
                                                        rank(projectors[p]), std::move(comps[p]), e});
    }
    require_contract(energy_total == rep.input_norm_sq, "Parseval failed");
    require_contract(resum == f.coeffs, "components do not resum to the input");
    return rep;
}

}  // namespace m211

inline DecompositionReport decompose_chain_A(const ModuleVector& f) {
    return m211::assemble_report(f, "sym-antisym");
}

inline DecompositionReport decompose_chain_B(const ModuleVector& f) {
    return m211::assemble_report(f, "last-coordinate");
}

struct BallotRow {
    int president;
    int director;
    long count;
};

struct TopEntry {
    int president;
    int director;
    Rat value;
};

struct ElectionReport {
    int candidates;
    long total_votes;
    DecompositionReport chain_a;
    DecompositionReport chain_b;
    std::vector<std::vector<TopEntry>> top_a;  // per chain-A component
    std::vector<std::vector<TopEntry>> top_b;  // per chain-B component
};

inline ModuleVector aggregate_ballots(const std::vector<BallotRow>& ballots, const OmegaIndex& space) {
    PairView pv(space);
    int n = space.n();
    ModuleVector f = ModuleVector::zero(space);
    for (const auto& b : ballots) {
        require_input(b.president != b.director, "president and director must differ");
        require_input(1 <= b.president && b.president <= n && 1 <= b.director && b.director <= n,
                      "candidate out of range");
        require_input(b.count >= 0, "counts must be nonnegative");
        f.coeffs[pv.index_of_pair(b.president, b.director)] += b.count;
    }
    return f;
}

inline std::vector<TopEntry> top_entries(const ModuleVector& v, const PairView& pv, size_t limit) {
    std::vector<TopEntry> all;
    for (int idx = 0; idx < v.space->size(); ++idx) {
        if (v.coeffs[idx] == 0) continue;
        auto [i, j] = pv.pair_of(idx);
        all.push_back(TopEntry{i, j, v.coeffs[idx]});
    }
    std::stable_sort(all.begin(), all.end(), [](const TopEntry& a, const TopEntry& b) {
        Rat aa = abs(a.value), bb = abs(b.value);
        if (aa != bb) return aa > bb;
        if (a.president != b.president) return a.president < b.president;
        return a.director < b.director;
    });
    if (all.size() > limit) all.resize(limit);
    return all;
}

inline ElectionReport election_report(const std::vector<BallotRow>& ballots, const OmegaIndex& space,
                                      size_t top_limit = 5) {
    ModuleVector f = aggregate_ballots(ballots, space);
    PairView pv(space);
    ElectionReport rep{space.n(), 0, decompose_chain_A(f), decompose_chain_B(f), {}, {}};
    for (const auto& b : ballots) rep.total_votes += b.count;
    for (const auto& c : rep.chain_a.components) rep.top_a.push_back(top_entries(c.component, pv, top_limit));
    for (const auto& c : rep.chain_b.components) rep.top_b.push_back(top_entries(c.component, pv, top_limit));
    return rep;
}

}  // namespace homspec
