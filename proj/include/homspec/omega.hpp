#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "homspec/errors.hpp"
#include "homspec/partitions.hpp"
#include "homspec/permutation.hpp"

namespace homspec {

inline constexpr long kOmegaEnumerationCap = 250000;

// Ordered tuple of disjoint blocks partitioning {1..n}. Canonically encoded
// by its word: word[i-1] = index (1-based) of the block containing point i.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;  // each sorted increasing

    int n() const {
        int s = 0;
        for (const auto& b : blocks) s += static_cast<int>(b.size());
        return s;
    }

    Composition type() const {
        std::vector<int> t;
        t.reserve(blocks.size());
        for (const auto& b : blocks) t.push_back(static_cast<int>(b.size()));
        return Composition(std::move(t));
    }

    std::vector<int> word() const {
        std::vector<int> w(n());
        for (size_t bi = 0; bi < blocks.size(); ++bi)
            for (int x : blocks[bi]) w[x - 1] = static_cast<int>(bi) + 1;
        return w;
    }

    static OrderedSetPartition from_word(const std::vector<int>& w, int h) {
        OrderedSetPartition p;
        p.blocks.assign(h, {});
        for (size_t i = 0; i < w.size(); ++i) p.blocks[w[i] - 1].push_back(static_cast<int>(i) + 1);
        return p;
    }

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks == b.blocks;
    }
};

inline OrderedSetPartition act(const Permutation& sigma, const OrderedSetPartition& A) {
    require_input(sigma.degree() == A.n(), "permutation degree does not match the partitioned set");
    OrderedSetPartition out;
    out.blocks.reserve(A.blocks.size());
    for (const auto& b : A.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(sigma(x));
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

// The homogeneous space Omega_a with its canonical enumeration: points are
// ordered lexicographically by word. Index 0 is the base point A* whose
// blocks are the consecutive intervals {1..a_1}, {a_1+1..a_1+a_2}, ...
class OmegaIndex {
public:
    explicit OmegaIndex(Composition a) : comp_(std::move(a)) {
        int n = comp_.n();
        Int count = factorial(n);
        for (int p : comp_.parts) count /= factorial(p);
        if (count > kOmegaEnumerationCap)
            throw resource_cap_error("Omega_a has " + count.get_str() + " points, enumeration cap is " +
                                     std::to_string(kOmegaEnumerationCap));
        std::vector<int> w;
        w.reserve(n);
        for (int bi = 0; bi < comp_.length(); ++bi) w.insert(w.end(), comp_.parts[bi], bi + 1);
        // Ascending start word is the lex minimum; next_permutation walks the
        // remaining multiset permutations in lex order.
        do {
            index_by_word_.emplace(w, static_cast<int>(points_.size()));
            points_.push_back(OrderedSetPartition::from_word(w, comp_.length()));
        } while (std::next_permutation(w.begin(), w.end()));
    }

    const Composition& composition() const { return comp_; }
    int n() const { return comp_.n(); }
    int size() const { return static_cast<int>(points_.size()); }
    const OrderedSetPartition& point(int idx) const { return points_[idx]; }
    const std::vector<OrderedSetPartition>& points() const { return points_; }
    const OrderedSetPartition& base_point() const { return points_[0]; }

    int index_of(const OrderedSetPartition& p) const {
        auto it = index_by_word_.find(p.word());
        require_input(it != index_by_word_.end(), "point does not belong to this space");
        return it->second;
    }

    int act_index(const Permutation& sigma, int idx) const { return index_of(act(sigma, points_[idx])); }

    // Representative sigma_B with sigma_B(A*) = B: maps the k-th point of A*
    // listed blockwise (that is, the point k itself) to the k-th point of B
    // listed blockwise in increasing order.
    Permutation coset_representative(const OrderedSetPartition& B) const {
        require_input(B.type() == comp_, "type mismatch");
        std::vector<int> im;
        im.reserve(n());
        for (const auto& b : B.blocks) im.insert(im.end(), b.begin(), b.end());
        return Permutation(std::move(im));
    }

    // Generators of the stabilizer S_a of the base point: the adjacent
    // transpositions inside each base block.
    std::vector<Permutation> stabilizer_generators() const {
        std::vector<Permutation> gens;
        int start = 1;
        for (int p : comp_.parts) {
            for (int t = start; t < start + p - 1; ++t) gens.push_back(Permutation::transposition(n(), t, t + 1));
            start += p;
        }
        return gens;
    }

private:
    Composition comp_;
    std::vector<OrderedSetPartition> points_;
    std::map<std::vector<int>, int> index_by_word_;
};

inline OmegaIndex enumerate_omega(const Composition& a) { return OmegaIndex(a); }

// Orbits of the group generated by `generators` on the index range of
// `space`, each orbit sorted, orbits ordered by minimal element.
inline std::vector<std::vector<int>> subgroup_orbits(const std::vector<Permutation>& generators,
                                                     const OmegaIndex& space) {
    for (const auto& g : generators)
        require_input(g.degree() == space.n(), "generator degree does not match the space");
    std::vector<std::vector<int>> gen_images;
    gen_images.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<int> im(space.size());
        for (int i = 0; i < space.size(); ++i) im[i] = space.act_index(g, i);
        gen_images.push_back(std::move(im));
    }
    std::vector<char> seen(space.size(), 0);
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < space.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit = {start};
        seen[start] = 1;
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& im : gen_images) {
                int next = im[orbit[head]];
                if (!seen[next]) {
                    seen[next] = 1;
                    orbit.push_back(next);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Pair view of spaces whose composition has exactly two singleton blocks:
// the point is exposed as (i, j) with i in the first singleton block and j
// in the second.
struct PairView {
    const OmegaIndex* space;
    int first_block;   // 0-based block index holding i
    int second_block;  // 0-based block index holding j

    explicit PairView(const OmegaIndex& sp) : space(&sp) {
        const auto& parts = sp.composition().parts;
        std::vector<int> singles;
        for (int b = 0; b < static_cast<int>(parts.size()); ++b)
            if (parts[b] == 1) singles.push_back(b);
        require_input(singles.size() == 2, "pair view requires exactly two singleton blocks");
        first_block = singles[0];
        second_block = singles[1];
    }

    std::pair<int, int> pair_of(int idx) const {
        const auto& p = space->point(idx);
        return {p.blocks[first_block][0], p.blocks[second_block][0]};
    }

    int index_of_pair(int i, int j) const {
        int n = space->n();
        require_input(i != j && 1 <= i && i <= n && 1 <= j && j <= n, "pair entries must be distinct points");
        OrderedSetPartition p;
        p.blocks.assign(space->composition().length(), {});
        p.blocks[first_block] = {i};
        p.blocks[second_block] = {j};
        if (space->composition().length() > 2) {
            int big = 0;
            while (big == first_block || big == second_block) ++big;
            for (int x = 1; x <= n; ++x)
                if (x != i && x != j) p.blocks[big].push_back(x);
        }
        return space->index_of(p);
    }
};

}  // namespace homspec
