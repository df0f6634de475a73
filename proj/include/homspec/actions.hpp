#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "homspec/errors.hpp"
#include "homspec/permutation.hpp"
#include "homspec/rational.hpp"

namespace homspec {

inline long group_closure_cap() {
    if (const char* env = std::getenv("HOMSPEC_MAX_GROUP")) {
        long cap = std::atol(env);
        if (cap > 0) return cap;
    }
    return 1000000;
}

// A finite group given by permutation generators on {1..degree}, with a base
// point. The closure is enumerated on demand (breadth first, capped) and
// cached behind a mutex so concurrent callers observe one consistent group.
class FiniteAction {
public:
    FiniteAction(int degree, std::vector<Permutation> generators, int base_point)
        : degree_(degree), gens_(std::move(generators)), base_(base_point) {
        require_input(1 <= base_ && base_ <= degree_, "base point out of range");
        for (const auto& g : gens_) require_input(g.degree() == degree_, "generator degree mismatch");
    }

    int degree() const { return degree_; }
    int base_point() const { return base_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const std::vector<Permutation>& elements() const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->elements.empty()) {
            long cap = group_closure_cap();
            std::set<std::vector<int>> seen;
            std::vector<Permutation> queue = {Permutation::identity(degree_)};
            seen.insert(queue[0].images());
            for (size_t head = 0; head < queue.size(); ++head) {
                Permutation current = queue[head];
                for (const auto& g : gens_) {
                    Permutation next = current * g;
                    if (seen.insert(next.images()).second) {
                        if (static_cast<long>(seen.size()) > cap)
                            throw resource_cap_error("group closure exceeds cap of " + std::to_string(cap));
                        queue.push_back(std::move(next));
                    }
                }
            }
            cache_->elements = std::move(queue);
        }
        return cache_->elements;
    }

    long order() const { return static_cast<long>(elements().size()); }

    std::vector<Permutation> point_stabilizer(int point) const {
        std::vector<Permutation> out;
        for (const auto& g : elements())
            if (g(point) == point) out.push_back(g);
        return out;
    }

    std::vector<Permutation> setwise_stabilizer(const std::vector<int>& block) const {
        std::set<int> want(block.begin(), block.end());
        std::vector<Permutation> out;
        for (const auto& g : elements()) {
            bool keeps = true;
            for (int x : block)
                if (!want.count(g(x))) {
                    keeps = false;
                    break;
                }
            if (keeps) out.push_back(g);
        }
        return out;
    }

    bool contains(const Permutation& g) const {
        for (const auto& h : elements())
            if (h == g) return true;
        return false;
    }

private:
    // Copies share one lazily built closure; the mutex publishes it safely.
    struct Cache {
        std::mutex mutex;
        std::vector<Permutation> elements;
    };

    int degree_;
    std::vector<Permutation> gens_;
    int base_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Orbits of a set of permutations on {1..degree}, sorted by minimal point.
inline std::vector<std::vector<int>> point_orbits(const std::vector<Permutation>& perms, int degree) {
    std::vector<char> seen(degree + 1, 0);
    std::vector<std::vector<int>> orbits;
    for (int start = 1; start <= degree; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit = {start};
        seen[start] = 1;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& g : perms) {
                int next = g(orbit[head]);
                if (!seen[next]) {
                    seen[next] = 1;
                    orbit.push_back(next);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Suborbits: the orbits of the base-point stabilizer, with Lambda_0 = {base}
// first and the rest ordered by minimal point.
struct SuborbitDecomposition {
    const FiniteAction* action;
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of;  // per point, index into orbits

    int count() const { return static_cast<int>(orbits.size()); }
};

inline SuborbitDecomposition suborbits(const FiniteAction& action) {
    require_input(point_orbits(action.generators(), action.degree()).size() == 1,
                  "suborbits need a transitive action");
    auto stab = action.point_stabilizer(action.base_point());
    auto orbits = point_orbits(stab, action.degree());
    std::stable_sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
        bool a0 = a[0] == action.base_point() && a.size() == 1;
        bool b0 = b[0] == action.base_point() && b.size() == 1;
        if (a0 != b0) return a0;
        return a[0] < b[0];
    });
    SuborbitDecomposition dec{&action, std::move(orbits), std::vector<int>(action.degree() + 1, -1)};
    for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
        for (int p : dec.orbits[oi]) dec.orbit_of[p] = static_cast<int>(oi);
    return dec;
}

// A partition of {1..degree} each generator permutes setwise.
struct InvariantPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // per point

    static InvariantPartition from_blocks(std::vector<std::vector<int>> blocks, const FiniteAction& action) {
        InvariantPartition q;
        q.blocks = std::move(blocks);
        q.block_of.assign(action.degree() + 1, -1);
        for (size_t bi = 0; bi < q.blocks.size(); ++bi)
            for (int p : q.blocks[bi]) {
                require_input(1 <= p && p <= action.degree() && q.block_of[p] == -1,
                              "blocks must partition the point set");
                q.block_of[p] = static_cast<int>(bi);
            }
        for (int p = 1; p <= action.degree(); ++p) require_input(q.block_of[p] >= 0, "partition misses a point");
        for (const auto& g : action.generators())
            for (const auto& block : q.blocks) {
                int image_block = q.block_of[g(block[0])];
                for (int p : block)
                    require_input(q.block_of[g(p)] == image_block, "partition is not invariant");
            }
        return q;
    }

    static InvariantPartition equality(const FiniteAction& action) {
        std::vector<std::vector<int>> blocks;
        for (int p = 1; p <= action.degree(); ++p) blocks.push_back({p});
        return from_blocks(std::move(blocks), action);
    }

    static InvariantPartition universal(const FiniteAction& action) {
        std::vector<int> all;
        for (int p = 1; p <= action.degree(); ++p) all.push_back(p);
        return from_blocks({all}, action);
    }
};

namespace detail {

// Classes of suborbit indices induced by a coarser orbit partition; the
// class of Lambda_0 comes first, the rest follow their minimal member.
inline std::vector<std::vector<int>> group_suborbits(const SuborbitDecomposition& dec,
                                                     const std::vector<std::vector<int>>& coarse) {
    std::map<int, std::set<int>> by_coarse;  // coarse block id (by min point) -> suborbit ids
    std::map<int, int> coarse_of;
    for (size_t ci = 0; ci < coarse.size(); ++ci)
        for (int p : coarse[ci]) coarse_of[p] = static_cast<int>(ci);
    for (int oi = 0; oi < dec.count(); ++oi) by_coarse[coarse_of[dec.orbits[oi][0]]].insert(oi);
    std::vector<std::vector<int>> classes;
    for (auto& [ci, ids] : by_coarse) classes.emplace_back(ids.begin(), ids.end());
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        bool a0 = a.front() == 0, b0 = b.front() == 0;
        if (a0 != b0) return a0;
        return a.front() < b.front();
    });
    return classes;
}

}  // namespace detail

// ~ classes: suborbits merged by the orbits of the setwise stabilizer S of
// the block containing the base point.
inline std::vector<std::vector<int>> sim_classes(const SuborbitDecomposition& dec, const InvariantPartition& q) {
    const FiniteAction& action = *dec.action;
    const auto& b0 = q.blocks[q.block_of[action.base_point()]];
    auto s_orbits = point_orbits(action.setwise_stabilizer(b0), action.degree());
    return detail::group_suborbits(dec, s_orbits);
}

// ~~ classes: the supremum of the suborbit partition and q, via union-find
// joining suborbits that share a q-block.
inline std::vector<std::vector<int>> approx_classes(const SuborbitDecomposition& dec,
                                                    const InvariantPartition& q) {
    int m = dec.count();
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& block : q.blocks) {
        int first = find(dec.orbit_of[block[0]]);
        for (int p : block) parent[find(dec.orbit_of[p])] = first;
    }
    std::vector<std::vector<int>> merged(m);
    for (int i = 0; i < m; ++i) merged[find(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& c : merged)
        if (!c.empty()) classes.push_back(std::move(c));
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        bool a0 = a.front() == 0, b0 = b.front() == 0;
        if (a0 != b0) return a0;
        return a.front() < b.front();
    });
    return classes;
}

// Convolution of H-invariant functions on Y = F/H, with the 1/|H| factor:
// (xi * eta)(y) = (1/|H|) sum_{u in F} xi(u y_0) eta(u^{-1} y).
inline std::vector<Rat> bi_invariant_convolve(const FiniteAction& action, const std::vector<Rat>& xi,
                                              const std::vector<Rat>& eta) {
    long stab_order = action.order() / point_orbits(action.generators(), action.degree())[0].size();
    std::vector<Rat> out(action.degree() + 1, Rat(0));
    for (const auto& u : action.elements()) {
        const Rat& x = xi[u(action.base_point())];
        if (x == 0) continue;
        Permutation inv = u.inverse();
        for (int y = 1; y <= action.degree(); ++y) {
            const Rat& e = eta[inv(y)];
            if (e != 0) out[y] += x * e;
        }
    }
    Rat scale = make_rat(1, stab_order);
    for (auto& v : out) v *= scale;
    return out;
}

inline std::vector<Rat> indicator(const std::vector<int>& points, int degree) {
    std::vector<Rat> out(degree + 1, Rat(0));
    for (int p : points) out[p] = 1;
    return out;
}

enum class IdealSide { right, left };

struct IdealCheckResult {
    bool ok;
    std::vector<std::vector<int>> classes;  // the merged classes used
    std::vector<Rat> witnesses;             // scalar m_i (right) or M_i (left) per suborbit
    std::string failure;                    // empty when ok
};

// Verifies 1_{B_0} * 1_{Lambda_i} = m_i 1_{Lambda_[i]} (right) or the left
// analogue with the ~~ classes, by exact convolution.
inline IdealCheckResult ideal_check(const SuborbitDecomposition& dec, const InvariantPartition& q,
                                    IdealSide side) {
    const FiniteAction& action = *dec.action;
    const auto& b0_block = q.blocks[q.block_of[action.base_point()]];
    std::vector<Rat> b0 = indicator(b0_block, action.degree());
    auto classes = side == IdealSide::right ? sim_classes(dec, q) : approx_classes(dec, q);
    std::vector<int> class_of(dec.count(), -1);
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (int oi : classes[ci]) class_of[oi] = static_cast<int>(ci);

    IdealCheckResult result{true, classes, {}, ""};
    for (int oi = 0; oi < dec.count(); ++oi) {
        std::vector<Rat> lam = indicator(dec.orbits[oi], action.degree());
        std::vector<Rat> conv = side == IdealSide::right ? bi_invariant_convolve(action, b0, lam)
                                                         : bi_invariant_convolve(action, lam, b0);
        // Expected support: the class of suborbit oi.
        std::set<int> support;
        for (int oj : classes[class_of[oi]])
            for (int p : dec.orbits[oj]) support.insert(p);
        Rat witness = conv[*support.begin()];
        for (int p = 1; p <= action.degree(); ++p) {
            Rat expected = support.count(p) ? witness : Rat(0);
            if (conv[p] != expected) {
                result.ok = false;
                result.failure = "convolution of suborbit " + std::to_string(oi) +
                                 " is not a multiple of its class indicator";
            }
        }
        result.witnesses.push_back(witness);
    }
    return result;
}

// 1_{B_0} is central iff it commutes with every suborbit indicator.
inline bool b0_is_central(const SuborbitDecomposition& dec, const InvariantPartition& q) {
    const FiniteAction& action = *dec.action;
    std::vector<Rat> b0 = indicator(q.blocks[q.block_of[action.base_point()]], action.degree());
    for (int oi = 0; oi < dec.count(); ++oi) {
        std::vector<Rat> lam = indicator(dec.orbits[oi], action.degree());
        if (bi_invariant_convolve(action, b0, lam) != bi_invariant_convolve(action, lam, b0)) return false;
    }
    return true;
}

// Crested product data: outer group G on X with invariant partition P, inner
// group F on Y with normal subgroup N whose orbit partition is Q.
struct CrestedSpec {
    FiniteAction outer;              // G on X
    InvariantPartition outer_blocks; // P
    FiniteAction inner;              // F on Y
    std::vector<Permutation> normal_generators;  // generators of N <= F
};

namespace detail {

inline void validate_crested(const CrestedSpec& spec) {
    const FiniteAction& f = spec.inner;
    for (const auto& v : spec.normal_generators) {
        require_input(v.degree() == f.degree(), "normal generator degree mismatch");
        require_input(f.contains(v), "N must sit inside the inner group");
    }
    // Normality: conjugates of N-generators stay in N.
    std::vector<Permutation> ngens = spec.normal_generators;
    if (ngens.empty()) ngens.push_back(Permutation::identity(f.degree()));
    FiniteAction n_group(f.degree(), std::move(ngens), spec.inner.base_point());
    for (const auto& g : f.generators())
        for (const auto& v : spec.normal_generators)
            require_input(n_group.contains(g * v * g.inverse()), "N must be normal in the inner group");
}

}  // namespace detail

// Orbit partition of N on Y; this is the partition Q by definition.
inline InvariantPartition crested_q_partition(const CrestedSpec& spec) {
    auto blocks = point_orbits(spec.normal_generators, spec.inner.degree());
    return InvariantPartition::from_blocks(std::move(blocks), spec.inner);
}

struct CrestedOrbits {
    std::vector<std::vector<std::pair<int, int>>> orbits;  // sorted (x, y) pairs
    std::vector<std::vector<int>> outer_suborbits;         // Xi_i
    std::vector<std::vector<int>> inner_suborbits;         // Lambda_j
    std::vector<int> i0;                                   // indices with Xi_i inside A_0
    std::vector<std::vector<int>> sim;                     // ~ classes of inner suborbit indices
};

// Closed-form R-orbit decomposition of X x Y:
// {Xi_i x Lambda_j : i in I_0} u {Xi_i x Lambda_[j] : i not in I_0}.
inline CrestedOrbits crested_orbits(const CrestedSpec& spec) {
    detail::validate_crested(spec);
    InvariantPartition q = crested_q_partition(spec);

    SuborbitDecomposition xdec = suborbits(spec.outer);
    SuborbitDecomposition ydec = suborbits(spec.inner);
    const auto& a0 = spec.outer_blocks.blocks[spec.outer_blocks.block_of[spec.outer.base_point()]];
    std::set<int> a0_points(a0.begin(), a0.end());

    CrestedOrbits out;
    out.outer_suborbits = xdec.orbits;
    out.inner_suborbits = ydec.orbits;
    out.sim = sim_classes(ydec, q);
    std::vector<int> sim_of(ydec.count());
    for (size_t ci = 0; ci < out.sim.size(); ++ci)
        for (int oj : out.sim[ci]) sim_of[oj] = static_cast<int>(ci);

    for (int i = 0; i < xdec.count(); ++i) {
        bool inside = a0_points.count(xdec.orbits[i][0]) > 0;
        // A_0 is K-invariant, so Xi_i is inside or disjoint.
        for (int p : xdec.orbits[i])
            require_contract(a0_points.count(p) == (inside ? 1u : 0u), "A_0 is not a union of K-orbits");
        if (inside) out.i0.push_back(i);
    }

    std::set<int> i0_set(out.i0.begin(), out.i0.end());
    for (int i = 0; i < xdec.count(); ++i) {
        if (i0_set.count(i)) {
            for (const auto& lam : ydec.orbits) {
                std::vector<std::pair<int, int>> orbit;
                for (int x : xdec.orbits[i])
                    for (int y : lam) orbit.emplace_back(x, y);
                std::sort(orbit.begin(), orbit.end());
                out.orbits.push_back(std::move(orbit));
            }
        } else {
            for (const auto& cls : out.sim) {
                std::vector<std::pair<int, int>> orbit;
                for (int x : xdec.orbits[i])
                    for (int oj : cls)
                        for (int y : ydec.orbits[oj]) orbit.emplace_back(x, y);
                std::sort(orbit.begin(), orbit.end());
                out.orbits.push_back(std::move(orbit));
            }
        }
    }
    std::sort(out.orbits.begin(), out.orbits.end());
    return out;
}

// The crested product materialized as a permutation group on X x Y, acting
// by the composition action; point (x, y) is numbered (x-1)|Y| + y.
inline FiniteAction materialize_crested_product(const CrestedSpec& spec) {
    detail::validate_crested(spec);
    crested_q_partition(spec);  // asserts Q is the F-invariant orbit partition of N
    int nx = spec.outer.degree(), ny = spec.inner.degree();
    int degree = nx * ny;
    auto encode = [&](int x, int y) { return (x - 1) * ny + y; };
    std::vector<Permutation> gens;
    for (const auto& g : spec.outer.generators()) {
        std::vector<int> img(degree);
        for (int x = 1; x <= nx; ++x)
            for (int y = 1; y <= ny; ++y) img[encode(x, y) - 1] = encode(g(x), y);
        gens.push_back(Permutation(std::move(img)));
    }
    for (const auto& u : spec.inner.generators()) {
        std::vector<int> img(degree);
        for (int x = 1; x <= nx; ++x)
            for (int y = 1; y <= ny; ++y) img[encode(x, y) - 1] = encode(x, u(y));
        gens.push_back(Permutation(std::move(img)));
    }
    for (const auto& block : spec.outer_blocks.blocks) {
        std::set<int> in_block(block.begin(), block.end());
        for (const auto& v : spec.normal_generators) {
            std::vector<int> img(degree);
            for (int x = 1; x <= nx; ++x)
                for (int y = 1; y <= ny; ++y) img[encode(x, y) - 1] = encode(x, in_block.count(x) ? v(y) : y);
            gens.push_back(Permutation(std::move(img)));
        }
    }
    return FiniteAction(degree, std::move(gens),
                        encode(spec.outer.base_point(), spec.inner.base_point()));
}

// Brute-force R-orbits on X x Y for cross-checking the closed form.
inline std::vector<std::vector<std::pair<int, int>>> crested_orbits_brute(const CrestedSpec& spec) {
    FiniteAction product = materialize_crested_product(spec);
    auto stab = product.point_stabilizer(product.base_point());
    auto orbits = point_orbits(stab, product.degree());
    int ny = spec.inner.degree();
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& orbit : orbits) {
        std::vector<std::pair<int, int>> pairs;
        for (int p : orbit) pairs.emplace_back((p - 1) / ny + 1, (p - 1) % ny + 1);
        std::sort(pairs.begin(), pairs.end());
        out.push_back(std::move(pairs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct MultiplicityRow {
    std::string label;
    Int mult;
    Int dim;
};

struct MultiplicityTable {
    std::vector<MultiplicityRow> rows;

    Int sum_mult_sq() const {
        Int s = 0;
        for (const auto& r : rows) s += r.mult * r.mult;
        return s;
    }
    Int sum_mult_dim() const {
        Int s = 0;
        for (const auto& r : rows) s += r.mult * r.dim;
        return s;
    }
};

struct CompositionTableInput {
    std::vector<MultiplicityRow> mult_x;       // a_omega rows with dim V_omega
    std::vector<MultiplicityRow> mult_y_in;    // b_delta rows, delta in Delta_0
    std::vector<MultiplicityRow> mult_y_out;   // b_delta rows, delta outside Delta_0
    std::vector<MultiplicityRow> mult_a0;      // c_gamma rows with dim U_gamma
    long i_count, i0_count, j_count, jsim_count;
    long x_size, y_size, a0_size;
};

// Irreducible decomposition of L(X x Y) under the crested product, assembled
// from the factor decompositions, with both Wielandt audits enforced.
inline MultiplicityTable composition_multiplicity_table(const CompositionTableInput& in) {
    auto check_rows = [](const std::vector<MultiplicityRow>& rows, Int want_sq, const Int& want_dim,
                         const std::string& what) {
        Int sq = 0, dim = 0;
        for (const auto& r : rows) {
            sq += r.mult * r.mult;
            dim += r.mult * r.dim;
        }
        require_contract(sq == want_sq, what + ": sum of squared multiplicities is off by " +
                                            Int(sq - want_sq).get_str());
        require_contract(dim == want_dim,
                         what + ": total dimension is off by " + Int(dim - want_dim).get_str());
    };
    Int jsq_in = 0;
    for (const auto& r : in.mult_y_in) jsq_in += r.mult * r.mult;
    require_contract(jsq_in == in.jsim_count, "Delta_0 rows must account for |J/~|");
    check_rows(in.mult_x, in.i_count, in.x_size, "X rows");
    std::vector<MultiplicityRow> all_y = in.mult_y_in;
    all_y.insert(all_y.end(), in.mult_y_out.begin(), in.mult_y_out.end());
    check_rows(all_y, in.j_count, in.y_size, "Y rows");
    check_rows(in.mult_a0, in.i0_count, in.a0_size, "A_0 rows");
    require_contract(in.a0_size > 0 && in.x_size % in.a0_size == 0, "A_0 must tile X");
    long p_count = in.x_size / in.a0_size;

    MultiplicityTable table;
    for (const auto& vx : in.mult_x)
        for (const auto& wy : in.mult_y_in)
            table.rows.push_back(
                MultiplicityRow{vx.label + " (x) " + wy.label, vx.mult * wy.mult, vx.dim * wy.dim});
    for (const auto& ug : in.mult_a0)
        for (const auto& wy : in.mult_y_out)
            table.rows.push_back(MultiplicityRow{"Ind[" + ug.label + "] (x) " + wy.label, ug.mult * wy.mult,
                                                 Int(p_count) * ug.dim * wy.dim});

    Int expected_sq = Int(in.i_count) * in.jsim_count + Int(in.i0_count) * (in.j_count - in.jsim_count);
    require_contract(table.sum_mult_sq() == expected_sq,
                     "composition table fails the Wielandt audit: got " + table.sum_mult_sq().get_str() +
                         ", expected " + expected_sq.get_str());
    require_contract(table.sum_mult_dim() == Int(in.x_size) * in.y_size,
                     "composition table dimension audit failed");
    return table;
}

// Exponentiation action of F wr G on Y^X x Z, materialized as permutations;
// phi varies over functions X -> Y, z over Z (trivial when |Z| = 1).
inline constexpr long kExponentiationCap = 100000;

inline FiniteAction exponentiation_action(const FiniteAction& f_on_y, const FiniteAction& g_on_x,
                                          const FiniteAction* g_on_z = nullptr) {
    int ny = f_on_y.degree(), nx = g_on_x.degree();
    int nz = g_on_z ? g_on_z->degree() : 1;
    require_input(!g_on_z || g_on_z->generators().size() == g_on_x.generators().size(),
                  "the Z action must list one generator image per X generator");
    double size = nz;
    for (int i = 0; i < nx; ++i) {
        size *= ny;
        if (size > kExponentiationCap)
            throw resource_cap_error("|Y|^|X| |Z| exceeds " + std::to_string(kExponentiationCap));
    }
    long total = static_cast<long>(size);

    // Mixed-radix encoding: phi(1..nx) digits base ny, then z.
    auto encode = [&](const std::vector<int>& phi, int z) {
        long code = 0;
        for (int x = 0; x < nx; ++x) code = code * ny + (phi[x] - 1);
        return static_cast<int>(code * nz + (z - 1) + 1);
    };
    std::vector<std::vector<int>> phis;
    {
        std::vector<int> phi(nx, 1);
        while (true) {
            phis.push_back(phi);
            int pos = nx - 1;
            while (pos >= 0 && phi[pos] == ny) phi[pos--] = 1;
            if (pos < 0) break;
            ++phi[pos];
        }
    }
    std::vector<Permutation> gens;
    // One generator per (F-generator, position): act on that coordinate.
    for (const auto& u : f_on_y.generators()) {
        for (int pos = 0; pos < nx; ++pos) {
            std::vector<int> img(total);
            for (const auto& phi : phis) {
                std::vector<int> moved = phi;
                moved[pos] = u(phi[pos]);
                for (int z = 1; z <= nz; ++z) img[encode(phi, z) - 1] = encode(moved, z);
            }
            gens.push_back(Permutation(std::move(img)));
        }
    }
    // G-generators: permute coordinates, and move z by the inflation action.
    for (size_t gi = 0; gi < g_on_x.generators().size(); ++gi) {
        const Permutation& g = g_on_x.generators()[gi];
        Permutation ginv = g.inverse();
        std::vector<int> img(total);
        for (const auto& phi : phis) {
            std::vector<int> moved(nx);
            for (int x = 1; x <= nx; ++x) moved[x - 1] = phi[ginv(x) - 1];
            for (int z = 1; z <= nz; ++z) {
                int mz = g_on_z ? g_on_z->generators()[gi](z) : z;
                img[encode(phi, z) - 1] = encode(moved, mz);
            }
        }
        gens.push_back(Permutation(std::move(img)));
    }
    std::vector<int> base_phi(nx, f_on_y.base_point());
    int base = encode(base_phi, g_on_z ? g_on_z->base_point() : 1);
    return FiniteAction(static_cast<int>(total), std::move(gens), base);
}

enum class ExpoVariant { general, multiplicity_free, c2 };

struct C2Input {
    std::string label;
    Int mult;  // m_sigma in L(Y)
    Int dim;   // dim V_sigma
};

struct InducedRowInput {
    std::string sigma_label;
    Int dim_sigma;   // dim of the F^X-irreducible
    long index;      // |G| / |I|
    std::string eta_label;
    Int dim_eta;
    Int mult;        // multiplicity of eta in L(J x Z) (general) or L(Z) (free)
};

// Multiplicity table for the wreath action on Y^X x Z. The c2 variant takes
// the multiplicities m_sigma of L(Y); the other variants take precomputed
// eta-multiplicities row by row.
inline MultiplicityTable expo_multiplicities(ExpoVariant variant, const std::vector<C2Input>& c2_rows,
                                             const std::vector<InducedRowInput>& induced_rows,
                                             Int ambient_dimension) {
    MultiplicityTable table;
    if (variant == ExpoVariant::c2) {
        for (size_t i = 0; i < c2_rows.size(); ++i)
            for (size_t j = i + 1; j < c2_rows.size(); ++j)
                table.rows.push_back(MultiplicityRow{
                    "Ind[" + c2_rows[i].label + " (x) " + c2_rows[j].label + "]",
                    c2_rows[i].mult * c2_rows[j].mult, 2 * c2_rows[i].dim * c2_rows[j].dim});
        for (const auto& r : c2_rows) {
            table.rows.push_back(
                MultiplicityRow{r.label + " (x) " + r.label + " [+]", r.mult * (r.mult + 1) / 2, r.dim * r.dim});
            table.rows.push_back(
                MultiplicityRow{r.label + " (x) " + r.label + " [-]", r.mult * (r.mult - 1) / 2, r.dim * r.dim});
        }
    } else {
        for (const auto& r : induced_rows)
            table.rows.push_back(MultiplicityRow{"Ind[" + r.sigma_label + " (x) " + r.eta_label + "]", r.mult,
                                                 Int(r.index) * r.dim_sigma * r.dim_eta});
    }
    require_contract(table.sum_mult_dim() == ambient_dimension,
                     "exponentiation table dimension audit failed: got " + table.sum_mult_dim().get_str() +
                         ", expected " + ambient_dimension.get_str());
    return table;
}

// Multiplicities of the trivial and sign characters of a two-element group
// acting by the involution g on a finite set.
inline std::pair<long, long> c2_eta_multiplicities(const Permutation& g) {
    long fixed = 0;
    for (int p = 1; p <= g.degree(); ++p)
        if (g(p) == p) ++fixed;
    return {(g.degree() + fixed) / 2, (g.degree() - fixed) / 2};
}

// Pointwise products of spherical coefficient tables on X x Y. For the
// Delta_0 family the X-side factor is a full spherical table phi; for the
// complement it is a table theta supported on A_0 and extended by zero.
enum class CrestedCoefficientCase { delta0, complement };

inline std::vector<std::vector<Rat>> crested_spherical_products(const CrestedSpec& spec,
                                                                const std::vector<Rat>& x_table,
                                                                const std::vector<Rat>& y_table,
                                                                CrestedCoefficientCase which) {
    CrestedOrbits orbits = crested_orbits(spec);
    require_input(static_cast<int>(x_table.size()) == spec.outer.degree() + 1, "x table size mismatch");
    require_input(static_cast<int>(y_table.size()) == spec.inner.degree() + 1, "y table size mismatch");
    for (const auto& xi : orbits.outer_suborbits)
        for (int x : xi)
            require_input(x_table[x] == x_table[xi[0]], "x table must be constant on the outer suborbits");
    for (const auto& lam : orbits.inner_suborbits)
        for (int y : lam)
            require_input(y_table[y] == y_table[lam[0]], "y table must be constant on the inner suborbits");
    if (which == CrestedCoefficientCase::delta0) {
        // The Delta_0 coefficients live in L(Q): constant on the N-orbits.
        for (const auto& block : crested_q_partition(spec).blocks)
            for (int y : block)
                require_input(y_table[y] == y_table[block[0]], "y table must be constant on the Q blocks");
    }
    if (which == CrestedCoefficientCase::complement) {
        const auto& a0 = spec.outer_blocks.blocks[spec.outer_blocks.block_of[spec.outer.base_point()]];
        std::set<int> inside(a0.begin(), a0.end());
        for (int x = 1; x <= spec.outer.degree(); ++x)
            require_input(inside.count(x) || x_table[x] == 0, "theta must vanish off A_0");
    }
    std::vector<std::vector<Rat>> product(spec.outer.degree() + 1,
                                          std::vector<Rat>(spec.inner.degree() + 1, Rat(0)));
    for (int x = 1; x <= spec.outer.degree(); ++x)
        for (int y = 1; y <= spec.inner.degree(); ++y) product[x][y] = x_table[x] * y_table[y];
    // Bi-invariance: constant on the closed-form R-orbits.
    for (const auto& orbit : orbits.orbits) {
        const Rat& v = product[orbit[0].first][orbit[0].second];
        for (const auto& [x, y] : orbit)
            require_contract(product[x][y] == v, "product table is not constant on the crested orbits");
    }
    return product;
}

}  // namespace homspec
