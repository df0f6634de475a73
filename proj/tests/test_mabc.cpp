#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homspec/gt.hpp"
#include "homspec/mabc.hpp"

using namespace homspec;

namespace {

// All weakly decreasing triples (alpha, beta, gamma) of n dominating source.
std::vector<Triple> dominating_targets(const Triple& source) {
    std::vector<Triple> out;
    Composition comp = triple_composition(source);
    for (const auto& lambda : partitions_of(triple_n(source))) {
        if (lambda.length() > 3 || !dominates(lambda, comp)) continue;
        out.push_back(Triple{lambda.part(0), lambda.part(1), lambda.part(2)});
    }
    return out;
}

}  // namespace

TEST_CASE("delta12_eigenvalue formula") {
    CHECK(delta12_eigenvalue(2, 2, 0) == -2);
    CHECK(delta12_eigenvalue(2, 2, 1) == 0);
    CHECK(delta12_eigenvalue(2, 2, 2) == 4);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            CHECK(delta12_eigenvalue(a, b, b) == long(a) * b);  // k = b kills the second term
            long prev = 0;
            for (int k = std::max(0, b - a); k <= b; ++k) {
                long ev = delta12_eigenvalue(a, b, k);
                if (k > std::max(0, b - a)) CHECK(ev > prev);  // strictly increasing in k
                prev = ev;
            }
        }
    CHECK_THROWS_AS(delta12_eigenvalue(1, 3, 0), invalid_input_error);
}

TEST_CASE("j_op reproduces the displayed bases") {
    int n = 5;
    // Hom(S^{n-1,1}, M^{n-2,1,1}): J_0 f(i,j) = f(i), J_1 f(i,j) = f(j).
    Triple target{n - 1, 1, 0}, source{n - 2, 1, 1};
    OmegaIndex points(triple_composition(target));
    OmegaIndex pairs(triple_composition(source));
    auto [lo, hi] = semistandard_l_range(target, source);
    CHECK(lo == 0);
    CHECK(hi == 1);

    RatMatrix proj = isotypic_projector(Partition({n - 1, 1}), points);
    RatMatrix j0 = j_op(0, target, source, points, pairs);
    RatMatrix j1 = j_op(1, target, source, points, pairs);
    PairView pv(pairs);
    TupleView tv(points, 1);
    // Against the raw pullbacks composed with the projector.
    RatMatrix expect0(pairs.size(), points.size()), expect1(pairs.size(), points.size());
    for (int c = 0; c < points.size(); ++c) {
        int pt = tv.tuple_of(c)[0];
        for (int r = 0; r < pairs.size(); ++r) {
            auto [i, j] = pv.pair_of(r);
            expect0(r, c) = (i == pt) ? 1 : 0;
            expect1(r, c) = (j == pt) ? 1 : 0;
        }
    }
    CHECK(j0 == expect0 * proj);
    CHECK(j1 == expect1 * proj);
    CHECK_THROWS_AS(j_op(2, target, source, points, pairs), invalid_input_error);
}

TEST_CASE("zeil identities as exact operator equations") {
    // T_l'' d_{1,2} = T_l' + (b-l+1) T_{l-1} + (beta-b+l) T_l on M^{alpha,beta,gamma};
    // shapes with beta >= 2 so that d_{1,2} does not empty the second block.
    for (auto shapes : {std::pair{Triple{3, 2, 0}, Triple{2, 2, 1}}, std::pair{Triple{2, 2, 1}, Triple{2, 2, 1}},
                        std::pair{Triple{3, 2, 0}, Triple{3, 1, 1}}}) {
        auto [target, source] = shapes;
        OmegaIndex st(triple_composition(target));
        OmegaIndex ss(triple_composition(source));
        Triple shifted{target[0] + 1, target[1] - 1, target[2]};
        OmegaIndex sshift(triple_composition(shifted));
        RatMatrix d12 = d_op(1, 2, st.composition(), st, sshift);
        auto [lo, hi] = semistandard_l_range(target, source);
        for (int l = lo; l <= hi; ++l) {
            RatMatrix lhs = t_op(make_ml_double_prime(l, target, source), sshift, ss) * d12;
            RatMatrix rhs = t_op(make_ml_prime(l, target, source), st, ss) +
                            Rat(source[1] - l + 1) * t_op(make_ml(l - 1, target, source), st, ss) +
                            Rat(target[1] - source[1] + l) * t_op(make_ml(l, target, source), st, ss);
            CHECK(lhs == rhs);
        }

        // Recurrence: Delta_{1,2} J_l = [al - (l+1)(b-l)] J_l - (l+1)(beta-b+l+1) J_{l+1}
        // as operators through the isotypic projector.
        RatMatrix delta = laplace_op(1, 2, ss.composition(), ss);
        for (int l = lo; l <= hi; ++l) {
            RatMatrix jl = restricted_t_op(l, target, source, st, ss);
            RatMatrix jl1 = restricted_t_op(l + 1, target, source, st, ss);
            long a = source[0], b = source[1], beta = target[1];
            RatMatrix lhs = delta * jl;
            RatMatrix rhs = Rat(a * l - (l + 1) * (b - l)) * jl - Rat((l + 1) * (beta - b + l + 1)) * jl1;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("semistandard l-range matches the generic predicate") {
    // Generic predicate on the full three-row matrix, empty rows included.
    auto full_semistandard = [](int l, const Triple& t, const Triple& s) {
        std::vector<std::vector<int>> m = {{s[0], l, t[0] - s[0] - l},
                                           {0, s[1] - l, t[1] - s[1] + l},
                                           {0, 0, t[2]}};
        for (const auto& row : m)
            for (int x : row)
                if (x < 0) return false;
        for (int i = 0; i + 1 < 3; ++i) {
            int below = 0, above = 0;
            for (int c = 1; c <= 3; ++c) {
                below += m[i + 1][c - 1];
                if (below > above) return false;
                above += m[i][c - 1];
            }
        }
        return true;
    };
    for (int n = 3; n <= 7; ++n) {
        for (const auto& lam : partitions_of(n)) {
            if (lam.length() > 3) continue;
            Triple target{lam.part(0), lam.part(1), lam.part(2)};
            for (const auto& mu : partitions_of(n)) {
                if (mu.length() > 3) continue;
                Triple source{mu.part(0), mu.part(1), mu.part(2)};
                auto [lo, hi] = semistandard_l_range(target, source);
                int bound = n + 2;
                for (int l = -bound; l <= bound; ++l) {
                    bool in_range = lo <= l && l <= hi;
                    CHECK(full_semistandard(l, target, source) == in_range);
                }
            }
        }
    }
}

TEST_CASE("R_k: displayed coefficients") {
    for (int n : {5, 6}) {
        // (n-1,1,0) -> (n-2,1,1): R_0 = J_0 + J_1/(n-1), R_1 = J_1.
        auto c0 = r_coefficients(0, Triple{n - 1, 1, 0}, Triple{n - 2, 1, 1});
        REQUIRE(c0.size() == 2);
        CHECK(c0[0] == std::pair{0, Rat(1)});
        CHECK(c0[1] == std::pair{1, make_rat(1, n - 1)});
        auto c1 = r_coefficients(1, Triple{n - 1, 1, 0}, Triple{n - 2, 1, 1});
        REQUIRE(c1.size() == 1);
        CHECK(c1[0] == std::pair{1, Rat(1)});
        // (n-2,2,0) -> (n-3,2,1): R_0 = J_0 + J_1/(n-3), R_1 = J_1.
        auto d0 = r_coefficients(0, Triple{n - 2, 2, 0}, Triple{n - 3, 2, 1});
        REQUIRE(d0.size() == 2);
        CHECK(d0[0] == std::pair{0, Rat(1)});
        CHECK(d0[1] == std::pair{1, make_rat(1, n - 3)});
        auto d1 = r_coefficients(1, Triple{n - 2, 2, 0}, Triple{n - 3, 2, 1});
        CHECK(d1 == std::vector{std::pair{1, Rat(1)}});
    }
}

TEST_CASE("R_k maps into the Delta_{1,2} eigenspace, orthogonally across k") {
    for (auto source : {Triple{2, 2, 1}, Triple{3, 1, 1}, Triple{2, 2, 2}, Triple{3, 2, 1}}) {
        OmegaIndex ss(triple_composition(source));
        RatMatrix delta = laplace_op(1, 2, ss.composition(), ss);
        for (const auto& target : dominating_targets(source)) {
            OmegaIndex st(triple_composition(target));
            auto [lo, hi] = semistandard_l_range(target, source);
            std::vector<RatMatrix> images;
            for (int k = lo; k <= hi; ++k) {
                RatMatrix rk = r_op(k, target, source, st, ss);
                long ev = delta12_eigenvalue(source[0], source[1], k);
                CHECK((delta * rk) == (Rat(ev) * rk));
                CHECK_FALSE(rk.is_zero());
                images.push_back(rk);
            }
            for (size_t i = 0; i < images.size(); ++i)
                for (size_t j = i + 1; j < images.size(); ++j)
                    CHECK((images[i].transpose() * images[j]).is_zero());
        }
    }
}

TEST_CASE("mabc_decomposition and the displayed spectrum of M^{2,2,1}") {
    Triple source{2, 2, 1};
    OmegaIndex space(triple_composition(source));
    MabcDecomposition dec = mabc_decomposition(source, space);
    REQUIRE(dec.blocks.size() == 3);
    std::vector<long> evs, dims;
    for (const auto& b : dec.blocks) {
        evs.push_back(b.eigenvalue);
        dims.push_back(b.dimension);
    }
    CHECK(evs == std::vector<long>{-2, 0, 4});
    CHECK(dims[0] + dims[1] + dims[2] == 30);
    // Predicted dimensions: C(n,c) * dim S^{(a+k, b-k)}.
    CHECK(dims == std::vector<long>{10, 15, 5});

    // Pair module: two eigenspaces filling n(n-1).
    for (int n : {4, 5}) {
        Triple pair_source{n - 2, 1, 1};
        OmegaIndex ps(triple_composition(pair_source));
        MabcDecomposition pd = mabc_decomposition(pair_source, ps);
        REQUIRE(pd.blocks.size() == 2);
        CHECK(pd.blocks[0].dimension + pd.blocks[1].dimension == long(n) * (n - 1));
    }

    // Unsorted composition: same machinery, audited.
    Triple unsorted{1, 2, 2};
    OmegaIndex us(triple_composition(unsorted));
    MabcDecomposition ud = mabc_decomposition(unsorted, us);
    long total = 0;
    for (const auto& b : ud.blocks) total += b.dimension;
    CHECK(total == 30);
}

TEST_CASE("delta13_23_eigenvalue is consistent with centrality") {
    for (auto source : {Triple{2, 2, 1}, Triple{2, 1, 1}, Triple{3, 2, 1}}) {
        Composition comp = triple_composition(source);
        for (const auto& target : dominating_targets(source)) {
            Partition lambda = triple_partition(target);
            Rat central = Rat(central_sum_eigenvalue(lambda, comp));
            auto [lo, hi] = containment_k_range(target, source);
            for (int k = std::max({lo, 0, source[1] - source[0]}); k <= hi; ++k) {
                Rat sum = delta13_23_eigenvalue(target, source, k) +
                          Rat(delta12_eigenvalue(source[0], source[1], k));
                CHECK(sum == central);
            }
        }
    }
    // Trivial block: the total Laplacian eigenvalue is ab + ac + bc.
    Triple source{2, 2, 1};
    CHECK(delta13_23_eigenvalue(Triple{5, 0, 0}, source, 2) + Rat(delta12_eigenvalue(2, 2, 2)) ==
          Rat(2 * 2 + 2 * 1 + 2 * 1));
}

TEST_CASE("central sum eigenvalues against exact diagonalization") {
    for (auto source : {Triple{2, 2, 1}, Triple{2, 1, 1}}) {
        Composition comp = triple_composition(source);
        OmegaIndex space(comp);
        PairSet all = {{1, 2}, {1, 3}, {2, 3}};
        auto spectrum = urn_spectrum(source, all, space);
        std::map<long, long> expected;
        for (const auto& lambda : partitions_of(comp.n())) {
            Int m = multiplicity(lambda, comp);
            if (m == 0) continue;
            expected[central_sum_eigenvalue(lambda, comp).get_si()] +=
                Int(m * hook_dimension(lambda)).get_si();
        }
        std::map<long, long> got;
        for (auto [ev, mult] : spectrum) got[ev] = mult;
        CHECK(got == expected);
    }
}

TEST_CASE("urn spectra") {
    Triple ones{1, 1, 1};
    OmegaIndex space(triple_composition(ones));
    auto full = urn_spectrum(ones, {{1, 2}, {1, 3}, {2, 3}}, space);
    CHECK(full == std::vector<std::pair<long, int>>{{-3, 1}, {0, 4}, {3, 1}});

    auto two = urn_spectrum(ones, {{1, 3}, {2, 3}}, space);
    CHECK(two == std::vector<std::pair<long, int>>{{-2, 1}, {-1, 2}, {1, 2}, {2, 1}});

    // Top eigenvalue is the row sum, carried by the constant vector.
    for (auto source : {Triple{2, 2, 1}, Triple{3, 1, 1}}) {
        OmegaIndex sp(triple_composition(source));
        for (PairSet pairs :
             {PairSet{{1, 2}}, PairSet{{1, 3}, {2, 3}}, PairSet{{1, 2}, {1, 3}, {2, 3}}}) {
            auto spec = urn_spectrum(source, pairs, sp);
            long top = 0;
            RatMatrix op(sp.size(), sp.size());
            for (auto [i, j] : pairs) {
                top += long(source[i - 1]) * source[j - 1];
                op = op + laplace_op(i, j, sp.composition(), sp);
            }
            CHECK(spec.back().first == top);
            std::vector<Rat> ones(sp.size(), Rat(1));
            CHECK(op.apply(ones) == std::vector<Rat>(sp.size(), Rat(top)));
            long total = 0;
            for (auto [ev, m] : spec) total += m;
            CHECK(total == sp.size());
        }
    }
    CHECK_THROWS_AS(urn_spectrum(ones, {}, space), invalid_input_error);
}

TEST_CASE("k-range equals the semistandard range (cross-module)") {
    for (auto source : {Triple{2, 2, 1}, Triple{3, 2, 1}, Triple{2, 2, 2}}) {
        for (const auto& target : dominating_targets(source)) {
            auto [lo, hi] = semistandard_l_range(target, source);
            auto mats = semistandard_matrices(triple_partition(target),
                                              Composition(triple_composition(source)));
            CHECK(static_cast<int>(mats.size()) == hi - lo + 1);
        }
    }
}

TEST_CASE("each block Laplacian commutes with the central sum") {
    for (auto source : {Triple{2, 2, 1}, Triple{2, 1, 1}, Triple{1, 2, 2}}) {
        Composition comp = triple_composition(source);
        OmegaIndex space(comp);
        std::vector<RatMatrix> deltas;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) deltas.push_back(laplace_op(i, j, comp, space));
        RatMatrix total = deltas[0] + deltas[1] + deltas[2];
        for (const auto& d : deltas) CHECK(d * total == total * d);
    }
}
