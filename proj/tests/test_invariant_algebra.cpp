#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homspec/invariant.hpp"

using namespace homspec;

namespace {

Rat row_sum(const RatMatrix& m, int row) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j) s += m(row, j);
    return s;
}

// Eigenspace dimension sweep used as an independent diagonalization oracle.
int eigenspace_dim(const RatMatrix& op, long lambda) {
    RatMatrix shifted = op - (Rat(lambda) * RatMatrix::identity(op.rows()));
    return kernel_dimension(shifted);
}

// Multiplicity oracle independent of the Young-subgroup sum: the inner
// product of the fixed-point character of Omega_a with chi_lambda.
Int multiplicity_fixed_point_oracle(const Partition& lambda, const OmegaIndex& space) {
    int n = space.n();
    Int total = 0;
    for (const auto& rho : partitions_of(n)) {
        std::vector<std::vector<int>> cycles;
        int next = 1;
        for (int len : rho.parts) {
            std::vector<int> c;
            for (int k = 0; k < len; ++k) c.push_back(next++);
            cycles.push_back(c);
        }
        Permutation rep = Permutation::from_cycles(n, cycles);
        long fixed = 0;
        for (int idx = 0; idx < space.size(); ++idx)
            if (space.act_index(rep, idx) == idx) ++fixed;
        total += class_size(rho) * fixed * sn_character(lambda, rho);
    }
    Int nfact = factorial(n);
    REQUIRE(total % nfact == 0);
    return total / nfact;
}

InvariantKernel random_kernel(const OmegaIndex& space, std::mt19937& rng) {
    InvariantKernel k = make_kernel_frame(space);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (auto& v : k.value_per_orbit) v = coef(rng);
    return k;
}

}  // namespace

TEST_CASE("laplace_op basics") {
    OmegaIndex s11{Composition({1, 1})};
    RatMatrix delta = laplace_op(1, 2, Composition({1, 1}), s11);
    RatMatrix swap = permutation_matrix(Permutation::transposition(2, 1, 2), s11);
    CHECK(delta == swap);

    for (auto parts : {std::vector<int>{2, 1, 1}, std::vector<int>{2, 2, 1}}) {
        Composition a(parts);
        OmegaIndex space(a);
        for (int i = 1; i <= a.length(); ++i)
            for (int j = 1; j <= a.length(); ++j) {
                if (i == j) continue;
                RatMatrix d = laplace_op(i, j, a, space);
                CHECK(d == d.transpose());
                CHECK(equivariance_check(d, symmetric_group_generators(a.n()), space));
                Rat expected = Rat(a.parts[i - 1]) * Rat(a.parts[j - 1]);
                for (int r = 0; r < space.size(); ++r) CHECK(row_sum(d, r) == expected);
            }
    }
}

TEST_CASE("urn operator on the regular representation of S_3") {
    Composition a({1, 1, 1});
    OmegaIndex space(a);
    RatMatrix sum = laplace_op(1, 2, a, space) + laplace_op(1, 3, a, space) + laplace_op(2, 3, a, space);

    CHECK(equivariance_check(sum, symmetric_group_generators(3), space));

    CHECK(eigenspace_dim(sum, 3) == 1);
    CHECK(eigenspace_dim(sum, -3) == 1);
    CHECK(eigenspace_dim(sum, 0) == 4);
    // Class-sum values per irrep: 3 * chi_lambda((2,1)) / d_lambda.
    for (const auto& lambda : partitions_of(3)) {
        Int num = Int(3) * sn_character(lambda, Partition({2, 1}));
        Int d = hook_dimension(lambda);
        CHECK(num % d == 0);
        long ev = Int(num / d).get_si();
        CHECK(eigenspace_dim(sum, ev) >= 1);
    }
}

TEST_CASE("d_op maps into the neighbor module") {
    Composition a({2, 2, 1});
    OmegaIndex src(a);
    Composition b = d_op_target_composition(1, 2, a);
    CHECK(b.parts == std::vector<int>{3, 1, 1});
    OmegaIndex dst(b);
    RatMatrix d = d_op(1, 2, a, src, dst);
    for (int c = 0; c < d.cols(); ++c) {
        Rat col = 0;
        for (int r = 0; r < d.rows(); ++r) col += d(r, c);
        CHECK(col == 2);  // one summand per point of block 2
    }
    CHECK_THROWS_AS(d_op_target_composition(1, 3, a), invalid_input_error);
    CHECK_THROWS_AS(d_op(1, 1, a, src, dst), invalid_input_error);
}

TEST_CASE("equivariance_check distinguishes invariant operators") {
    Composition a({2, 1, 1});
    OmegaIndex space(a);
    auto gens = symmetric_group_generators(4);
    CHECK(equivariance_check(RatMatrix::identity(space.size()), gens, space));
    for (int n : {4, 5}) {
        Composition c({n - 2, 1, 1});
        OmegaIndex sp(c);
        CHECK(equivariance_check(laplace_op(1, 2, c, sp), symmetric_group_generators(n), sp));
    }
    RatMatrix bad(space.size(), space.size());
    bad(0, 1) = 1;  // a lone entry cannot commute with a transitive action
    CHECK_FALSE(equivariance_check(bad, gens, space));
}

TEST_CASE("kernels realize the commutant") {
    Composition a({2, 1, 1});
    OmegaIndex space(a);

    InvariantKernel id_kernel = kernel_of(RatMatrix::identity(space.size()), space);
    for (int x = 0; x < space.size(); ++x) CHECK(id_kernel.at(x) == (x == 0 ? 1 : 0));

    RatMatrix d12 = laplace_op(1, 2, a, space);
    RatMatrix d13 = laplace_op(1, 3, a, space);
    InvariantKernel k12 = kernel_of(d12, space);
    InvariantKernel k13 = kernel_of(d13, space);

    // apply_kernel(kernel_of(T), f) = T f on a basis.
    for (int idx = 0; idx < space.size(); ++idx) {
        ModuleVector f = ModuleVector::delta(space, idx);
        ModuleVector via_kernel = apply_kernel(k12, f);
        std::vector<Rat> direct = d12.apply(f.coeffs);
        CHECK(via_kernel.coeffs == direct);
    }

    // Convolution realizes composition, in the stated order.
    InvariantKernel composed = convolve(k12, k13);
    InvariantKernel direct = kernel_of(d12 * d13, space);
    CHECK(composed.value_per_orbit == direct.value_per_orbit);

    // Normality of the symmetric operator Delta_{1,2}.
    InvariantKernel adj = kernel_adjoint(k12);
    CHECK(convolve(k12, adj).value_per_orbit == convolve(adj, k12).value_per_orbit);

    RatMatrix not_invariant(space.size(), space.size());
    not_invariant(0, 1) = 1;
    CHECK_THROWS_AS(kernel_of(not_invariant, space), contract_violation_error);
}

TEST_CASE("kernel algebra matches operator algebra on random elements") {
    Composition a({2, 2, 1});
    OmegaIndex space(a);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        InvariantKernel p = random_kernel(space, rng);
        InvariantKernel q = random_kernel(space, rng);
        InvariantKernel r = random_kernel(space, rng);
        CHECK(convolve(convolve(p, q), r).value_per_orbit == convolve(p, convolve(q, r)).value_per_orbit);
        RatMatrix P = kernel_to_operator(p), Q = kernel_to_operator(q);
        CHECK(equivariance_check(P, symmetric_group_generators(5), space));
        CHECK(kernel_of(P * Q, space).value_per_orbit == convolve(p, q).value_per_orbit);
    }
}

TEST_CASE("wielandt_count") {
    OmegaIndex trivial_space{Composition({4})};
    CHECK(wielandt_count(trivial_space.stabilizer_generators(), trivial_space) == 1);
    for (int n : {4, 5, 6}) {
        OmegaIndex pairs{Composition({n - 2, 1, 1})};
        CHECK(wielandt_count(pairs.stabilizer_generators(), pairs) == 7);
    }
    OmegaIndex s221{Composition({2, 2, 1})};
    CHECK(wielandt_count(s221.stabilizer_generators(), s221) == 11);
}

TEST_CASE("multiplicity agrees with the fixed-point oracle") {
    for (int n : {4, 5}) {
        Composition a({n - 2, 1, 1});
        OmegaIndex space(a);
        CHECK(multiplicity(Partition({n}), a) == 1);
        CHECK(multiplicity(Partition({n - 1, 1}), a) == 2);
        for (const auto& lambda : partitions_of(n))
            CHECK(multiplicity(lambda, a) == multiplicity_fixed_point_oracle(lambda, space));
    }
    Composition c221({2, 2, 1});
    CHECK(multiplicity(Partition({3, 2}), c221) == 2);
    OmegaIndex s221(c221);
    for (const auto& lambda : partitions_of(5))
        CHECK(multiplicity(lambda, c221) == multiplicity_fixed_point_oracle(lambda, s221));
}

TEST_CASE("isotypic projectors: algebraic laws and ranks") {
    for (auto parts : {std::vector<int>{2, 1, 1}, std::vector<int>{2, 2, 1}, std::vector<int>{3, 1, 1}}) {
        Composition a(parts);
        OmegaIndex space(a);
        int n = a.n();
        auto lambdas = partitions_of(n);
        auto projs = isotypic_projectors(lambdas, space);

        RatMatrix sum(space.size(), space.size());
        for (size_t i = 0; i < lambdas.size(); ++i) {
            const RatMatrix& e = projs[i];
            CHECK(e * e == e);
            CHECK(e.transpose() == e);
            Int mult = multiplicity(lambdas[i], a);
            if (!dominates(lambdas[i], a)) {
                CHECK(mult == 0);
                CHECK(e.is_zero());
            }
            CHECK(Int(rank(e)) == mult * hook_dimension(lambdas[i]));
            for (size_t j = i + 1; j < lambdas.size(); ++j) CHECK((e * projs[j]).is_zero());
            sum = sum + e;
        }
        CHECK(sum == RatMatrix::identity(space.size()));
    }

    // lambda = (n): the averaging operator.
    OmegaIndex space{Composition({2, 1, 1})};
    RatMatrix avg = isotypic_projector(Partition({4}), space);
    for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y) CHECK(avg(x, y) == make_rat(1, space.size()));

    // rank 2(n-1) for the standard component of the pair module.
    for (int n : {4, 5}) {
        OmegaIndex pairs{Composition({n - 2, 1, 1})};
        CHECK(rank(isotypic_projector(Partition({n - 1, 1}), pairs)) == 2 * (n - 1));
    }
    OmegaIndex s221{Composition({2, 2, 1})};
    CHECK(rank(isotypic_projector(Partition({2, 2, 1}), s221)) == 5);
    CHECK(multiplicity(Partition({2, 2, 1}), Composition({2, 2, 1})) == 1);
}

TEST_CASE("wielandt equals the sum of squared multiplicities (sample)") {
    for (auto parts : {std::vector<int>{3, 2}, std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1},
                       std::vector<int>{2, 1, 1, 1}}) {
        Composition a(parts);
        OmegaIndex space(a);
        Int sum_sq = 0;
        for (const auto& lambda : partitions_of(a.n())) {
            Int m = multiplicity(lambda, a);
            sum_sq += m * m;
        }
        CHECK(Int(wielandt_count(space.stabilizer_generators(), space)) == sum_sq);
    }
}
