#include <doctest.h>

#include <cmath>
#include <complex>

#include "qfs/basis.hpp"

using namespace qfs;

namespace {

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) {
    return a * b + b * a;
}

bool is_zero(const SparseOperator& op) {
    return SparseOperator::exact_equal(op, SparseOperator::from_triplets(op.dimension(), {}));
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("space dimensions") {
    CHECK(build_space({15}).dimension() == 64);
    CHECK(build_space({5, 5}).dimension() == 144);
    CHECK_THROWS_AS(build_space({0}), std::invalid_argument);
    CHECK_THROWS_AS(build_space({}), std::invalid_argument);
    CHECK_THROWS_AS(build_space({5, -1}), std::invalid_argument);
}

TEST_CASE("index round-trips through label for every basis state") {
    const auto space = build_space({3, 2});
    for (int i = 0; i < space.dimension(); ++i) {
        const BasisLabel label = space.label_of(i);
        CHECK(space.index_of(label) == i);
    }
    CHECK_THROWS_AS(space.label_of(space.dimension()), std::invalid_argument);
    CHECK_THROWS_AS(space.index_of(BasisLabel{5, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(space.index_of(BasisLabel{1, {4, 0}}), std::invalid_argument);
}

TEST_CASE("ladder operator matrix elements at cutoff 2") {
    const auto space = build_space({2});
    const auto a = boson_annihilation(space, 0);
    const auto e = [&](int level, int n) { return basis_state(space, {level, {n}}); };

    // <0|a|1> = 1, <1|a|2> = sqrt(2), everything else 0 within each level block
    CHECK(e(1, 0).dot(a.apply(e(1, 1))) == cplx(1.0, 0.0));
    CHECK(e(1, 1).dot(a.apply(e(1, 2))) == cplx(std::sqrt(2.0), 0.0));
    CHECK(a.apply(e(1, 0)).norm() == 0.0);
    CHECK(a.apply(e(3, 0)).norm() == 0.0);

    SUBCASE("number operator diagonal") {
        const auto n_op = boson_number(space, 0);
        const auto ada = a.adjoint() * a;
        CHECK(SparseOperator::exact_equal(n_op, ada));
        for (int level = 1; level <= 4; ++level) {
            for (int n = 0; n <= 2; ++n) {
                const auto v = e(level, n);
                CHECK(std::real(v.dot(n_op.apply(v))) == static_cast<double>(n));
            }
        }
    }

    CHECK_THROWS_AS(boson_annihilation(space, 1), std::invalid_argument);
}

TEST_CASE("level transitions") {
    const auto space = build_space({2});
    const auto t14 = level_transition(space, 1, 4);

    SUBCASE("maps (level 4, n) to (level 1, n)") {
        for (int n = 0; n <= 2; ++n) {
            const StateVector mapped = t14.apply(basis_state(space, {4, {n}}));
            const StateVector expected = basis_state(space, {1, {n}});
            CHECK((mapped - expected).norm() == 0.0);
        }
    }
    SUBCASE("projector property") {
        const auto p2 = level_transition(space, 2, 2);
        CHECK(SparseOperator::exact_equal(p2 * p2, p2));
        CHECK(p2.is_hermitian());
    }
    SUBCASE("adjoint swaps the levels") {
        CHECK(SparseOperator::exact_equal(t14.adjoint(), level_transition(space, 4, 1)));
    }
    CHECK_THROWS_AS(level_transition(space, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(level_transition(space, 1, 5), std::invalid_argument);
}

TEST_CASE("fermionic anticommutation algebra is exact") {
    const auto space = build_space({2, 1});
    const auto [b, b_dag, d, d_dag] = jordan_wigner_operators(space);
    const auto id = SparseOperator::identity(space.dimension());

    CHECK(SparseOperator::exact_equal(anticommutator(b, b_dag), id));
    CHECK(SparseOperator::exact_equal(anticommutator(d, d_dag), id));
    CHECK(is_zero(anticommutator(b, d)));
    CHECK(is_zero(anticommutator(b, d_dag)));
    CHECK(is_zero(anticommutator(b_dag, d_dag)));
    CHECK(is_zero(b * b));
    CHECK(is_zero(d * d));
}

TEST_CASE("pair creation sign matches the level labeling") {
    const auto space = build_space({1});
    const auto ops = jordan_wigner_operators(space);

    // b_dag d_dag |level 1> = -|level 4>
    const StateVector created = ops.b_dag.apply(ops.d_dag.apply(basis_state(space, {1, {0}})));
    const StateVector expected = -basis_state(space, {4, {0}});
    CHECK((created - expected).norm() == 0.0);

    // single-particle labels: d_dag|1> = -|3>, b_dag|1> = +|2>
    CHECK((ops.d_dag.apply(basis_state(space, {1, {0}})) + basis_state(space, {3, {0}})).norm() == 0.0);
    CHECK((ops.b_dag.apply(basis_state(space, {1, {0}})) - basis_state(space, {2, {0}})).norm() == 0.0);
}

TEST_CASE("mode operators commute across tensor factors") {
    const auto space = build_space({2, 2});
    const auto a0 = boson_annihilation(space, 0);
    const auto a1 = boson_annihilation(space, 1);
    const auto t14 = level_transition(space, 1, 4);

    CHECK(SparseOperator::exact_equal(a0 * a1, a1 * a0));
    CHECK(SparseOperator::exact_equal(a0 * t14, t14 * a0));
    CHECK(SparseOperator::exact_equal(a1.adjoint() * t14, t14 * a1.adjoint()));
}

TEST_CASE("hermiticity check is exact on stored entries") {
    const auto space = build_space({1});
    const auto a = boson_annihilation(space, 0);
    CHECK_FALSE(a.is_hermitian());
    CHECK((a + a.adjoint()).is_hermitian());
    CHECK((cplx(0.0, 1.0) * (a - a.adjoint())).is_hermitian());
    CHECK(boson_number(space, 0).is_hermitian());
}

}  // TEST_SUITE
