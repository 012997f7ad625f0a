#include "augalg/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace augalg;

namespace {

template <Field K>
Matrix<K> ints(K k, std::vector<std::vector<long>> rows) {
    Matrix<K> m(k, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = k.from_int(rows[i][j]);
    return m;
}

template <Field K>
Matrix<K> random_matrix(K k, std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
    Matrix<K> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) == 0) m(i, j) = k.from_int(val(rng));
    return m;
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
    RationalField q;
    auto id = Matrix<RationalField>::identity(q, 3);
    EXPECT_EQ(rref(id), id);
}

TEST(Rref, ZeroIsFixed) {
    PrimeField f(5);
    Matrix<PrimeField> z(f, 2, 3);
    EXPECT_EQ(rref(z), z);
}

TEST(Rref, HandReducedTwoByTwo) {
    RationalField q;
    EXPECT_EQ(rref(ints(q, {{1, 2}, {2, 4}})), ints(q, {{1, 2}, {0, 0}}));
}

TEST(Kernel, IdentityHasZeroKernel) {
    RationalField q;
    EXPECT_EQ(kernel_basis(Matrix<RationalField>::identity(q, 4)).dim(), 0u);
}

TEST(Kernel, ZeroMatrixHasFullKernel) {
    RationalField q;
    auto k = kernel_basis(Matrix<RationalField>(q, 2, 3));
    EXPECT_EQ(k.dim(), 3u);
    EXPECT_EQ(k, Subspace<RationalField>::full(q, 3));
}

TEST(Kernel, OneOneOverGF3) {
    PrimeField f(3);
    auto k = kernel_basis(ints(f, {{1, 1}}));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k, Subspace<PrimeField>::span(f, 2, {{f.from_int(1), f.from_int(2)}}));
    // exhaustive oracle over all 9 vectors
    int count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if ((a + b) % 3 == 0) {
                ++count;
                EXPECT_TRUE(k.contains(Vec<PrimeField>{f.from_int(a), f.from_int(b)}));
            }
    EXPECT_EQ(count, 3);
}

TEST(Solve, IdentityReturnsRhs) {
    RationalField q;
    auto b = ints(q, {{3, -1}, {7, 2}});
    auto x = solve(Matrix<RationalField>::identity(q, 2), b);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, b);
}

TEST(Solve, InconsistentHasNoSolution) {
    RationalField q;
    EXPECT_FALSE(solve(ints(q, {{1}, {1}}), ints(q, {{0}, {1}})));
}

TEST(Solve, DivisionOverQ) {
    RationalField q;
    auto x = solve(ints(q, {{2}}), ints(q, {{1}}));
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)(0, 0), mpq_class(1, 2));
    EXPECT_EQ(q.to_string((*x)(0, 0)), "1/2");
}

TEST(Solve, FactorizationMatchesDirectSolve) {
    RationalField q;
    auto a = ints(q, {{1, 2, 0}, {0, 1, 1}, {1, 3, 1}});
    Factorization<RationalField> fac(a);
    EXPECT_EQ(fac.rank(), 2u);
    Vec<RationalField> b{q.from_int(1), q.from_int(2), q.from_int(3)};
    auto x = fac.solve(b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
    Vec<RationalField> bad{q.from_int(1), q.from_int(2), q.from_int(4)};
    EXPECT_FALSE(fac.solve(bad));
}

TEST(SubspaceOps, EqualSubspaces) {
    RationalField q;
    auto u = Subspace<RationalField>::span(q, 3, {{1, 2, 3}, {0, 1, 1}});
    auto ops = subspace_ops(u, u);
    EXPECT_EQ(ops.sum, u);
    EXPECT_EQ(ops.intersection, u);
    EXPECT_TRUE(ops.contains);
}

TEST(SubspaceOps, ComplementaryCoordinates) {
    RationalField q;
    auto u = Subspace<RationalField>::span(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    auto v = Subspace<RationalField>::span(q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    auto ops = subspace_ops(u, v);
    EXPECT_EQ(ops.intersection.dim(), 0u);
    EXPECT_EQ(ops.sum, Subspace<RationalField>::full(q, 4));
    EXPECT_FALSE(ops.contains);
}

TEST(SubspaceOps, DiagonalAndAntidiagonal) {
    RationalField q;
    auto u = Subspace<RationalField>::span(q, 2, {{1, 1}});
    auto v = Subspace<RationalField>::span(q, 2, {{1, -1}});
    auto ops = subspace_ops(u, v);
    EXPECT_EQ(ops.intersection.dim(), 0u);
    EXPECT_EQ(ops.sum.dim(), 2u);
}

TEST(SubspaceOps, MismatchThrows) {
    RationalField q;
    EXPECT_THROW(subspace_sum(Subspace<RationalField>(q, 2), Subspace<RationalField>(q, 3)),
                 std::invalid_argument);
}

// Randomized properties over both field kinds.

template <class K>
class LinalgProperties : public ::testing::Test {};

struct Q { static RationalField make() { return {}; } };
struct F7 { static PrimeField make() { return PrimeField(7); } };
using FieldMakers = ::testing::Types<Q, F7>;
TYPED_TEST_SUITE(LinalgProperties, FieldMakers);

TYPED_TEST(LinalgProperties, RrefIdempotentAndRankNullity) {
    auto k = TypeParam::make();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = random_matrix(k, rng, 1 + rng() % 6, 1 + rng() % 6);
        auto r = rref(m);
        EXPECT_EQ(rref(r), r);
        auto ker = kernel_basis(m);
        EXPECT_EQ(rank(r) + ker.dim(), m.cols());
        for (auto& v : ker.vectors()) EXPECT_TRUE(is_zero_vector<decltype(k)>(m * v));
    }
}

TYPED_TEST(LinalgProperties, SolveIsSound) {
    auto k = TypeParam::make();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 5;
        auto a = random_matrix(k, rng, r, 1 + rng() % 5);
        auto b = random_matrix(k, rng, r, 1 + rng() % 3);
        if (auto x = solve(a, b)) {
            EXPECT_EQ(a * *x, b);
        }
    }
}

TYPED_TEST(LinalgProperties, SumIntersectionDimensionFormula) {
    auto k = TypeParam::make();
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 4;
        auto u = Subspace<decltype(k)>::from_rows(random_matrix(k, rng, rng() % 4, n));
        auto v = Subspace<decltype(k)>::from_rows(random_matrix(k, rng, rng() % 4, n));
        auto ops = subspace_ops(u, v);
        EXPECT_EQ(ops.sum.dim() + ops.intersection.dim(), u.dim() + v.dim());
        EXPECT_TRUE(ops.sum.contains(u));
        EXPECT_TRUE(u.contains(ops.intersection));
        EXPECT_TRUE(v.contains(ops.intersection));
    }
}

TEST(ModularConsistency, RationalRankDominatesModularRank) {
    std::mt19937 rng(31);
    RationalField q;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows)
            for (auto& e : row) e = long(rng() % 11) - 5;
        auto rq = rank(ints(q, rows));
        for (unsigned p : {3u, 5u, 101u}) EXPECT_GE(rq, rank(ints(PrimeField(p), rows)));
    }
}
