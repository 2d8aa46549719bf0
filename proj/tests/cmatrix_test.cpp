#include <gtest/gtest.h>

#include "kronreal/cmatrix.hpp"
#include "kronreal/error.hpp"
#include "kronreal/factorization.hpp"
#include "kronreal/random.hpp"
#include "test_support.hpp"

namespace kronreal {
namespace {

using oracle::naive_kron;
using oracle::naive_mul;

CMatrix diag2(Complex a, Complex b) { return CMatrix{{a, 0.0}, {0.0, b}}; }

TEST(Kron, IdentityTimesIdentity) { EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(3)), CMatrix::identity(6)); }

TEST(Kron, ScalarScales) {
    SplitMix64 rng(3);
    const CMatrix y = random_matrix(rng, 2, 3);
    EXPECT_EQ(kron(CMatrix{{2.0}}, y), 2.0 * y);
}

TEST(Kron, MatchesQuadrupleLoop) {
    const CMatrix x{{1.0, 2.0}, {3.0, 4.0}};
    const CMatrix y{{0.0, 1.0}, {1.0, 0.0}};
    const CMatrix k = kron(x, y);
    ASSERT_EQ(k.rows(), 4u);
    ASSERT_EQ(k.cols(), 4u);
    EXPECT_EQ(k, naive_kron(x, y));
    EXPECT_EQ(k(0, 1), Complex(1.0));
    EXPECT_EQ(k(2, 3), Complex(4.0));
    EXPECT_EQ(k(3, 0), Complex(3.0));
}

TEST(Kron, RectangularRandomMatchesLoop) {
    SplitMix64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const CMatrix x = random_matrix(rng, 1 + i % 3, 2 + i % 2);
        const CMatrix y = random_matrix(rng, 3 - i % 3, 1 + i % 4);
        EXPECT_EQ(kron(x, y), naive_kron(x, y));
    }
}

TEST(Kron, Associativity) {
    SplitMix64 rng(5);
    const CMatrix x = random_matrix(rng, 2, 3), y = random_matrix(rng, 3, 1), z = random_matrix(rng, 2, 2);
    EXPECT_LE(max_abs_diff(kron(kron(x, y), z), kron(x, kron(y, z))), 1e-12);
}

TEST(Kron, MixedProductRule) {
    SplitMix64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const CMatrix t = random_matrix(rng, 2, 3), x = random_matrix(rng, 3, 2);
        const CMatrix y = random_matrix(rng, 3, 1), z = random_matrix(rng, 1, 2);
        const CMatrix lhs = kron(t * x, y * z);
        const CMatrix rhs = kron(t, y) * kron(x, z);
        EXPECT_LE(frobenius_norm(lhs - rhs), 1e-10 * (1.0 + frobenius_norm(lhs)));
    }
}

TEST(MatMul, Identity) {
    SplitMix64 rng(1);
    const CMatrix y = random_matrix(rng, 3, 4);
    EXPECT_EQ(mat_mul(CMatrix::identity(3), y), y);
}

TEST(MatMul, ZeroAnnihilates) {
    SplitMix64 rng(2);
    EXPECT_EQ(mat_mul(random_matrix(rng, 3, 4), CMatrix::zeros(4, 2)), CMatrix::zeros(3, 2));
}

TEST(MatMul, MatchesTripleLoop) {
    SplitMix64 rng(7);
    const CMatrix x = random_matrix(rng, 3, 4), y = random_matrix(rng, 4, 2);
    const CMatrix expected = naive_mul(x, y);
    EXPECT_LE(frobenius_norm(mat_mul(x, y) - expected), 1e-15 * frobenius_norm(expected) * 4);
}

TEST(MatMul, DimensionMismatch) {
    try {
        (void)mat_mul(CMatrix(2, 3), CMatrix(2, 3));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(MatMul, EmptyInnerDimensionGivesZero) {
    EXPECT_EQ(mat_mul(CMatrix(2, 0), CMatrix(0, 3)), CMatrix::zeros(2, 3));
}

TEST(Solve, Identity) {
    SplitMix64 rng(8);
    const CMatrix rhs = random_matrix(rng, 4, 2);
    EXPECT_EQ(solve(CMatrix::identity(4), rhs), rhs);
}

TEST(Solve, Diagonal) {
    const CMatrix x = solve(diag2(2.0, 4.0), CMatrix{{2.0}, {8.0}});
    EXPECT_EQ(x, (CMatrix{{1.0}, {2.0}}));
}

TEST(Solve, RandomResidual) {
    SplitMix64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const CMatrix m = random_invertible(rng, 5, 1e6);
        const CMatrix rhs = random_matrix(rng, 5, 3);
        const CMatrix x = solve(m, rhs);
        EXPECT_LE(frobenius_norm(naive_mul(m, x) - rhs), 1e-10 * (1.0 + frobenius_norm(rhs)));
    }
}

TEST(Solve, SingularSignalled) {
    const CMatrix m{{1.0, 2.0}, {2.0, 4.0}};
    try {
        (void)solve(m, CMatrix::identity(2));
        FAIL() << "expected singular";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(Solve, PivotThresholdIsRelative) {
    // Scaling the whole matrix must not change the singularity verdict.
    CMatrix m{{1e-20, 0.0}, {0.0, 2e-20}};
    EXPECT_NO_THROW((void)solve(m, CMatrix::identity(2)));
    CMatrix near{{1.0, 1.0}, {1.0, 1.0 + 1e-15}};
    EXPECT_THROW((void)solve(near, CMatrix::identity(2)), Error);
}

TEST(Solve, ShapeChecks) {
    EXPECT_THROW((void)solve(CMatrix(2, 3), CMatrix(2, 1)), Error);
    EXPECT_THROW((void)solve(CMatrix::identity(2), CMatrix(3, 1)), Error);
}

TEST(Inverse, Identity) { EXPECT_EQ(inverse(CMatrix::identity(3)), CMatrix::identity(3)); }

TEST(Inverse, Diagonal) { EXPECT_EQ(inverse(diag2(2.0, -1.0)), diag2(0.5, -1.0)); }

TEST(Inverse, RandomResidual) {
    SplitMix64 rng(10);
    for (int i = 0; i < 20; ++i) {
        const CMatrix m = random_matrix(rng, 4, 4);
        EXPECT_LE(frobenius_norm(naive_mul(m, inverse(m)) - CMatrix::identity(4)), 1e-9);
    }
}

TEST(Inverse, EmptyMatrix) { EXPECT_EQ(inverse(CMatrix(0, 0)), CMatrix(0, 0)); }

TEST(Block2x2, IdentityBlocks) {
    EXPECT_EQ(block2x2(CMatrix::identity(2), CMatrix::zeros(2, 3), CMatrix::zeros(3, 2), CMatrix::identity(3)),
              CMatrix::identity(5));
}

TEST(Block2x2, Scalars) {
    const Complex a{1, 2}, b{3, 0}, c{0, -1}, d{5, 5};
    EXPECT_EQ(block2x2(CMatrix{{a}}, CMatrix{{b}}, CMatrix{{c}}, CMatrix{{d}}), (CMatrix{{a, b}, {c, d}}));
}

TEST(Block2x2, SplitRejoinRoundTrip) {
    SplitMix64 rng(12);
    const CMatrix m = random_matrix(rng, 5, 5);
    const CMatrix rebuilt = block2x2(m.block(0, 0, 2, 2), m.block(0, 2, 2, 3), m.block(2, 0, 3, 2), m.block(2, 2, 3, 3));
    EXPECT_EQ(rebuilt, m);
}

TEST(Block2x2, NonConformable) {
    EXPECT_THROW((void)block2x2(CMatrix(2, 2), CMatrix(3, 1), CMatrix(1, 2), CMatrix(1, 1)), Error);
}

TEST(Block2x2, EmptyBlocks) {
    const CMatrix d = CMatrix::identity(2);
    EXPECT_EQ(block2x2(CMatrix(0, 0), CMatrix(0, 2), CMatrix(2, 0), d), d);
}

TEST(IsIdempotent, TrivialCases) {
    EXPECT_TRUE(is_idempotent(CMatrix::identity(4), 1e-12));
    EXPECT_TRUE(is_idempotent(CMatrix::zeros(4, 4), 1e-12));
    EXPECT_FALSE(is_idempotent(2.0 * CMatrix::identity(2), 1e-12));
}

TEST(IsIdempotent, ObliqueProjection) {
    SplitMix64 rng(13);
    const CMatrix t = random_invertible(rng, 5, 1e4);
    CMatrix d = CMatrix::zeros(5, 5);
    d(0, 0) = d(1, 1) = 1.0;
    EXPECT_TRUE(is_idempotent(inverse(t) * d * t, 1e-9));
}

TEST(NumericalRank, DetectsDeficiency) {
    SplitMix64 rng(14);
    const CMatrix x = random_matrix(rng, 4, 2), y = random_matrix(rng, 2, 5);
    EXPECT_EQ(numerical_rank(x * y, 1e-9), 2u);
    EXPECT_EQ(numerical_rank(CMatrix::identity(3), 1e-9), 3u);
    EXPECT_EQ(numerical_rank(CMatrix::zeros(3, 3), 1e-9), 0u);
}

TEST(CMatrixInvariants, RejectsWrongLengthAndNonFinite) {
    EXPECT_THROW(CMatrix(2, 2, std::vector<Complex>(3)), Error);
    EXPECT_FALSE(all_finite(CMatrix{{Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}}));
}

TEST(RelativeResidual, Definition) {
    const CMatrix y = 10.0 * CMatrix::identity(1);
    EXPECT_DOUBLE_EQ(relative_residual(CMatrix{{11.0}}, y), 0.1);
    EXPECT_DOUBLE_EQ(relative_residual(CMatrix{{0.5}}, CMatrix{{0.0}}), 0.5);
}

}  // namespace
}  // namespace kronreal
