#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cyclo/matrix.hpp"
#include "cyclo/poly.hpp"
#include "oracles.hpp"

using namespace cyclo;

TEST(IntMatrix, ElementaryProducts) {
    EXPECT_EQ(IntMatrix::ones(2) * IntMatrix::ones(2), IntMatrix::ones(2) * BigInt(2));
    EXPECT_EQ(IntMatrix::unit(2, 0, 1) * IntMatrix::unit(2, 1, 0), IntMatrix::unit(2, 0, 0));
    EXPECT_EQ(IntMatrix::identity(5).trace(), 5);
}

TEST(IntMatrix, Permutations) {
    EXPECT_EQ(IntMatrix::permutation(3, 0), IntMatrix::identity(3));
    EXPECT_EQ(IntMatrix::permutation(4, 2) * IntMatrix::permutation(4, 2), IntMatrix::identity(4));
    const IntMatrix p = IntMatrix::permutation(7, 3);
    EXPECT_EQ(p * p.transpose(), IntMatrix::identity(7));
    const IntMatrix a = oracle::from_table(ref::kA131);
    const IntMatrix pa = IntMatrix::permutation(10, 5) * a;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) ASSERT_EQ(pa(i, j), a((i + 5) % 10, j));
}

TEST(IntMatrix, MinorAndTranspose) {
    const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(m.minor(1, 0), (IntMatrix{{2, 3}, {8, 9}}));
    EXPECT_EQ(m.transpose()(0, 2), 7);
    EXPECT_FALSE(m.is_symmetric());
    EXPECT_TRUE((m + m.transpose()).is_symmetric());
    EXPECT_TRUE((m - m).is_zero());
    EXPECT_EQ(oracle::from_table(ref::kB73), oracle::from_table(ref::kA73).minor(4, 0));
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(IntMatrix::identity(7)), 1);
    EXPECT_EQ(determinant(IntMatrix(0)), 1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {1, 1}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix::ones(3)), 0);
}

TEST(Determinant, BareissMatchesCofactorExpansion) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 1 + rng() % 5;
        IntMatrix m(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 19) - 9;
        if (t % 7 == 0 && d > 1)
            for (std::size_t j = 0; j < d; ++j) m(d - 1, j) = m(0, j) * 2;
        ASSERT_EQ(determinant(m), oracle::cofactor_det(m)) << t;
        ASSERT_EQ(rank(m) == d, oracle::cofactor_det(m) != 0);
    }
}

TEST(Determinant, PrintedTables) {
    EXPECT_EQ(determinant(oracle::from_table(ref::kA37)), -14);
    EXPECT_EQ(determinant(oracle::from_table(ref::kA73)), -512);
    EXPECT_EQ(determinant(oracle::from_table(ref::kB73)), -4096);
    EXPECT_EQ(oracle::cofactor_det(oracle::from_table(ref::kA73)), -512);
}

TEST(Rank, Basics) {
    EXPECT_EQ(rank(IntMatrix::ones(6)), 1u);
    EXPECT_EQ(rank(IntMatrix::identity(6)), 6u);
    EXPECT_EQ(rank(IntMatrix(4)), 0u);
    EXPECT_EQ(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
}

TEST(CharPoly, KnownPolynomials) {
    EXPECT_EQ(char_poly(oracle::from_table(ref::kA37)), (IntPoly{-14, -20, -4, -8, 1}));
    EXPECT_EQ(char_poly(IntMatrix::identity(2)), IntPoly::linear(1) * IntPoly::linear(1));
    const IntPoly q8{-8, 0, 1};
    EXPECT_EQ(char_poly(oracle::from_table(ref::kS73)), IntPoly::linear(8) * q8 * q8 * q8);
    EXPECT_EQ(char_poly(IntMatrix(0)), (IntPoly{1}));
}

TEST(CharPoly, CayleyHamiltonAndDeterminant) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 1 + rng() % 6;
        IntMatrix m(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 21) - 10;
        const IntPoly cp = char_poly(m);
        ASSERT_EQ(cp.degree(), static_cast<int>(d));
        ASSERT_TRUE(eval_at_matrix(cp, m).is_zero());
        ASSERT_EQ(cp.coeff(0) * (d % 2 ? -1 : 1), determinant(m));
        ASSERT_EQ(-cp.coeff(d - 1), m.trace());
    }
}

TEST(CharPoly, Annihilators) {
    const IntMatrix s = oracle::from_table(ref::kS73);
    const IntMatrix m = oracle::from_table(ref::kM73);
    EXPECT_TRUE(eval_at_matrix(IntPoly::linear(8) * IntPoly{-8, 0, 1}, s).is_zero());
    EXPECT_FALSE(eval_at_matrix(IntPoly{-8, 0, 1}, s).is_zero());
    EXPECT_TRUE(eval_at_matrix(IntPoly{1, -9, 1} * IntPoly{-8, 0, 1}, m).is_zero());
    EXPECT_EQ(eval_at_matrix(IntPoly{0, 1}, s), s);
}

TEST(Poly, ArithmeticAndText) {
    const IntPoly a{1, 1};
    EXPECT_EQ(a * a, (IntPoly{1, 2, 1}));
    EXPECT_EQ(a - a, IntPoly{});
    EXPECT_EQ((a + IntPoly{-1}).degree(), 1);
    EXPECT_EQ((IntPoly{-14, -20, -4, -8, 1})(BigInt(1)), -45);
    EXPECT_EQ((IntPoly{-14, -20, -4, -8, 1}).to_string(), "x^4 - 8x^3 - 4x^2 - 20x - 14");
}

TEST(RealRoots, IsolatesWithMultiplicity) {
    const IntPoly q8{-8, 0, 1};
    const auto roots = real_roots(IntPoly::linear(8) * q8 * q8 * q8);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(roots[0].value, -std::sqrt(8.0), 1e-12);
    EXPECT_EQ(roots[0].multiplicity, 3u);
    EXPECT_NEAR(roots[1].value, std::sqrt(8.0), 1e-12);
    EXPECT_EQ(roots[1].multiplicity, 3u);
    EXPECT_DOUBLE_EQ(roots[2].value, 8.0);
    EXPECT_EQ(roots[2].multiplicity, 1u);

    EXPECT_TRUE(real_roots(IntPoly{1, 0, 1}).empty());
    const auto r2 = real_roots(IntPoly{0, 0, 1});
    ASSERT_EQ(r2.size(), 1u);
    EXPECT_EQ(r2[0].value, 0.0);
    EXPECT_EQ(r2[0].multiplicity, 2u);
}

TEST(RealRoots, ClusteredRoots) {
    // (x - 1000)(x - 1001)(1000x - 1)(1000x - 2)
    const IntPoly p = IntPoly::linear(1000) * IntPoly::linear(1001) * IntPoly{-1, 1000} * IntPoly{-2, 1000};
    const auto roots = real_roots(p);
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_NEAR(roots[0].value, 0.001, 1e-15);
    EXPECT_NEAR(roots[1].value, 0.002, 1e-15);
    EXPECT_NEAR(roots[2].value, 1000.0, 1e-9);
    EXPECT_NEAR(roots[3].value, 1001.0, 1e-9);
}
