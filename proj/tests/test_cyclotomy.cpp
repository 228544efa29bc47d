#include <gtest/gtest.h>

#include "cyclo/cyclotomy.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

Cyclotomy f343() {
    FieldOptions fo;
    fo.modulus = std::vector<std::uint64_t>{4, 0, 6, 1};
    return Cyclotomy::build(std::make_shared<const Field>(Field::build(7, 3, fo)), 6);
}

IntMatrix table(const ref::Table& t) { return oracle::from_table(t); }

}  // namespace

TEST(Cyclotomy, SingleEntries) {
    EXPECT_EQ(f343()(0, 3), 14);
    EXPECT_EQ(fixture::build(131, 1, 10, 2)(0, 8), 4);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {7, 1}, {3, 3}, {5, 2}}) {
        const auto c = fixture::build(p, n, 1);
        EXPECT_EQ(c(0, 0), c.q() - 2);
        EXPECT_TRUE(verify_lemma21(c).all_pass());
    }
}

TEST(Cyclotomy, Parameters) {
    const auto c = f343();
    EXPECT_EQ(c.q(), 343);
    EXPECT_EQ(c.k(), 57);
    EXPECT_EQ(c.qprime(), 3);
    EXPECT_EQ(fixture::build(37, 1, 4, 2).qprime(), 2);
    EXPECT_EQ(fixture::build(13, 1, 3).qprime(), 0);
}

TEST(Cyclotomy, PrintedMatrices) {
    EXPECT_EQ(f343().matrix(), table(ref::kA343));
    EXPECT_EQ(fixture::build(131, 1, 10, 2).matrix(), table(ref::kA131));
    EXPECT_EQ(fixture::build(37, 1, 4, 2).matrix(), table(ref::kA37));
    EXPECT_EQ(fixture::build(101, 1, 4, 2).matrix(), table(ref::kA101));
    EXPECT_EQ(fixture::build(197, 1, 4, 2).matrix(), table(ref::kA197));
    EXPECT_EQ(fixture::build(73, 1, 8, 5).matrix(), table(ref::kA73));
}

TEST(Cyclotomy, PrintedDerivedMatrices) {
    const auto dm = fixture::build(73, 1, 8, 5).derived();
    EXPECT_EQ(dm.a, table(ref::kA73));
    EXPECT_EQ(dm.m, table(ref::kM73));
    EXPECT_EQ(dm.b, table(ref::kB73));
    EXPECT_EQ(dm.s, table(ref::kS73));
    EXPECT_EQ(fixture::build(37, 1, 4, 2).derived().b, table(ref::kB37));
    EXPECT_EQ(fixture::build(101, 1, 4, 2).derived().b, table(ref::kB101));
    EXPECT_EQ(fixture::build(197, 1, 4, 2).derived().b, table(ref::kB197));
}

TEST(Cyclotomy, ShiftedMatrices) {
    const auto c131 = fixture::build(131, 1, 10, 2);
    EXPECT_EQ(c131.shifted(0), table(ref::kA131));
    EXPECT_EQ(c131.shifted(5), table(ref::kA131).transpose());
    const auto c = f343();
    const IntMatrix p = IntMatrix::permutation(6, 2);
    EXPECT_EQ(c.shifted(2), p * c.matrix() * p.transpose());
    EXPECT_EQ(c.shifted(-4), c.shifted(2));
}

TEST(Cyclotomy, RowSums) {
    const IntMatrix a = table(ref::kA131);
    BigInt r0 = 0, r5 = 0;
    for (std::size_t j = 0; j < 10; ++j) {
        r0 += a(0, j);
        r5 += a(5, j);
    }
    EXPECT_EQ(r0, 13);
    EXPECT_EQ(r5, 12);
    const IntMatrix b = table(ref::kA343);
    BigInt r3 = 0;
    for (std::size_t j = 0; j < 6; ++j) r3 += b(3, j);
    EXPECT_EQ(r3, 56);
}

TEST(Cyclotomy, IndicesArePeriodic) {
    const auto c = fixture::build(31, 1, 6);
    for (std::int64_t i = -12; i < 12; ++i)
        for (std::int64_t j = -12; j < 12; ++j) ASSERT_EQ(c(i, j), c(i + 6, j - 18));
}

TEST(Cyclotomy, DirectCountMatchesTable) {
    const auto c = fixture::build(7, 3, 9);
    for (std::int64_t i = 0; i < 9; ++i)
        for (std::int64_t j = 0; j < 9; ++j) ASSERT_EQ(c.count(i, j), c(i, j));
}

TEST(Cyclotomy, MatchesPairEnumerationOnFixtures) {
    for (const auto& s : fixture::contexts()) {
        if (s.q() > 2000) continue;
        SCOPED_TRACE(s.name());
        const auto c = fixture::build(s);
        const auto cs = oracle::cosets(c.field(), s.ell);
        for (std::size_t i = 0; i < s.ell; ++i)
            for (std::size_t j = 0; j < s.ell; ++j)
                ASSERT_EQ(c(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)), oracle::cyclotomic_number(c.field(), cs, i, j))
                    << i << "," << j;
    }
}

TEST(Cyclotomy, IdentitiesOnFixtures) {
    for (const auto& s : fixture::contexts()) {
        SCOPED_TRACE(s.name());
        const auto c = fixture::build(s);
        const auto basic = verify_lemma21(c);
        const auto more = verify_cyclotomy_identities(c);
        EXPECT_TRUE(basic.all_pass()) << Json(basic).dump();
        EXPECT_TRUE(more.all_pass()) << Json(more).dump();
        const auto dm = c.derived();
        EXPECT_EQ(dm.m, IntMatrix::permutation(static_cast<std::size_t>(s.ell), c.qprime()) * dm.a);
    }
}

TEST(Cyclotomy, GeneratorChangePermutesClasses) {
    // g' = g^t with gcd(t, q-1) = 1 relabels classes by i -> i t^{-1} mod l.
    const auto f = std::make_shared<const Field>(Field::build(31, 1));
    const auto c = Cyclotomy::build(f, 6);
    const std::uint32_t gp = f->exp(7).index;
    FieldOptions fo;
    fo.generator = gp;
    const auto c2 = Cyclotomy::build(std::make_shared<const Field>(Field::build(31, 1, fo)), 6);
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t j = 0; j < 6; ++j) EXPECT_EQ(c2(i, j), c(7 * i, 7 * j));
}

TEST(Cyclotomy, Errors) {
    const auto f = std::make_shared<const Field>(Field::build(13, 1));
    try {
        Cyclotomy::build(f, 5);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidEll);
    }
    try {
        Cyclotomy::build(f, 0);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidEll);
    }
    try {
        Cyclotomy::build(f, 1).derived();
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EllTooSmall);
    }
    try {
        Cyclotomy::build(f, 1).class_of(f->zero());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
    }
}
