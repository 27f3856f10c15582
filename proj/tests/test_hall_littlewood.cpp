#include "structcon/hall_littlewood.hpp"
#include "structcon/oracle.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

TEST(HallLittlewood, TwoOneHasKnownMonomialCoefficient) {
    // P_21 = m_21 + (2 - t - t^2) m_111
    for (Rational t : {Rational(0), Rational(1, 2), Rational(-1), Rational(2), Rational(-3, 7)}) {
        SparsePoly p = hl_expand(Partition{2, 1}, t, 3);
        EXPECT_EQ(p.coeff({2, 1, 0}), 1);
        EXPECT_EQ(p.coeff({1, 1, 1}), 2 - t - t * t);
    }
}

TEST(HallLittlewood, TZeroIsSchur) {
    for (int k = 1; k <= 5; ++k)
        for (const auto& lam : partitions_of(k)) EXPECT_EQ(hl_expand(lam, 0, k), schur(lam, k));
}

TEST(HallLittlewood, TableauRouteMatchesSymmetrization) {
    for (Rational t : {Rational(0), Rational(1, 2), Rational(-1), Rational(3)})
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n)
                for (const auto& lam : partitions_of(k, n)) {
                    if (hl_normalization(lam, t, n) == 0) continue;
                    EXPECT_EQ(hl_expand(lam, t, n), hl_symmetrization_oracle(lam, t, n))
                        << format_index(lam.parts()) << " t=" << to_string(t) << " n=" << n;
                }
}

TEST(HallLittlewood, ProductOfOnes) {
    EXPECT_EQ(nonzero(hl_structure(Partition{1}, Partition{1}, Rational(1, 2))),
              (CoeffMap{{{2}, 1}, {{1, 1}, Rational(3, 2)}}));
    EXPECT_EQ(nonzero(schur_p_structure(Partition{1}, Partition{1})), (CoeffMap{{{2}, 1}}));
}

TEST(HallLittlewood, SchurPConstantsIntegral) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    if (!lam.is_strict() || !mu.is_strict()) continue;
                    for (const auto& [nu, c] : schur_p_structure(lam, mu)) EXPECT_TRUE(is_integral(c));
                }
}

TEST(HallLittlewood, StructureMatchesOracle) {
    for (Rational t : {Rational(0), Rational(1, 2)})
        for (const auto& lam : partitions_of(2))
            for (const auto& mu : partitions_of(1))
                EXPECT_EQ(nonzero(hl_structure(lam, mu, t)), nonzero(oracle_structure(HLBasis{t}, lam.parts(), mu.parts())));
}

TEST(HallLittlewood, TEqualsOneRejected) {
    EXPECT_THROW(hl_expand(Partition{1}, 1, 2), std::domain_error);
    EXPECT_THROW(schur_p_expand(Partition{1, 1}, 2), std::domain_error);
}
