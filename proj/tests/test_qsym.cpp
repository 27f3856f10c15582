#include "structcon/oracle.hpp"
#include "structcon/qsym.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
Rational R(long p, long q = 1) { return Rational(p, q); }
}  // namespace

TEST(Qsym, FundamentalTwoTwo) {
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::F, {2, 2}, 4)),
              (CoeffMap{{{1, 1, 1, 1}, 1}, {{1, 1, 2}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}}));
}

TEST(Qsym, DualImmaculateTwoTwo) {
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::dimm, {2, 2}, 4)),
              (CoeffMap{{{1, 1, 1, 1}, 3}, {{1, 1, 2}, 2}, {{1, 2, 1}, 2}, {{1, 3}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}}));
}

TEST(Qsym, QuasiSchurTwoTwo) {
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::qschur, {2, 2}, 4)),
              (CoeffMap{{{1, 1, 1, 1}, 2}, {{1, 1, 2}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}}));
}

TEST(Qsym, KostkaCounts) {
    EXPECT_EQ(immaculate_kostka({2, 2}, {1, 2, 1}), 2);
    EXPECT_EQ(qschur_kostka({2, 2}, {1, 2, 1}), 1);
    EXPECT_EQ(pcomb_kostka({1, 1, 2}, {1, 1, 2}), 2);
}

TEST(Qsym, CombinatorialPowerSum) {
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::pcomb, {1, 1, 2}, 4)), (CoeffMap{{{1, 1, 2}, 2}, {{2, 2}, 1}}));
}

// z-factor formula values. The golden case in the acceptance suite has other
// (1,3) and (4) coefficients.
TEST(Qsym, PowerSumTypesOneOneTwo) {
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::psi, {1, 1, 2}, 4)),
              (CoeffMap{{{1, 1, 2}, 2}, {{2, 2}, 1}, {{1, 3}, R(4, 3)}, {{4}, R(1, 2)}}));
    EXPECT_EQ(nonzero(qsym_to_M(QBasis::phi, {1, 1, 2}, 4)),
              (CoeffMap{{{1, 1, 2}, 2}, {{2, 2}, 1}, {{1, 3}, 1}, {{4}, R(1, 3)}}));
}

TEST(Qsym, PowerSumsRefineSymmetricOnes) {
    // sum of Psi_alpha over rearrangements of lambda is p_lambda
    SparsePoly sum(4);
    for (const Index& a : {Index{1, 1, 2}, Index{1, 2, 1}, Index{2, 1, 1}}) sum += expand_qsym(QBasis::psi, a, 4);
    EXPECT_EQ(sum, expand_classic(SymBasis::p, Partition{2, 1, 1}, 4));
    SparsePoly sum2(4);
    for (const Index& a : {Index{1, 1, 2}, Index{1, 2, 1}, Index{2, 1, 1}}) sum2 += expand_qsym(QBasis::phi, a, 4);
    EXPECT_EQ(sum2, expand_classic(SymBasis::p, Partition{2, 1, 1}, 4));
}

TEST(Qsym, FundamentalStructureIsShuffle) {
    EXPECT_EQ(nonzero(qsym_structure(QBasis::F, {1}, {1})), (CoeffMap{{{2}, 1}, {{1, 1}, 1}}));
    CoeffMap got = nonzero(qsym_structure(QBasis::M, {1}, {1}));
    EXPECT_EQ(got, (CoeffMap{{{2}, 1}, {{1, 1}, 2}}));
}

TEST(Qsym, TransitionsAreInverse) {
    for (auto b : all_qbases()) {
        if (b == QBasis::M) continue;
        for (int k = 1; k <= 5; ++k) {
            const auto& d = qsym_data(b, k, k);
            EXPECT_TRUE((*d.to_M * *d.inverse).is_identity()) << basis_name(b) << " k=" << k;
        }
    }
}

TEST(Qsym, StructureMatchesOracle) {
    for (auto b : all_qbases())
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 2; ++t)
                for (const auto& a : strong_compositions_of(s))
                    for (const auto& c : strong_compositions_of(t))
                        EXPECT_EQ(nonzero(qsym_structure(b, a.parts(), c.parts())),
                                  nonzero(oracle_structure(b, a.parts(), c.parts())))
                            << basis_name(b);
}

TEST(Qsym, RejectsZeroPart) { EXPECT_THROW(qsym_to_M(QBasis::F, {1, 0}, 2), std::invalid_argument); }
