#include "structcon/oracle.hpp"
#include "structcon/symfn.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

TEST(Kostka, KnownValues) {
    EXPECT_EQ(kostka(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(kostka(Partition{3, 2}, Partition{2, 2, 1}), 2);
    EXPECT_EQ(kostka(Partition{2, 2}, Partition{1, 1, 1, 1}), 2);
    EXPECT_EQ(kostka(Partition{3, 2, 1}, Partition{1, 1, 1, 1, 1, 1}), 16);
    EXPECT_EQ(kostka(Partition{2, 1}, Partition{3}), 0);
    EXPECT_EQ(kostka(Partition{2, 1}, Index{1, 2}), 1);
}

TEST(Kostka, SchurTermCount) {
    EXPECT_EQ(schur(Partition{2, 1}, 3).num_terms(), 7u);  // 6 rearrangements of 210 plus 111
    EXPECT_EQ(schur(Partition{2, 1}, 3).coeff({1, 1, 1}), 2);
    EXPECT_EQ(ssyt_list(Partition{2, 1}, 3).size(), 8u);
}

TEST(Kostka, UnitriangularOnDominance) {
    for (int k = 1; k <= 6; ++k)
        for (const auto& lam : partitions_of(k))
            for (const auto& mu : partitions_of(k)) {
                Integer v = kostka(lam, mu);
                if (lam.parts() == mu.parts()) EXPECT_EQ(v, 1);
                else if (v != 0) EXPECT_TRUE(dominance_leq(lam.parts(), mu.parts()));
            }
}

TEST(InverseKostka, MonomialToSchur) {
    CoeffMap m2{{{2}, 1}};
    EXPECT_EQ(nonzero(monomial_to_schur(m2, 2)), (CoeffMap{{{2}, 1}, {{1, 1}, -1}}));
    EXPECT_EQ(inverse_kostka(Partition{3}, Partition{1, 1, 1}), 1);
    EXPECT_EQ(inverse_kostka(Partition{2, 1}, Partition{1, 1, 1}), -2);
}

TEST(Structure, SmallProducts) {
    EXPECT_EQ(nonzero(structure_constants_classic(SymBasis::s, Partition{1}, Partition{1})),
              (CoeffMap{{{2}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(nonzero(structure_constants_classic(SymBasis::s, Partition{2, 1}, Partition{1})),
              (CoeffMap{{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}}));
    EXPECT_EQ(nonzero(structure_constants_classic(SymBasis::m, Partition{1}, Partition{1})),
              (CoeffMap{{{2}, 1}, {{1, 1}, 2}}));
    EXPECT_EQ(nonzero(structure_constants_classic(SymBasis::h, Partition{2}, Partition{1})), (CoeffMap{{{2, 1}, 1}}));
}

TEST(Structure, TruncationNeedsEnoughVariables) {
    EXPECT_THROW(structure_constants_classic(SymBasis::s, Partition{1, 1, 1}, Partition{1}, 2), std::domain_error);
}

TEST(LittlewoodRichardson, KnownAndSymmetric) {
    EXPECT_EQ(littlewood_richardson(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}), 2);
    EXPECT_EQ(littlewood_richardson(Partition{4, 2}, Partition{2, 1}, Partition{2, 1}), 1);
    EXPECT_EQ(littlewood_richardson(Partition{3, 3}, Partition{2, 1}, Partition{2}), 0);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b))
                    for (const auto& lam : partitions_of(a + b)) {
                        Integer c = littlewood_richardson(lam, mu, nu);
                        EXPECT_GE(c, 0);
                        EXPECT_EQ(c, littlewood_richardson(lam, nu, mu));
                        EXPECT_EQ(c, littlewood_richardson(lam.conjugate(), mu.conjugate(), nu.conjugate()));
                    }
}

TEST(Structure, AgreesWithOracleForEveryClassicBasis) {
    for (auto b : {SymBasis::m, SymBasis::p, SymBasis::e, SymBasis::h, SymBasis::s})
        for (int a = 1; a <= 2; ++a)
            for (int c = 1; c <= 2; ++c)
                for (const auto& lam : partitions_of(a))
                    for (const auto& mu : partitions_of(c))
                        EXPECT_EQ(nonzero(structure_constants_classic(b, lam, mu)),
                                  oracle_structure(b, lam.parts(), mu.parts()))
                            << basis_name(b) << " " << format_index(lam.parts()) << " * " << format_index(mu.parts());
}

TEST(Expand, PowerSumIsNotSchurPositive) {
    SparsePoly p2 = expand_classic(SymBasis::p, Partition{2}, 3);
    EXPECT_EQ(nonzero(extract_in_basis(p2, SymBasis::s)), (CoeffMap{{{2}, 1}, {{1, 1}, -1}}));
}
