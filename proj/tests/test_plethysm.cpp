#include "structcon/plethysm.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

TEST(Plethysm, PowerSumsCompose) {
    EXPECT_EQ(nonzero(plethysm_monomial_coeffs(SymBasis::p, Partition{2}, SymBasis::p, Partition{2}, 4)),
              (CoeffMap{{{4}, 1}}));
    EXPECT_EQ(nonzero(plethysm_monomial_coeffs(SymBasis::e, Partition{2}, SymBasis::p, Partition{2}, 4)),
              (CoeffMap{{{2, 2}, 1}}));
}

TEST(Plethysm, KnownSchurExpansions) {
    EXPECT_EQ(nonzero(plethysm_schur_coeffs(SymBasis::h, Partition{2}, SymBasis::h, Partition{2}, 4)),
              (CoeffMap{{{4}, 1}, {{2, 2}, 1}}));
    EXPECT_EQ(nonzero(plethysm_schur_coeffs(SymBasis::s, Partition{2, 1}, SymBasis::h, Partition{2}, 6)),
              (CoeffMap{{{5, 1}, 1}, {{4, 2}, 1}, {{3, 2, 1}, 1}}));
    EXPECT_EQ(nonzero(plethysm_schur_coeffs(SymBasis::h, Partition{3}, SymBasis::h, Partition{3}, 9)),
              (CoeffMap{{{9}, 1}, {{7, 2}, 1}, {{6, 3}, 1}, {{5, 2, 2}, 1}, {{4, 4, 1}, 1}}));
    EXPECT_EQ(nonzero(plethysm_schur_coeffs(SymBasis::p, Partition{2}, SymBasis::s, Partition{1}, 2)),
              (CoeffMap{{{2}, 1}, {{1, 1}, -1}}));
}

TEST(Plethysm, TrivialSubstitutions) {
    for (auto b : {SymBasis::m, SymBasis::e, SymBasis::h, SymBasis::s, SymBasis::p})
        for (const auto& lam : partitions_of(3)) {
            CoeffMap direct = nonzero(to_monomial_basis(b, lam, 3));
            EXPECT_EQ(nonzero(plethysm_monomial_coeffs(b, lam, SymBasis::p, Partition{1}, 3)), direct);
            EXPECT_EQ(nonzero(plethysm_monomial_coeffs(SymBasis::p, Partition{1}, b, lam, 3)), direct);
        }
}

TEST(Plethysm, TooFewVariablesForSchur) {
    EXPECT_THROW(plethysm_schur_coeffs(SymBasis::s, Partition{2, 1}, SymBasis::h, Partition{2}, 3), std::domain_error);
}

TEST(Plethysm, VariableBound) {
    EXPECT_THROW(plethysm_monomial_coeffs(SymBasis::h, Partition{2}, SymBasis::h, Partition{3}, 4, 10), resource_error);
}
