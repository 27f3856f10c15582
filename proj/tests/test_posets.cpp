#include "structcon/posets.hpp"
#include "structcon/symfn.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {

// sum over [x, y] of mu(z, y) is 1 when x = y, else 0
void expect_mobius_inverts_zeta(const Poset& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) {
                EXPECT_EQ(mobius(p, x, y), 0);
                continue;
            }
            Integer s = 0;
            for (auto z : p.interval(x, y)) s += mobius(p, z, y);
            EXPECT_EQ(s, x == y ? 1 : 0) << p.name() << " " << format_index(p.element(x)) << " .. "
                                         << format_index(p.element(y));
        }
}

}  // namespace

TEST(Mobius, ThreeChainIsZero) {
    Poset q3 = Poset::dominance_partitions(3);
    EXPECT_EQ(mobius(q3, Index{3}, Index{1, 1, 1}), 0);
    EXPECT_EQ(mobius(q3, Index{3}, Index{2, 1}), -1);
    EXPECT_EQ(mobius(q3, Index{2, 1}, Index{2, 1}), 1);
}

TEST(Mobius, ChainCountsSplit) {
    Poset q3 = Poset::dominance_partitions(3);
    auto s = mobius_split(q3, *q3.find(Index{3}), *q3.find(Index{1, 1, 1}));
    EXPECT_EQ(s.plus, 1);   // 3 < 21 < 111
    EXPECT_EQ(s.minus, 1);  // 3 < 111
}

TEST(Mobius, InvertsZetaOnPartitions) {
    for (int m = 0; m <= 6; ++m) expect_mobius_inverts_zeta(Poset::dominance_partitions(m));
}

TEST(Mobius, InvertsZetaOnCompositionsAndWeak) {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) expect_mobius_inverts_zeta(Poset::dominance_strong_compositions(n, k));
    for (int k = 0; k <= 3; ++k) expect_mobius_inverts_zeta(Poset::dominance_weak(3, k));
}

TEST(Mobius, ValuesInSignedUnitOnPartitions) {
    for (int m = 0; m <= 7; ++m) {
        Poset p = Poset::dominance_partitions(m);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y) {
                Integer v = mobius(p, x, y);
                EXPECT_TRUE(v >= -1 && v <= 1);
            }
    }
}

TEST(Mobius, EnumeratedChainsMatchCounts) {
    Poset p = Poset::dominance_partitions(5);
    auto x = *p.find(Index{5}), y = *p.find(Index{1, 1, 1, 1, 1});
    auto counts = chain_counts(p, x, y);
    for (std::size_t len = 0; len < counts.size(); ++len)
        EXPECT_EQ(Integer(static_cast<long>(enumerate_chains(p, Index{5}, Index{1, 1, 1, 1, 1}, static_cast<int>(len)).size())),
                  counts[len]);
}

TEST(Transition, ChainsEqualsBacksub) {
    for (int k = 1; k <= 6; ++k) {
        const auto& kc = kostka_data(k, k, InversionMode::chains);
        const auto& kb = kostka_data(k, k, InversionMode::backsub);
        EXPECT_TRUE(*kc.inverse == *kb.inverse);
        EXPECT_TRUE((*kb.kostka * *kb.inverse).is_identity());
    }
}

TEST(Transition, RejectsEntryOutsideSupport) {
    auto p = std::make_shared<const Poset>(Poset::dominance_partitions(3));
    TransitionMatrix m(p, Support::row_leq_col);
    EXPECT_THROW(m.set(*p->find(Index{1, 1, 1}), *p->find(Index{3}), Rational(1)), std::domain_error);
}

TEST(Transition, NonUnitDiagonalInverse) {
    auto p = std::make_shared<const Poset>(Poset::dominance_partitions(2));
    TransitionMatrix m(p, Support::row_leq_col);
    std::size_t a = *p->find(Index{2}), b = *p->find(Index{1, 1});
    m.set(a, a, 2);
    m.set(a, b, 1);
    m.set(b, b, 3);
    for (auto mode : {InversionMode::chains, InversionMode::backsub}) {
        TransitionMatrix inv = invert_triangular(m, mode);
        EXPECT_TRUE((m * inv).is_identity());
        EXPECT_EQ(inv.get(a, b), Rational(-1, 6));
    }
}
